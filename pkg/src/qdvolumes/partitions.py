"""Partitions, symmetric group characters, central characters and the shifted
power sums used by the pillowcase bracket."""

from __future__ import annotations

import json
import os
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod

from . import kernels
from .exact import zeta_nonpositive

HALF = Fraction(1, 2)
CACHE_FORMAT_VERSION = 1


class SizeMismatch(ValueError):
    pass


class PaddingError(ValueError):
    """The requested cycle type cannot be completed to the ambient size."""


@lru_cache(maxsize=None)
def partitions_of(n: int, largest: int | None = None) -> tuple[tuple[int, ...], ...]:
    """All partitions of n (parts at most ``largest``), reverse lexicographic."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if largest is None:
        largest = n
    if n == 0:
        return ((),)
    out = []
    for k in range(min(n, largest), 0, -1):
        for rest in partitions_of(n - k, k):
            out.append((k,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def balanced_partitions_of(n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(lam for lam in partitions_of(n) if is_balanced(lam))


def dim_irrep(lam) -> int:
    return kernels.dim(tuple(lam))


def character_value(lam, rho) -> int:
    lam, rho = tuple(lam), tuple(rho)
    if sum(lam) != sum(rho):
        raise SizeMismatch(f"|lambda|={sum(lam)} but |rho|={sum(rho)}")
    # longer cycles first keeps the memo small
    return kernels.character(lam, tuple(sorted(rho, reverse=True)))


def class_size(rho) -> int:
    n = sum(rho)
    z = 1
    for k, m in Counter(rho).items():
        z *= k ** m * factorial(m)
    return factorial(n) // z


def pad_cycle_type(core, n: int, filler: int = 1) -> tuple[int, ...]:
    core = tuple(core)
    rest = n - sum(core)
    if rest < 0 or rest % filler:
        raise PaddingError(f"cannot pad {core} with {filler}-cycles to size {n}")
    return tuple(sorted(core + (filler,) * (rest // filler), reverse=True))


def central_character(lam, core, filler: int = 1) -> Fraction:
    """f_rho(lam) = |C_rho| chi^lam(rho) / dim lam, rho = core padded with ``filler``-cycles."""
    lam = tuple(lam)
    rho = pad_cycle_type(core, sum(lam), filler)
    return Fraction(class_size(rho) * character_value(lam, rho), dim_irrep(lam))


def f_twos(lam) -> Fraction:
    """f_{2,...,2}(lam); zero exactly when lam is not balanced."""
    n = sum(lam)
    if n % 2:
        raise PaddingError("f_{2,...,2} needs an even size")
    return central_character(lam, (), 2)


def f_nu_twos(lam, nu) -> Fraction:
    return central_character(lam, tuple(nu), 2)


def f_cycle(lam, m: int) -> Fraction:
    """f_{m,1,...,1}(lam)."""
    return central_character(lam, (m,), 1)


def pbar_k(lam, k: int) -> Fraction:
    total = Fraction(0)
    for i, part in enumerate(lam, start=1):
        a = Fraction(2 * (part - i) + 1, 2)
        b = Fraction(-2 * i + 1, 2)
        sa = -1 if (part - i + 1) % 2 else 1
        sb = -1 if (-i + 1) % 2 else 1
        total += sa * a ** k - sb * b ** k
    return total + c_k(k)


def p_k(lam, k: int) -> Fraction:
    if k < 1:
        raise ValueError("p_k needs k >= 1")
    total = Fraction(0)
    for i, part in enumerate(lam, start=1):
        total += Fraction(2 * (part - i) + 1, 2) ** k - Fraction(-2 * i + 1, 2) ** k
    return total + (1 - Fraction(1, 2 ** k)) * zeta_nonpositive(k)


@lru_cache(maxsize=None)
def _sech_half_coeffs(n: int) -> tuple[Fraction, ...]:
    # Taylor coefficients of 1/(e^{z/2} + e^{-z/2}) up to z^n
    denom = [Fraction(0)] * (n + 1)
    for j in range(0, n + 1, 2):
        denom[j] = Fraction(2, 2 ** j * factorial(j))
    inv = [Fraction(0)] * (n + 1)
    inv[0] = 1 / denom[0]
    for i in range(1, n + 1):
        inv[i] = -sum(denom[j] * inv[i - j] for j in range(1, i + 1)) / denom[0]
    return tuple(inv)


def c_k(k: int) -> Fraction:
    return factorial(k) * _sech_half_coeffs(k)[k]


def is_balanced(lam) -> bool:
    return pbar_k(lam, 0) == HALF


WEIGHT_VARIANTS = ("frobenius", "printed")


def bracket_weight(lam, variant: str = "frobenius") -> Fraction:
    """Weight of lam in the pillowcase bracket.

    ``frobenius`` is (dim/n!)^2 f_{2..2}^4, the count of monodromy tuples over
    the four corners; ``printed`` is (dim/n!) f_{2..2}, kept for comparison.
    """
    n = sum(lam)
    if n % 2:
        raise PaddingError("bracket weight needs an even size")
    ratio = Fraction(dim_irrep(lam), factorial(n))
    f = f_twos(lam)
    if variant == "frobenius":
        return ratio ** 2 * f ** 4
    if variant == "printed":
        return ratio * f
    raise ValueError(f"unknown weight variant {variant!r}")


def save_character_cache(path) -> int:
    """Write the character memo to ``path`` as versioned JSON; returns entry count."""
    entries = kernels.export_memo()
    payload = {
        "version": CACHE_FORMAT_VERSION,
        "entries": [[list(lam), list(rho), val] for (lam, rho), val in sorted(entries.items())],
    }
    tmp = f"{path}.tmp{os.getpid()}"
    with open(tmp, "w") as fh:
        json.dump(payload, fh)
    os.replace(tmp, path)
    return len(entries)


def load_character_cache(path) -> int:
    """Merge a cache file into the memo. Wrong version or bad JSON loads nothing."""
    try:
        with open(path) as fh:
            payload = json.load(fh)
    except (OSError, ValueError):
        return 0
    if not isinstance(payload, dict) or payload.get("version") != CACHE_FORMAT_VERSION:
        return 0
    entries = {}
    for lam, rho, val in payload.get("entries", []):
        entries[(tuple(lam), tuple(rho))] = int(val)
    kernels.import_memo(entries)
    return len(entries)


def central_characters_product(lam, mus) -> Fraction:
    return prod((f_cycle(lam, m) for m in mus), start=Fraction(1))
