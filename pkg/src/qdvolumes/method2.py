"""Second route to Z'(mu, nu).

The character ratio f_{nu,2..2}/f_{2..2} is interpolated on balanced
partitions as a polynomial in the p_k (weight k+1) and pbar_k (weight k);
each f_m is interpolated in the p_k alone. Z' is then a linear combination
of brackets of monomials, and a bracket only needs dim(lam) and the
character of the fixed-point-free involution, which the 2-quotient gives in
closed form. No general character value enters the bracket sums.
"""

from __future__ import annotations

import warnings
from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from . import cache, kernels
from .exact import QSeries, UnderdeterminedSystem, fraction_str, parse_fraction, solve_exact, zeta_nonpositive
from .partitions import class_size, f_cycle, f_nu_twos, f_twos, partitions_of, pbar_k, c_k
from .quasimodular import QMPolynomial, fit, required_order
from .strata import ProfilePair, weight

CODE_VERSION = "1"
HOLDOUT = 10


class InterpolationError(ArithmeticError):
    pass


class PureWeightWarning(UserWarning):
    pass


# -- the algebra generated by p_k and pbar_k --------------------------------


def generator_weight(g) -> int:
    kind, k = g
    return k + 1 if kind == "p" else k


def monomial_weight(m) -> int:
    return sum(generator_weight(g) for g in m)


@lru_cache(maxsize=None)
def lambda_bar_basis(cap: int, bars: bool = True) -> tuple:
    """Monomials of weight <= cap in p_k (k >= 1) and, if ``bars``, pbar_k (k >= 1).

    pbar_0 is left out: it is the constant 1/2 on balanced partitions.
    A monomial is a sorted tuple of generators ("p", k) / ("pb", k).
    """
    gens = [("p", k) for k in range(1, cap)]
    if bars:
        gens += [("pb", k) for k in range(1, cap + 1)]
    gens = sorted(g for g in gens if generator_weight(g) <= cap)
    out = [()]

    def grow(start, cur, w):
        for i in range(start, len(gens)):
            g = gens[i]
            nw = w + generator_weight(g)
            if nw <= cap:
                m = cur + (g,)
                out.append(m)
                grow(i, m, nw)

    grow(0, (), 0)
    return tuple(sorted(out, key=lambda m: (monomial_weight(m), m)))


def _mul(a: dict, b: dict) -> dict:
    out: dict = defaultdict(Fraction)
    for m1, c1 in a.items():
        for m2, c2 in b.items():
            out[tuple(sorted(m1 + m2))] += c1 * c2
    return {m: c for m, c in out.items() if c}


@lru_cache(maxsize=None)
def _p_const(k: int) -> Fraction:
    return (1 - Fraction(1, 2 ** k)) * zeta_nonpositive(k)


def generator_values(lam, gens) -> dict:
    """p_k and pbar_k at lam, with integer sums over (2 lam_i - 2i + 1)^k."""
    lam = tuple(lam)
    out = {}
    for kind, k in gens:
        s = 0
        for i, part in enumerate(lam, start=1):
            a, b = 2 * (part - i) + 1, 1 - 2 * i
            if kind == "p":
                s += a ** k - b ** k
            else:
                sa = -1 if (part - i + 1) % 2 else 1
                sb = -1 if (-i + 1) % 2 else 1
                s += sa * a ** k - sb * b ** k
        const = _p_const(k) if kind == "p" else c_k(k)
        out[(kind, k)] = Fraction(s, 2 ** k) + const
    return out


def evaluate(poly: dict, lam) -> Fraction:
    gens = sorted({g for m in poly for g in m})
    vals = generator_values(lam, gens)
    total = Fraction(0)
    for m, c in poly.items():
        v = c
        for g in m:
            v *= vals[g]
        total += v
    return total


# -- 2-quotients ------------------------------------------------------------


def _beta(lam, length):
    lam = tuple(lam) + (0,) * (length - len(lam))
    return [lam[i] + length - 1 - i for i in range(length)]


def two_quotient(lam):
    """(empty 2-core?, quotient on even beads, quotient on odd beads)."""
    lam = tuple(lam)
    L = len(lam) + len(lam) % 2
    beads = _beta(lam, L)
    runners = ([b // 2 for b in beads if b % 2 == 0], [b // 2 for b in beads if b % 2 == 1])
    if len(runners[0]) != len(runners[1]):
        return False, (), ()
    quot = []
    for r in runners:
        r = sorted(r, reverse=True)
        n = len(r)
        quot.append(tuple(x for x in (r[i] - (n - 1 - i) for i in range(n)) if x))
    return True, quot[0], quot[1]


def from_two_quotient(q0, q1):
    """The partition with empty 2-core and 2-quotient (q0, q1)."""
    r = max(len(q0), len(q1))
    beads = []
    for res, q in ((0, q0), (1, q1)):
        q = tuple(q) + (0,) * (r - len(q))
        beads += [2 * (q[j] + r - 1 - j) + res for j in range(r)]
    beads.sort(reverse=True)
    L = 2 * r
    return tuple(x for x in (beads[i] - (L - 1 - i) for i in range(L)) if x)


def _domino_sign(lam) -> int:
    # Sliding beads down their runners to the bottom swaps the order of an
    # even-runner and an odd-runner bead once per jump, and each jump over
    # an occupied position costs a sign; so count the pairs that end up in
    # a different relative order.
    lam = tuple(lam)
    L = len(lam) + len(lam) % 2
    beads = _beta(lam, L)
    a = sorted(b for b in beads if b % 2 == 0)
    b = sorted(x for x in beads if x % 2 == 1)
    flips = 0
    for j, x in enumerate(a):
        for k, y in enumerate(b):
            if (x < y) != (j <= k):
                flips += 1
    return -1 if flips % 2 else 1


def _domino_sign_by_sliding(lam) -> int:
    lam = tuple(lam)
    L = len(lam) + len(lam) % 2
    beads = set(_beta(lam, L))
    sign = 1
    moved = True
    while moved:
        moved = False
        for b in sorted(beads):
            if b >= 2 and b - 2 not in beads:
                if b - 1 in beads:
                    sign = -sign
                beads.remove(b)
                beads.add(b - 2)
                moved = True
                break
    return sign


def chi_twos(lam) -> int:
    """chi^lam at the class (2,...,2), from the 2-quotient."""
    n = sum(lam)
    if n % 2:
        return 0
    empty, q0, q1 = two_quotient(lam)
    if not empty:
        return 0
    k0, k1 = sum(q0), sum(q1)
    return _domino_sign(lam) * comb(k0 + k1, k0) * kernels.dim(q0) * kernels.dim(q1)


@lru_cache(maxsize=None)
def balanced_from_quotients(n: int) -> tuple:
    """Balanced partitions of n, built from pairs of partitions of total size n/2."""
    if n % 2:
        return ()
    k = n // 2
    out = set()
    for k0 in range(k + 1):
        for q0 in partitions_of(k0):
            for q1 in partitions_of(k - k0):
                out.add(from_two_quotient(q0, q1))
    return tuple(sorted(out, reverse=True))


def bracket_weight_fast(lam, variant: str = "frobenius") -> Fraction:
    n = sum(lam)
    d = kernels.dim(tuple(lam))
    f = Fraction(class_size((2,) * (n // 2)) * chi_twos(lam), d)
    ratio = Fraction(d, factorial(n))
    if variant == "frobenius":
        return ratio ** 2 * f ** 4
    if variant == "printed":
        return ratio * f
    raise ValueError(f"unknown weight variant {variant!r}")


# -- interpolation ------------------------------------------------------------


def _interpolate(basis, sample_sizes, points, value, label):
    """Fit ``value`` on the partitions of successive sizes until the system has
    full rank, then check the next batch of partitions."""
    rows, rhs = [], []
    sizes = iter(sample_sizes)
    used = []
    gens = sorted({g for m in basis for g in m})
    need_sizes = max(monomial_weight(m) for m in basis) // 2 + 1

    def row(lam):
        vals = generator_values(lam, gens)
        out = []
        for m in basis:
            v = Fraction(1)
            for g in m:
                v *= vals[g]
            out.append(v)
        return out

    x = None
    for n in sizes:
        for lam in points(n):
            rows.append(row(lam))
            rhs.append(value(lam))
        used.append(n)
        if len(rows) < len(basis) + 2 or len(used) < need_sizes:
            continue
        try:
            x = solve_exact(rows, rhs)
            break
        except UnderdeterminedSystem:
            continue
    if x is None:
        raise InterpolationError(f"{label}: no full-rank system on sizes {used}")
    poly = {m: c for m, c in zip(basis, x) if c}
    checked = 0
    for n in sizes:
        for lam in points(n):
            if evaluate(poly, lam) != value(lam):
                raise InterpolationError(f"{label}: holdout mismatch at {lam}")
            checked += 1
            if checked >= HOLDOUT:
                return poly, used
    return poly, used


def _poly_to_json(poly):
    return [[[list(g) for g in m], fraction_str(c)] for m, c in sorted(poly.items())]


def _poly_from_json(items):
    return {tuple(tuple(g) for g in m): parse_fraction(c) for m, c in items}


@lru_cache(maxsize=None)
def _interpolate_g_nu(nu: tuple):
    if not nu:
        return {(): Fraction(1)}
    key = ["g_nu", list(nu), CODE_VERSION]
    hit = cache.get("interp", key)
    if hit is not None:
        return _poly_from_json(hit)
    w = sum(nu) // 2
    start = max(sum(nu), 2)
    poly, _ = _interpolate(
        lambda_bar_basis(w),
        range(start, 4 * start + 40, 2),
        balanced_from_quotients,
        lambda lam: f_nu_twos(lam, nu) / f_twos(lam),
        f"g_{nu}",
    )
    cache.put("interp", key, _poly_to_json(poly))
    return poly


def interpolate_g_nu(nu) -> dict:
    """f_{nu,2..2}/f_{2..2} on balanced partitions, as {monomial: coefficient}."""
    return dict(_interpolate_g_nu(tuple(sorted(nu, reverse=True))))


def _f_value(m):
    def value(lam):
        return f_cycle(lam, m) if sum(lam) >= m else Fraction(0)

    return value


@lru_cache(maxsize=None)
def _interpolate_f_cycle(m: int):
    key = ["f_cycle", m, CODE_VERSION]
    hit = cache.get("interp", key)
    if hit is not None:
        return _poly_from_json(hit)
    poly, _ = _interpolate(lambda_bar_basis(m + 1, bars=False), range(0, 10 * m + 40), partitions_of, _f_value(m), f"f_{m}")
    cache.put("interp", key, _poly_to_json(poly))
    return poly


def interpolate_f_cycle(m: int) -> dict:
    """f_{m,1..1} as a polynomial in the p_k, on all partitions."""
    if m < 2:
        raise ValueError("cycle length must be at least 2")
    return dict(_interpolate_f_cycle(m))


def integrand(p: ProfilePair) -> dict:
    """g_nu * prod f_{mu_i} as a polynomial in p_k, pbar_k."""
    out = interpolate_g_nu(p.nu)
    for m in p.mu:
        out = _mul(out, interpolate_f_cycle(m))
    return out


# -- brackets -----------------------------------------------------------------


@lru_cache(maxsize=None)
def _scale(g) -> int:
    kind, k = g
    const = _p_const(k) if kind == "p" else c_k(k)
    return max(2 ** k, 1) * const.denominator


def _integer_values(lam, gens) -> dict:
    """_scale(g) * g(lam) for each generator, as exact integers."""
    vals = generator_values(lam, gens)
    out = {}
    for g in gens:
        v = vals[g] * _scale(g)
        if v.denominator != 1:
            raise ArithmeticError(f"scale for {g} does not clear denominators")
        out[g] = v.numerator
    return out


def _bracket_series_batch(monomials, order: int, variant: str) -> dict:
    # f_{2..2}(lam) is an integer, so n!^2 w(lam) (frobenius) or n! w(lam)
    # (printed) is too; sums are kept in integers and divided once per degree
    if variant not in ("frobenius", "printed"):
        raise ValueError(f"unknown weight variant {variant!r}")
    gens = sorted({g for m in monomials for g in m})
    sums = {m: [Fraction(0)] * (order + 1) for m in monomials}
    for n in range(0, order + 1, 2):
        acc = {m: 0 for m in monomials}
        cs = class_size((2,) * (n // 2))
        for lam in balanced_from_quotients(n):
            d = kernels.dim(lam)
            f, r = divmod(cs * chi_twos(lam), d)
            if r:
                raise ArithmeticError(f"central character of {lam} is not an integer")
            wint = d * d * f ** 4 if variant == "frobenius" else d * f
            vals = _integer_values(lam, gens)
            for m in monomials:
                v = wint
                for g in m:
                    v *= vals[g]
                acc[m] += v
        nf = factorial(n)
        base = nf * nf if variant == "frobenius" else nf
        for m in monomials:
            den = base
            for g in m:
                den *= _scale(g)
            sums[m][n] = Fraction(acc[m], den)
    from .genfun import z_empty

    z = z_empty(order)
    return {m: QSeries(c) / z for m, c in sums.items()}


_BRACKETS: dict = {}


def bracket_monomials(monomials, variant: str = "frobenius") -> dict:
    """{monomial: QMPolynomial} for the w-brackets of the given monomials.

    Each bracket is fitted at the even cap just above the monomial's weight;
    a bracket that is not of pure weight triggers a PureWeightWarning.
    """
    out = {}
    todo = defaultdict(list)
    for m in monomials:
        m = tuple(sorted(m))
        if (m, variant) in _BRACKETS:
            out[m] = _BRACKETS[(m, variant)]
            continue
        w = monomial_weight(m)
        cap = max(w + w % 2, 2)
        key = ["bracket", [list(g) for g in m], cap, variant, CODE_VERSION]
        hit = cache.get("bracket", key)
        if hit is not None:
            out[m] = QMPolynomial.from_json(hit, cap, "pillowcase")
            _BRACKETS[(m, variant)] = out[m]
            continue
        todo[cap].append(m)
    for cap, ms in sorted(todo.items()):
        series = _bracket_series_batch(ms, required_order(cap), variant)
        for m in ms:
            poly = fit(series[m], cap)
            key = ["bracket", [list(g) for g in m], cap, variant, CODE_VERSION]
            cache.put("bracket", key, poly.to_json())
            _BRACKETS[(m, variant)] = poly
            out[m] = poly
    for m, poly in out.items():
        w = monomial_weight(m)
        if not poly.is_zero() and any(
            sum(k * g for k, g in zip(e, (2, 2, 4))) != w for e in poly.terms
        ):
            warnings.warn(f"bracket of {m} is not of pure weight {w}", PureWeightWarning, stacklevel=2)
    return out


def bracket_monomial(m, variant: str = "frobenius") -> QMPolynomial:
    return bracket_monomials([m], variant)[tuple(sorted(m))]


@lru_cache(maxsize=None)
def _zprime_poly_interp(mu: tuple, nu: tuple, variant: str) -> QMPolynomial:
    p = ProfilePair(mu, nu)
    poly = integrand(p)
    brackets = bracket_monomials(list(poly), variant)
    out = QMPolynomial({}, "pillowcase", weight(p))
    for m, c in poly.items():
        out = out + brackets[m] * c
    return out


def zprime_poly_interp(p: ProfilePair, variant: str = "frobenius") -> QMPolynomial:
    """Z'(mu, nu) through interpolation and monomial brackets."""
    c = p.canonical
    return _zprime_poly_interp(c.mu, c.nu, variant)


def clear_memory_caches() -> None:
    for f in (_interpolate_g_nu, _interpolate_f_cycle, _zprime_poly_interp, balanced_from_quotients):
        f.cache_clear()
    _BRACKETS.clear()
