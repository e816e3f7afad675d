"""Stratum signatures, the (mu, nu) profile encoding and derived invariants."""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass


class InvalidSignature(ValueError):
    pass


@dataclass(frozen=True)
class StratumSignature:
    """Multiset of singularity orders, stored sorted descending (poles last)."""

    orders: tuple[int, ...]

    def __post_init__(self):
        orders = tuple(sorted(self.orders, reverse=True))
        object.__setattr__(self, "orders", orders)
        if not orders:
            raise InvalidSignature("empty signature")
        for a in orders:
            if a == 0:
                raise InvalidSignature("order 0 (marked regular point) is not supported")
            if a < -1:
                raise InvalidSignature(f"order {a} < -1: only simple poles are allowed")
        s = sum(orders)
        if s % 4:
            raise InvalidSignature(f"sum of orders {s} is not divisible by 4")
        if s < -4:
            raise InvalidSignature(f"sum of orders {s} gives negative genus")

    @property
    def genus(self) -> int:
        return (sum(self.orders) + 4) // 4

    def multiplicities(self) -> dict[int, int]:
        return dict(Counter(self.orders))

    def odd_multiplicities(self) -> list[int]:
        """Multiplicities of odd orders, poles included."""
        return [m for a, m in Counter(self.orders).items() if a % 2]

    def even_multiplicities(self) -> list[int]:
        return [m for a, m in Counter(self.orders).items() if a % 2 == 0]

    def display(self, sep: str = ",") -> str:
        parts = []
        for a in sorted(Counter(self.orders), reverse=True):
            m = self.orders.count(a)
            parts.append(f"{a}^{m}" if m > 1 else str(a))
        return sep.join(parts)

    def __str__(self):
        return f"Q({self.display()})"


_PART = re.compile(r"^(-?\d+)(?:\^(\d+))?$")


def parse_signature(text: str) -> StratumSignature:
    """Parse ``"2,-1^2"`` (commas or whitespace between parts) into a signature."""
    text = text.strip()
    if text.startswith("Q(") and text.endswith(")"):
        text = text[2:-1]
    tokens = [t for t in re.split(r"[,\s]+", text) if t]
    if not tokens:
        raise InvalidSignature("empty signature")
    orders: list[int] = []
    for tok in tokens:
        m = _PART.match(tok)
        if not m:
            raise InvalidSignature(f"cannot parse part {tok!r}")
        mult = int(m.group(2)) if m.group(2) else 1
        if mult < 1:
            raise InvalidSignature(f"multiplicity must be positive in {tok!r}")
        orders.extend([int(m.group(1))] * mult)
    return StratumSignature(tuple(orders))


@dataclass(frozen=True)
class ProfilePair:
    """The (mu, nu) encoding of a stratum.

    ``mu`` is an ordered tuple (the even zeros sit over distinct labelled
    points of the pillow); ``nu`` is kept sorted descending.
    """

    mu: tuple[int, ...]
    nu: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "mu", tuple(self.mu))
        object.__setattr__(self, "nu", tuple(sorted(self.nu, reverse=True)))
        if any(m < 2 for m in self.mu):
            raise InvalidSignature(f"mu parts must be >= 2, got {self.mu}")
        if any(v < 1 or v % 2 == 0 for v in self.nu):
            raise InvalidSignature(f"nu parts must be odd positive, got {self.nu}")
        if sum(self.nu) % 2:
            raise InvalidSignature(f"|nu| must be even, got {self.nu}")

    @property
    def canonical(self) -> "ProfilePair":
        """Same profile with mu sorted; series depend only on this."""
        return ProfilePair(tuple(sorted(self.mu, reverse=True)), self.nu)

    @property
    def is_empty(self) -> bool:
        return not self.mu and not self.nu

    def has_integer_genus(self) -> bool:
        return (sum(self.mu) - len(self.mu) + sum(self.nu) // 2 - len(self.nu)) % 2 == 0

    def __str__(self):
        return f"({list(self.mu)}, {list(self.nu)})"


def to_profile(sig: StratumSignature) -> ProfilePair:
    mu = tuple(a // 2 + 1 for a in sig.orders if a % 2 == 0)
    nu = tuple(a + 2 for a in sig.orders if a % 2)
    return ProfilePair(mu, nu)


def from_profile(p: ProfilePair) -> StratumSignature:
    orders = [2 * (m - 1) for m in p.mu] + [v - 2 for v in p.nu]
    return StratumSignature(tuple(orders))


@dataclass(frozen=True)
class StratumInvariants:
    genus: int
    double_cover_genus: int
    g_eff: int
    dim: int
    weight: int


def invariants(p: ProfilePair) -> StratumInvariants:
    m, lm = sum(p.mu), len(p.mu)
    n, ln = sum(p.nu), len(p.nu)
    twice_genus = m - lm + n // 2 - ln + 2
    if twice_genus % 2 or twice_genus < 0:
        raise InvalidSignature(f"profile {p} does not give a nonnegative integer genus")
    geff2 = m - lm + n // 2
    if geff2 % 2:
        raise InvalidSignature(f"profile {p} gives a half-integer effective genus")
    dim = m + n // 2
    return StratumInvariants(
        genus=twice_genus // 2,
        double_cover_genus=m - lm + n // 2 - ln // 2 + 1,
        g_eff=geff2 // 2,
        dim=dim,
        weight=dim + lm,
    )


def weight(p: ProfilePair) -> int:
    return sum(p.mu) + len(p.mu) + sum(p.nu) // 2
