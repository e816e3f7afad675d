"""Generating functions of pillowcase and torus covers.

Z  : all covers, as the bracket sum over balanced partitions;
Z' : covers without unramified components, Z / Z(empty);
Z° : connected covers, by inclusion-exclusion over decompositions.
"""

from __future__ import annotations

import itertools
from collections import Counter, defaultdict
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod

from . import cache
from .exact import HLaurent, QSeries, eta_like_product, fraction_str, parse_fraction
from .partitions import (
    balanced_partitions_of,
    bracket_weight,
    f_cycle,
    f_nu_twos,
    f_twos,
    partitions_of,
)
from .quasimodular import QMPolynomial, fit, monomial_basis, required_order
from .strata import ProfilePair, weight

CODE_VERSION = "1"
MAX_WEIGHT = 10
ROUTES = ("characters", "interpolation")


class WeightTooHigh(ValueError):
    pass


def z_empty(order: int) -> QSeries:
    """prod_{n>=1} (1 - q^{2n})^{-1/2}: weighted count of unramified pillowcase covers."""
    return eta_like_product(2, Fraction(-1, 2), order)


def z_empty_abelian(order: int) -> QSeries:
    """prod_{n>=1} (1 - q^n)^{-1}: weighted count of unramified torus covers."""
    return eta_like_product(1, -1, order)


def _lowest_degree(p: ProfilePair) -> int:
    return max([sum(p.nu), *p.mu, 0])


def bracket_term(lam, p: ProfilePair, variant: str = "frobenius") -> Fraction:
    """Contribution of one balanced partition to the coefficient of q^{|lam|} in Z."""
    w = bracket_weight(lam, variant)
    if not w:
        return w
    f = f_twos(lam)
    term = w * f_nu_twos(lam, p.nu) / f
    for m in p.mu:
        term *= f_cycle(lam, m)
    return term


def _series_to_json(s: QSeries) -> list[str]:
    return [fraction_str(c) for c in s.coeffs]


def _series_from_json(items) -> QSeries:
    return QSeries([parse_fraction(x) for x in items])


@lru_cache(maxsize=None)
def _z_all(mu: tuple, nu: tuple, order: int, variant: str) -> QSeries:
    key = ["z_all", list(mu), list(nu), order, variant, CODE_VERSION]
    hit = cache.get("series", key)
    if hit is not None:
        try:
            return _series_from_json(hit)
        except (ValueError, ZeroDivisionError):
            pass
    p = ProfilePair(mu, nu)
    lo = _lowest_degree(p)
    coeffs = [Fraction(0)] * (order + 1)
    for n in range(0, order + 1, 2):
        if n < lo:
            continue
        coeffs[n] = sum((bracket_term(lam, p, variant) for lam in balanced_partitions_of(n)), Fraction(0))
    out = QSeries(coeffs)
    cache.put("series", key, _series_to_json(out))
    return out


def z_all_series(p: ProfilePair, order: int, variant: str = "frobenius") -> QSeries:
    """Z(mu, nu; q): weighted count of all pillowcase covers, degree <= order."""
    c = p.canonical
    return _z_all(c.mu, c.nu, order, variant)


def zprime_series(p: ProfilePair, order: int, variant: str = "frobenius") -> QSeries:
    return z_all_series(p, order, variant) / z_empty(order)


@lru_cache(maxsize=None)
def _zprime_poly(mu: tuple, nu: tuple, variant: str, route: str = "characters") -> QMPolynomial:
    p = ProfilePair(mu, nu)
    w = weight(p)
    if w > MAX_WEIGHT:
        raise WeightTooHigh(f"weight {w} of {p} exceeds the supported maximum {MAX_WEIGHT}")
    if route == "interpolation":
        from .method2 import zprime_poly_interp

        return zprime_poly_interp(p, variant)
    if route != "characters":
        raise ValueError(f"unknown route {route!r}")
    return fit(zprime_series(p, required_order(w), variant), w)


def zprime_poly(p: ProfilePair, variant: str = "frobenius", route: str = "characters") -> QMPolynomial:
    """Z'(mu, nu) as a quasimodular polynomial of weight <= w(mu, nu).

    ``characters`` fits the bracket sum directly; ``interpolation`` goes
    through the p_k / pbar_k expansion and monomial brackets.
    """
    c = p.canonical
    return _zprime_poly(c.mu, c.nu, variant, route)


# -- decompositions ---------------------------------------------------------


def set_partitions(items):
    """Set partitions of a list, blocks in order of first element."""
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        yield [[first]] + part
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]


def _subvectors(counts):
    return itertools.product(*(range(c + 1) for c in counts))


def _distribute(counts, k):
    """k-tuples of sub-vectors whose sum fits in ``counts``; yields (tuple, remainder)."""
    if k == 0:
        yield (), tuple(counts)
        return
    for v in _subvectors(counts):
        rem = tuple(c - x for c, x in zip(counts, v))
        for tail, left in _distribute(rem, k - 1):
            yield (v,) + tail, left


def multiset_partitions(counts, upper=None):
    """Partitions of a multiset (given as a count vector) into nonzero blocks,
    each listed once as a lexicographically non-increasing tuple of vectors."""
    counts = tuple(counts)
    if not any(counts):
        yield ()
        return
    if upper is None:
        upper = counts
    for v in _subvectors(counts):
        if not any(v) or v > upper:
            continue
        rem = tuple(c - x for c, x in zip(counts, v))
        for rest in multiset_partitions(rem, v):
            yield (v,) + rest


def _part_ok(mu, nu) -> bool:
    if not mu and not nu:
        return False
    if sum(nu) % 2:
        return False
    twice_g = sum(mu) - len(mu) + sum(nu) // 2 - len(nu) + 2
    return twice_g >= 0 and twice_g % 2 == 0


@lru_cache(maxsize=None)
def _decompositions(mu: tuple, nu: tuple):
    values = sorted(set(nu), reverse=True)
    counts = tuple(nu.count(v) for v in values)

    def expand(vec):
        return tuple(v for v, c in zip(values, vec) for _ in range(c))

    acc: dict = defaultdict(Fraction)
    for blocks in set_partitions(range(len(mu))):
        for assign, rest in _distribute(counts, len(blocks)):
            labelled = [
                (tuple(sorted((mu[i] for i in b), reverse=True)), expand(v)) for b, v in zip(blocks, assign)
            ]
            for extra in multiset_partitions(rest):
                parts = labelled + [((), expand(v)) for v in extra]
                if len(parts) < 2 or not all(_part_ok(m, n) for m, n in parts):
                    continue
                sym = prod(factorial(k) for k in Counter(extra).values())
                acc[tuple(sorted(parts))] += Fraction(1, sym)
    return tuple((key, a) for key, a in sorted(acc.items()))


def decompositions(p: ProfilePair) -> list[tuple[tuple[ProfilePair, ...], Fraction]]:
    """Proper decompositions of a profile into substrata, with their weights a(D).

    a(D) counts the assignments of the labelled mu entries realising D, divided
    by k! for every group of k identical parts carrying no label.
    """
    c = p.canonical
    return [(tuple(ProfilePair(m, n) for m, n in key), a) for key, a in _decompositions(c.mu, c.nu)]


@lru_cache(maxsize=None)
def _zconnected_poly(mu: tuple, nu: tuple, variant: str, route: str = "characters") -> QMPolynomial:
    p = ProfilePair(mu, nu)
    out = _zprime_poly(mu, nu, variant, route)
    for parts, a in decompositions(p):
        term = QMPolynomial.constant(a)
        for q in parts:
            term = term * _zconnected_poly(q.mu, q.nu, variant, route)
        out = out - term
    return out


def zconnected_poly(p: ProfilePair, variant: str = "frobenius", route: str = "characters") -> QMPolynomial:
    """Z°(mu, nu): connected covers, as a quasimodular polynomial."""
    c = p.canonical
    return _zconnected_poly(c.mu, c.nu, variant, route)


@lru_cache(maxsize=None)
def _zconnected_series(mu: tuple, nu: tuple, order: int, variant: str) -> QSeries:
    p = ProfilePair(mu, nu)
    out = zprime_series(p, order, variant)
    for parts, a in decompositions(p):
        term = QSeries.constant(a, order)
        for q in parts:
            term = term * _zconnected_series(q.mu, q.nu, order, variant)
        out = out - term
    return out


def zconnected_series(p: ProfilePair, order: int, variant: str = "frobenius") -> QSeries:
    """Z° directly from character sums (no fitting), up to q^order."""
    c = p.canonical
    return _zconnected_series(c.mu, c.nu, order, variant)


def connected_expansion(p: ProfilePair) -> dict:
    """Z°(p) written as a combination of products of Z'(parts).

    Keys are sorted tuples of (mu, nu) pairs; values are the Moebius coefficients.
    """
    return dict(_connected_expansion(p.canonical.mu, p.canonical.nu))


@lru_cache(maxsize=None)
def _connected_expansion(mu: tuple, nu: tuple):
    out: dict = defaultdict(Fraction)
    out[((mu, nu),)] += 1
    for parts, a in _decompositions(mu, nu):
        combined = {(): Fraction(1)}
        for m, n in parts:
            sub = _connected_expansion(m, n)
            nxt: dict = defaultdict(Fraction)
            for k1, c1 in combined.items():
                for k2, c2 in sub:
                    nxt[tuple(sorted(k1 + k2))] += c1 * c2
            combined = nxt
        for k, c in combined.items():
            out[k] -= a * c
    return tuple((k, c) for k, c in sorted(out.items()) if c)


# -- torus covers -----------------------------------------------------------


@lru_cache(maxsize=None)
def _z_all_abelian(mu: tuple, order: int) -> QSeries:
    lo = max(mu, default=0)
    coeffs = [Fraction(0)] * (order + 1)
    for n in range(lo, order + 1):
        total = Fraction(0)
        for lam in partitions_of(n):
            total += prod((f_cycle(lam, m) for m in mu), start=Fraction(1))
        coeffs[n] = total
    return QSeries(coeffs)


def z_all_abelian(mu, order: int) -> QSeries:
    """Weighted count of all torus covers with ramification mu, degree <= order."""
    return _z_all_abelian(tuple(sorted(mu, reverse=True)), order)


def zprime_abelian(mu, order: int) -> QSeries:
    return z_all_abelian(mu, order) / z_empty_abelian(order)


@lru_cache(maxsize=None)
def _zconnected_abelian(mu: tuple, order: int) -> QSeries:
    out = zprime_abelian(mu, order)
    for blocks in set_partitions(range(len(mu))):
        if len(blocks) < 2:
            continue
        term = QSeries.constant(1, order)
        for b in blocks:
            term = term * _zconnected_abelian(tuple(sorted((mu[i] for i in b), reverse=True)), order)
        out = out - term
    return out


def zconnected_abelian(mu, order: int) -> QSeries:
    """Connected torus covers, by inclusion-exclusion over set partitions of the labels."""
    if not mu:
        raise ValueError("connected series needs at least one ramification point")
    return _zconnected_abelian(tuple(sorted(mu, reverse=True)), order)


@lru_cache(maxsize=None)
def _abelian_connected_poly(mu: tuple) -> QMPolynomial:
    w = sum(mu) + len(mu)
    terms = len(monomial_basis(w, "abelian")) + 1
    s = zconnected_abelian(mu, terms).substitute_power(2)
    return fit(s, w, "abelian")


def abelian_connected_poly(mu) -> QMPolynomial:
    """Z°_ab(mu; q^2) as a polynomial in E2(q^2), E4(q^2), E6(q^2)."""
    return _abelian_connected_poly(tuple(sorted(mu, reverse=True)))


def quad_subtraction_laurent(mu, variant: str = "frobenius", route: str = "characters") -> HLaurent:
    """h-asymptotics of Z°(mu, ∅) - 2^{l(mu)-1} Z°_ab(mu; q^2)."""
    mu = tuple(mu)
    if not mu:
        raise ValueError("subtraction needs at least one even zero")
    full = zconnected_poly(ProfilePair(mu, ()), variant, route).substitute_asymptotics()
    ab = abelian_connected_poly(mu).substitute_asymptotics()
    return full - ab * Fraction(2 ** (len(mu) - 1))


def connected_laurent(p: ProfilePair, variant: str = "frobenius", route: str = "characters") -> HLaurent:
    """Asymptotics of the connected series used for volume extraction."""
    if p.mu and not p.nu:
        return quad_subtraction_laurent(p.mu, variant, route)
    return zconnected_poly(p, variant, route).substitute_asymptotics()


def clear_memory_caches() -> None:
    for f in (
        _z_all,
        _zprime_poly,
        _decompositions,
        _zconnected_poly,
        _zconnected_series,
        _connected_expansion,
        _z_all_abelian,
        _zconnected_abelian,
        _abelian_connected_poly,
    ):
        f.cache_clear()
