"""Eisenstein series, graded monomial bases, exact fitting and the h -> 0
substitution rules.

Two generator families are used:

* ``pillowcase``: E2(q^2), E2(q^4), E4(q^4), weights 2, 2, 4;
* ``abelian``:    E2(q^2), E4(q^2), E6(q^2), weights 2, 4, 6.

A series in q is fitted against the generators as written; torus series
are first rescaled q -> q^2 so that both families share the same variable.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .exact import (
    HLaurent,
    PiPoly,
    QSeries,
    UnderdeterminedSystem,
    fraction_str,
    solve_exact,
    zeta_nonpositive,
)

FAMILIES = ("pillowcase", "abelian")

# (eisenstein weight, q-power) of each generator, in exponent order
GENERATORS = {
    "pillowcase": ((2, 2), (2, 4), (4, 4)),
    "abelian": ((2, 2), (4, 2), (6, 2)),
}


class FitError(ArithmeticError):
    pass


class InsufficientCoefficients(FitError):
    pass


def _sigma(n: int, power: int) -> int:
    total = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            total += d ** power
            e = n // d
            if e != d:
                total += e ** power
        d += 1
    return total


@lru_cache(maxsize=None)
def eisenstein(weight: int, m: int, order: int) -> QSeries:
    """zeta(1-w)/2 + sum_{n>=1} sigma_{w-1}(n) q^{mn}, up to q^order."""
    if weight not in (2, 4, 6):
        raise ValueError(f"unsupported Eisenstein weight {weight}")
    if m < 1:
        raise ValueError("q-power must be positive")
    coeffs = [Fraction(0)] * (order + 1)
    coeffs[0] = zeta_nonpositive(weight - 1) / 2
    n = 1
    while m * n <= order:
        coeffs[m * n] = Fraction(_sigma(n, weight - 1))
        n += 1
    return QSeries(coeffs)


def monomial_weight(exponents, family: str) -> int:
    gens = GENERATORS[family]
    return sum(e * w for e, (w, _) in zip(exponents, gens))


@lru_cache(maxsize=None)
def monomial_basis(weight_cap: int, family: str = "pillowcase") -> tuple[tuple[int, int, int], ...]:
    """All exponent triples of weight <= cap, ordered by weight then lexicographically."""
    if family not in GENERATORS:
        raise ValueError(f"unknown family {family!r}")
    w1, w2, w3 = (w for w, _ in GENERATORS[family])
    out = []
    for a in range(weight_cap // w1 + 1):
        for b in range((weight_cap - a * w1) // w2 + 1):
            for c in range((weight_cap - a * w1 - b * w2) // w3 + 1):
                out.append((a, b, c))
    out.sort(key=lambda e: (monomial_weight(e, family), tuple(-x for x in e)))
    return tuple(out)


@lru_cache(maxsize=None)
def _generator_power(family: str, index: int, power: int, order: int) -> QSeries:
    if power == 0:
        return QSeries.constant(1, order)
    w, m = GENERATORS[family][index]
    return _generator_power(family, index, power - 1, order) * eisenstein(w, m, order)


@lru_cache(maxsize=None)
def monomial_series(exponents: tuple[int, int, int], family: str, order: int) -> QSeries:
    out = QSeries.constant(1, order)
    for i, e in enumerate(exponents):
        if e:
            out = out * _generator_power(family, i, e, order)
    return out


# h -> 0 replacements for each generator, keyed like GENERATORS
_PI = PiPoly.monomial


def _asymptotic_generators(family: str) -> tuple[HLaurent, HLaurent, HLaurent]:
    e2q2 = HLaurent({-2: _PI(Fraction(1, 24), 2), -1: Fraction(-1, 4)})
    if family == "pillowcase":
        e2q4 = HLaurent({-2: _PI(Fraction(1, 96), 2), -1: Fraction(-1, 8)})
        e4q4 = HLaurent({-4: _PI(Fraction(1, 3840), 4)})
        return e2q2, e2q4, e4q4
    e4q2 = HLaurent({-4: _PI(Fraction(1, 240), 4)})
    e6q2 = HLaurent({-6: _PI(Fraction(1, 504), 6)})
    return e2q2, e4q2, e6q2


def generator_asymptotics(family: str, index: int) -> HLaurent:
    return _asymptotic_generators(family)[index]


class QMPolynomial:
    """Polynomial in one generator family with exact rational coefficients."""

    __slots__ = ("terms", "family", "weight_cap")

    def __init__(self, terms, family: str = "pillowcase", weight_cap: int | None = None):
        if family not in GENERATORS:
            raise ValueError(f"unknown family {family!r}")
        self.family = family
        self.terms: dict[tuple[int, int, int], Fraction] = {}
        for e, c in terms.items():
            c = Fraction(c)
            if c:
                self.terms[tuple(e)] = c
        top = max((monomial_weight(e, family) for e in self.terms), default=0)
        if weight_cap is None:
            weight_cap = top
        if top > weight_cap:
            raise ValueError(f"monomial of weight {top} exceeds cap {weight_cap}")
        self.weight_cap = weight_cap

    @classmethod
    def constant(cls, c, family: str = "pillowcase") -> "QMPolynomial":
        return cls({(0, 0, 0): c}, family, 0)

    def _check(self, other):
        if self.family != other.family:
            raise ValueError("cannot combine different generator families")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return QMPolynomial(out, self.family, max(self.weight_cap, other.weight_cap))

    def __neg__(self):
        return QMPolynomial({e: -c for e, c in self.terms.items()}, self.family, self.weight_cap)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, QMPolynomial):
            c = Fraction(other)
            return QMPolynomial({e: v * c for e, v in self.terms.items()}, self.family, self.weight_cap)
        self._check(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])
                out[e] = out.get(e, 0) + c1 * c2
        return QMPolynomial(out, self.family, self.weight_cap + other.weight_cap)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, QMPolynomial):
            return NotImplemented
        return self.family == other.family and self.terms == other.terms

    def __hash__(self):
        return hash((self.family, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def top_weight(self) -> int:
        return max((monomial_weight(e, self.family) for e in self.terms), default=0)

    def expand(self, order: int) -> QSeries:
        out = QSeries.zero(order)
        for e, c in self.terms.items():
            out = out + monomial_series(e, self.family, order) * QSeries.constant(c, order)
        return out

    def substitute_asymptotics(self) -> HLaurent:
        gens = _asymptotic_generators(self.family)
        out = HLaurent()
        for e, c in self.terms.items():
            term = HLaurent({0: c})
            for g, k in zip(gens, e):
                if k:
                    term = term * g ** k
            out = out + term
        return out

    def to_json(self) -> list[dict]:
        return [
            {"exponents": list(e), "family": self.family, "num": c.numerator, "den": c.denominator}
            for e, c in sorted(self.terms.items())
        ]

    @classmethod
    def from_json(cls, items, weight_cap: int | None = None, family: str | None = None) -> "QMPolynomial":
        fam = family
        terms = {}
        for it in items:
            if fam is None:
                fam = it["family"]
            elif it["family"] != fam:
                raise ValueError("mixed families in QMPolynomial JSON")
            terms[tuple(it["exponents"])] = Fraction(it["num"], it["den"])
        return cls(terms, fam or "pillowcase", weight_cap)

    def __repr__(self):
        names = {
            "pillowcase": ("E2(q^2)", "E2(q^4)", "E4(q^4)"),
            "abelian": ("E2(q^2)", "E4(q^2)", "E6(q^2)"),
        }[self.family]
        parts = []
        for e, c in sorted(self.terms.items()):
            mono = "·".join(f"{n}^{k}" if k > 1 else n for n, k in zip(names, e) if k) or "1"
            parts.append(f"{fraction_str(c)}·{mono}")
        return " + ".join(parts) or "0"


def required_order(weight_cap: int, family: str = "pillowcase", surplus: int = 2) -> int:
    """Largest q-exponent needed so that the even rows give basis size + surplus equations."""
    return 2 * (len(monomial_basis(weight_cap, family)) + surplus - 1)


def fit(series: QSeries, weight_cap: int, family: str = "pillowcase", min_surplus: int = 2) -> QMPolynomial:
    """Exact fit of ``series`` (a series in q supported on even powers) in the basis.

    Every even coefficient up to the truncation order is used as an equation;
    at least ``min_surplus`` more equations than unknowns are required and all
    must hold exactly. Odd coefficients must vanish.
    """
    basis = monomial_basis(weight_cap, family)
    rows = list(range(0, series.order + 1, 2))
    if len(rows) < len(basis) + min_surplus:
        raise InsufficientCoefficients(
            f"{len(rows)} even coefficients for {len(basis)} unknowns, need surplus {min_surplus}"
        )
    for n in range(1, series.order + 1, 2):
        if series[n]:
            raise FitError(f"odd coefficient q^{n} is nonzero")
    cols = [monomial_series(e, family, series.order) for e in basis]
    matrix = [[col[n] for col in cols] for n in rows]
    rhs = [series[n] for n in rows]
    try:
        x = solve_exact(matrix, rhs)
    except UnderdeterminedSystem as exc:
        raise FitError(f"basis not independent on the available coefficients: {exc}") from exc
    except ArithmeticError as exc:
        raise FitError(f"series is not in the weight <= {weight_cap} {family} space: {exc}") from exc
    return QMPolynomial(dict(zip(basis, x)), family, weight_cap)


def substitute_asymptotics(p: QMPolynomial) -> HLaurent:
    return p.substitute_asymptotics()
