"""Exact arithmetic: pi-graded rationals, truncated q-series, Laurent series in h,
Bernoulli numbers and an exact rational linear solver."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial


def as_fraction(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def fraction_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def parse_fraction(text: str) -> Fraction:
    return Fraction(text.strip())


@lru_cache(maxsize=None)
def bernoulli(n: int) -> Fraction:
    """Bernoulli numbers with B_1 = -1/2."""
    if n == 0:
        return Fraction(1)
    if n > 1 and n % 2:
        return Fraction(0)
    s = sum(comb(n + 1, k) * bernoulli(k) for k in range(n))
    return -s / (n + 1)


def zeta_nonpositive(k: int) -> Fraction:
    """zeta(-k) for integer k >= 0."""
    if k == 0:
        return Fraction(-1, 2)
    return -bernoulli(k + 1) / (k + 1)


class PiPoly:
    """Finite sum  sum_e c_e pi^e  with rational coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms: dict[int, Fraction] = {}
        for e, c in (terms or {}).items():
            c = as_fraction(c)
            if c:
                self.terms[e] = c

    @classmethod
    def monomial(cls, coeff, power: int) -> "PiPoly":
        return cls({power: coeff})

    def __add__(self, other):
        other = _pi(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return PiPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return PiPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-_pi(other))

    def __rsub__(self, other):
        return _pi(other) - self

    def __mul__(self, other):
        other = _pi(other)
        out: dict[int, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return PiPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, PiPoly):
            if len(other.terms) != 1:
                raise ZeroDivisionError("can only divide by a single pi-monomial")
            (e, c), = other.terms.items()
            return PiPoly({k - e: v / c for k, v in self.terms.items()})
        other = as_fraction(other)
        return PiPoly({e: c / other for e, c in self.terms.items()})

    def __eq__(self, other):
        try:
            return self.terms == _pi(other).terms
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def as_monomial(self) -> tuple[Fraction, int]:
        if len(self.terms) != 1:
            raise ValueError(f"{self} is not a single pi-monomial")
        (e, c), = self.terms.items()
        return c, e

    def __float__(self):
        import math
        return float(sum(float(c) * math.pi ** e for e, c in self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "0"
        out = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            out.append(f"{c}" if e == 0 else f"{c}·π^{e}")
        return " + ".join(out)


def _pi(x) -> PiPoly:
    if isinstance(x, PiPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return PiPoly({0: x})
    raise TypeError(f"cannot treat {type(x).__name__} as PiPoly")


class QSeries:
    """Truncated power series sum_{n<=N} c_n q^n with exact rational coefficients.

    ``order`` is the largest exponent known exactly; every operation propagates
    the minimum order of its operands.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        self.coeffs: list[Fraction] = [as_fraction(c) for c in coeffs]
        if not self.coeffs:
            raise ValueError("QSeries needs at least one coefficient")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def constant(cls, c, order: int) -> "QSeries":
        return cls([c] + [0] * order)

    @classmethod
    def zero(cls, order: int) -> "QSeries":
        return cls([0] * (order + 1))

    def __getitem__(self, n: int) -> Fraction:
        if n > self.order:
            raise IndexError(f"coefficient q^{n} requested beyond truncation order {self.order}")
        return self.coeffs[n] if n >= 0 else Fraction(0)

    def truncate(self, order: int) -> "QSeries":
        if order > self.order:
            raise ValueError(f"cannot extend series of order {self.order} to {order}")
        return QSeries(self.coeffs[: order + 1])

    def __add__(self, other):
        if not isinstance(other, QSeries):
            other = QSeries.constant(other, self.order)
        n = min(self.order, other.order)
        return QSeries([self.coeffs[i] + other.coeffs[i] for i in range(n + 1)])

    __radd__ = __add__

    def __neg__(self):
        return QSeries([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, QSeries):
            c = as_fraction(other)
            return QSeries([c * a for a in self.coeffs])
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * (n + 1)
        for i in range(n + 1):
            ai = a[i]
            if not ai:
                continue
            for j in range(n + 1 - i):
                if b[j]:
                    out[i + j] += ai * b[j]
        return QSeries(out)

    __rmul__ = __mul__

    def inverse(self) -> "QSeries":
        a = self.coeffs
        if not a[0]:
            raise ZeroDivisionError("series with zero constant term is not invertible")
        n = self.order
        out = [Fraction(0)] * (n + 1)
        out[0] = 1 / a[0]
        for k in range(1, n + 1):
            s = sum(a[j] * out[k - j] for j in range(1, k + 1) if a[j])
            out[k] = -s / a[0]
        return QSeries(out)

    def __truediv__(self, other):
        if isinstance(other, QSeries):
            return self * other.inverse()
        return self * (1 / as_fraction(other))

    def __pow__(self, k: int):
        result = QSeries.constant(1, self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def substitute_power(self, m: int, order: int | None = None) -> "QSeries":
        """f(q) -> f(q^m), truncated to ``order`` (default m * self.order)."""
        if order is None:
            order = m * self.order
        if order > m * self.order + m - 1:
            raise ValueError("substitution would exceed the known truncation")
        out = [Fraction(0)] * (order + 1)
        for i, c in enumerate(self.coeffs):
            if i * m > order:
                break
            out[i * m] = c
        return QSeries(out)

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return self.coeffs[: n + 1] == other.coeffs[: n + 1]

    def __repr__(self):
        terms = [f"{c}·q^{i}" for i, c in enumerate(self.coeffs) if c]
        return (" + ".join(terms) or "0") + f" + O(q^{self.order + 1})"


def binomial_factor(m: int, exponent, order: int) -> QSeries:
    """Expansion of (1 - q^m)^exponent up to q^order."""
    if m < 1:
        raise ValueError("m must be >= 1")
    e = as_fraction(exponent)
    out = [Fraction(0)] * (order + 1)
    coeff = Fraction(1)
    k = 0
    while k * m <= order:
        out[k * m] = coeff * (-1) ** k
        coeff = coeff * (e - k) / (k + 1)
        k += 1
    return QSeries(out)


def eta_like_product(step: int, exponent, order: int) -> QSeries:
    """prod_{n>=1} (1 - q^{step n})^exponent up to q^order."""
    result = QSeries.constant(1, order)
    n = 1
    while step * n <= order:
        result = result * binomial_factor(step * n, exponent, order)
        n += 1
    return result


class HLaurent:
    """Finite Laurent polynomial sum_k c_k h^k with PiPoly coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms: dict[int, PiPoly] = {}
        for k, c in (terms or {}).items():
            c = _pi(c)
            if not c.is_zero():
                self.terms[k] = c

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in _hl(other).terms.items():
            out[k] = out.get(k, PiPoly()) + c
        return HLaurent(out)

    __radd__ = __add__

    def __neg__(self):
        return HLaurent({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-_hl(other))

    def __mul__(self, other):
        if not isinstance(other, HLaurent):
            c = _pi(other)
            return HLaurent({k: v * c for k, v in self.terms.items()})
        out: dict[int, PiPoly] = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                out[k1 + k2] = out.get(k1 + k2, PiPoly()) + c1 * c2
        return HLaurent(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = HLaurent({0: 1})
        for _ in range(n):
            result = result * self
        return result

    def coefficient(self, k: int) -> PiPoly:
        return self.terms.get(k, PiPoly())

    def pole_order(self) -> int:
        neg = [-k for k in self.terms if k < 0]
        return max(neg, default=0)

    def __eq__(self, other):
        if not isinstance(other, HLaurent):
            return NotImplemented
        return self.terms == other.terms

    def evaluate(self, h: float) -> float:
        return sum(float(c) * h ** k for k, c in self.terms.items())

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({self.terms[k]})·h^{k}" for k in sorted(self.terms))


def _hl(x) -> HLaurent:
    return x if isinstance(x, HLaurent) else HLaurent({0: x})


class InconsistentSystem(ArithmeticError):
    pass


class UnderdeterminedSystem(ArithmeticError):
    pass


def solve_exact(matrix, rhs) -> list[Fraction]:
    """Solve ``matrix @ x = rhs`` exactly.

    The system may be overdetermined; every row must be satisfied exactly.
    Raises InconsistentSystem or UnderdeterminedSystem otherwise.
    """
    rows = len(matrix)
    if rows == 0:
        raise UnderdeterminedSystem("empty system")
    cols = len(matrix[0])
    if rows < cols:
        raise UnderdeterminedSystem(f"{rows} equations for {cols} unknowns")
    a = [[as_fraction(x) for x in row] + [as_fraction(b)] for row, b in zip(matrix, rhs)]
    pivots = []
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        pr = a[r]
        inv = 1 / pr[c]
        for j in range(c, cols + 1):
            pr[j] *= inv
        for i in range(rows):
            if i != r and a[i][c]:
                f = a[i][c]
                row = a[i]
                for j in range(c, cols + 1):
                    if pr[j]:
                        row[j] -= f * pr[j]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    for i in range(r, rows):
        if a[i][cols]:
            raise InconsistentSystem(f"row {i} has nonzero residual {a[i][cols]}")
    if len(pivots) < cols:
        raise UnderdeterminedSystem(f"rank {len(pivots)} < {cols} unknowns")
    x = [Fraction(0)] * cols
    for i, c in enumerate(pivots):
        x[c] = a[i][cols]
    return x


def double_factorial(n: int) -> int:
    """n!! with (-1)!! = 0!! = 1."""
    if n < -1:
        raise ValueError("double factorial defined for n >= -1")
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out


def falling(n: int, k: int) -> int:
    return factorial(n) // factorial(n - k)
