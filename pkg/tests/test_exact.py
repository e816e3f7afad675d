from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracle_values import E6_CONST, PARTITION_NUMBERS, Z_EMPTY_X
from qdvolumes.exact import (
    HLaurent,
    InconsistentSystem,
    PiPoly,
    QSeries,
    UnderdeterminedSystem,
    bernoulli,
    double_factorial,
    eta_like_product,
    solve_exact,
    zeta_nonpositive,
)


def test_bernoulli_and_zeta():
    assert [bernoulli(n) for n in range(7)] == [1, F(-1, 2), F(1, 6), 0, F(-1, 30), 0, F(1, 42)]
    assert zeta_nonpositive(0) == F(-1, 2)
    assert zeta_nonpositive(1) == F(-1, 12)
    assert zeta_nonpositive(5) / 2 == E6_CONST


def test_double_factorial():
    assert [double_factorial(n) for n in (-1, 0, 1, 2, 5, 6)] == [1, 1, 1, 2, 15, 48]


def test_products():
    assert eta_like_product(1, -1, 10).coeffs == PARTITION_NUMBERS
    z = eta_like_product(2, F(-1, 2), 14)
    assert [z[2 * k] for k in range(8)] == Z_EMPTY_X
    assert all(z[2 * k + 1] == 0 for k in range(7))


def test_series_truncation_propagates():
    a = QSeries([1, 2, 3, 4])
    b = QSeries([1, 1])
    assert (a * b).order == 1
    with pytest.raises(IndexError):
        (a + b)[2]
    assert (a * a.inverse()).coeffs == [1, 0, 0, 0]


def test_pipoly():
    x = PiPoly.monomial(F(1, 3), 4)
    assert x * 3 == PiPoly.monomial(1, 4)
    assert (x + x).as_monomial() == (F(2, 3), 4)
    assert not (x + PiPoly.monomial(1, 2)).is_monomial()


def test_hlaurent():
    a = HLaurent({-2: 1, 0: 3})
    assert (a * a).coefficient(-4) == PiPoly({0: 1})
    assert (a * a).pole_order() == 4


def test_solver_overdetermined():
    m = [[1, 0], [0, 1], [1, 1]]
    assert solve_exact(m, [1, 2, 3]) == [1, 2]
    with pytest.raises(InconsistentSystem):
        solve_exact(m, [1, 2, 4])
    with pytest.raises(UnderdeterminedSystem):
        solve_exact([[1, 1], [2, 2], [3, 3]], [1, 2, 3])


@given(st.lists(st.fractions(max_denominator=50), min_size=4, max_size=4))
def test_solver_recovers(xs):
    m = [[F(i + 1) ** j for j in range(4)] for i in range(6)]
    rhs = [sum(r[j] * xs[j] for j in range(4)) for r in m]
    assert solve_exact(m, rhs) == xs
