from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gate import gate
from oracle_values import BASIS_SIZES, E2, E4
from qdvolumes.exact import QSeries
from qdvolumes.quasimodular import (
    FitError,
    InsufficientCoefficients,
    QMPolynomial,
    eisenstein,
    fit,
    monomial_basis,
    monomial_weight,
    required_order,
)


def test_eisenstein_coefficients():
    assert eisenstein(2, 1, 6).coeffs == E2
    assert eisenstein(4, 1, 6).coeffs == E4
    e = eisenstein(2, 2, 8)
    assert [e[n] for n in range(9)] == [E2[0], 0, 1, 0, 3, 0, 4, 0, 7]


@pytest.mark.parametrize("cap,size", sorted(BASIS_SIZES.items()))
def test_basis_sizes(cap, size):
    assert len(monomial_basis(cap)) == size


def test_required_order_has_surplus():
    for cap in (2, 4, 6, 8):
        rows = required_order(cap) // 2 + 1
        assert rows == len(monomial_basis(cap)) + 2


@pytest.mark.parametrize("family", ["pillowcase", "abelian"])
@pytest.mark.parametrize("index", [0, 1, 2])
def test_numeric_gate(family, index):
    assert gate(family, index) < 1e-6


@st.composite
def polys(draw, cap_max=8):
    cap = draw(st.sampled_from([c for c in (2, 4, 6, 8) if c <= cap_max]))
    basis = monomial_basis(cap)
    coeffs = draw(st.lists(st.fractions(min_value=-20, max_value=20, max_denominator=30), min_size=len(basis), max_size=len(basis)))
    return cap, QMPolynomial(dict(zip(basis, coeffs)), "pillowcase", cap)


@given(polys())
def test_fit_inverts_expand(cp):
    cap, p = cp
    assert fit(p.expand(required_order(cap)), cap) == p


def test_fit_rejects_short_series():
    p = QMPolynomial({(1, 0, 0): 1})
    with pytest.raises(InsufficientCoefficients):
        fit(p.expand(required_order(2) - 2), 2)


def test_fit_rejects_outside_space():
    s = QSeries([F(n * n + 1) if n % 2 == 0 else 0 for n in range(required_order(4) + 1)])
    with pytest.raises(FitError):
        fit(s, 4)


def test_weights():
    assert monomial_weight((1, 1, 1), "pillowcase") == 8
    assert monomial_weight((0, 0, 1), "abelian") == 6
    assert QMPolynomial({(2, 0, 1): 3}).top_weight() == 8


def test_product_weight():
    a = QMPolynomial({(1, 0, 0): 1})
    b = QMPolynomial({(0, 0, 1): 2})
    assert (a * b).terms == {(1, 0, 1): 2}
    assert (a * b).expand(10) == a.expand(10) * b.expand(10)
