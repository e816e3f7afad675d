import warnings
from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracle_values import LAMBDA_BAR_SIZES, LAMBDA_STAR_SIZES
from qdvolumes import genfun, method2
from qdvolumes.partitions import (
    balanced_partitions_of,
    bracket_weight,
    character_value,
    f_cycle,
    f_nu_twos,
    f_twos,
    partitions_of,
)
from qdvolumes.strata import ProfilePair


@pytest.mark.parametrize("cap", sorted(LAMBDA_BAR_SIZES))
def test_basis_sizes(cap):
    assert len(method2.lambda_bar_basis(cap)) == LAMBDA_BAR_SIZES[cap]
    assert len(method2.lambda_bar_basis(cap, bars=False)) == LAMBDA_STAR_SIZES[cap]


def test_generator_values_match_direct_sums():
    from qdvolumes.partitions import p_k, pbar_k

    for lam in partitions_of(6):
        vals = method2.generator_values(lam, [("p", 1), ("p", 3), ("pb", 2)])
        assert vals[("p", 1)] == p_k(lam, 1)
        assert vals[("p", 3)] == p_k(lam, 3)
        assert vals[("pb", 2)] == pbar_k(lam, 2)


small = st.integers(0, 16).flatmap(lambda n: st.sampled_from(partitions_of(n)))


@given(small)
def test_two_quotient_round_trip(lam):
    empty, q0, q1 = method2.two_quotient(lam)
    if empty:
        assert method2.from_two_quotient(q0, q1) == tuple(lam)
        assert sum(q0) + sum(q1) == sum(lam) // 2


@given(st.integers(0, 8).flatmap(lambda m: st.sampled_from(partitions_of(2 * m))))
def test_chi_twos_matches_murnaghan_nakayama(lam):
    n = sum(lam)
    assert method2.chi_twos(lam) == character_value(lam, (2,) * (n // 2))
    assert method2._domino_sign(lam) == method2._domino_sign_by_sliding(lam) or method2.chi_twos(lam) == 0


@pytest.mark.parametrize("n", range(0, 21, 2))
def test_balanced_from_quotients(n):
    assert sorted(method2.balanced_from_quotients(n)) == sorted(balanced_partitions_of(n))


@pytest.mark.parametrize("n", [2, 4, 8, 12])
def test_fast_weight(n):
    for lam in balanced_partitions_of(n):
        assert method2.bracket_weight_fast(lam) == bracket_weight(lam)


def test_f2_and_f3():
    f2 = method2.interpolate_f_cycle(2)
    assert f2 == {(("p", 2),): F(1, 2)}
    f3 = method2.interpolate_f_cycle(3)
    assert f3 == {
        (("p", 3),): F(1, 3),
        (("p", 1), ("p", 1)): F(-1, 2),
        (("p", 1),): F(3, 8),
        (): F(9, 640),
    }
    for lam in partitions_of(7):
        assert method2.evaluate(f3, lam) == f_cycle(lam, 3)


def test_g_nu_on_balanced():
    g = method2.interpolate_g_nu((3, 1))
    for n in (4, 8, 10):
        for lam in balanced_partitions_of(n):
            assert method2.evaluate(g, lam) == f_nu_twos(lam, (3, 1)) / f_twos(lam)


@pytest.mark.parametrize(
    "mu,nu",
    [((2,), (1, 1)), ((), (1, 1, 1, 1)), ((5,), ()), ((2, 2), ()), ((), (3, 1)), ((3,), (1, 1))],
)
def test_routes_agree(mu, nu):
    p = ProfilePair(mu, nu)
    assert method2.zprime_poly_interp(p) == genfun.zprime_poly(p)


def test_impure_weight_is_flagged():
    # a bare p_1 bracket is quasimodular of mixed weight
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        method2.bracket_monomial((("p", 1), ("p", 1)))
    assert all(issubclass(w.category, method2.PureWeightWarning) for w in caught)
