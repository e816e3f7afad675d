from fractions import Fraction as F
from math import factorial

import pytest

from oracle_values import CHAIN_8_M1_12, DECOMP_2_3_M1_2, PARTITION_NUMBERS, Z_EMPTY_X
from qdvolumes import genfun
from qdvolumes.quasimodular import FitError
from qdvolumes.strata import ProfilePair, parse_signature, to_profile


def prof(text):
    return to_profile(parse_signature(text))


def test_empty_series():
    z = genfun.z_empty(14)
    assert [z[2 * k] for k in range(8)] == Z_EMPTY_X
    assert genfun.z_empty_abelian(10).coeffs == PARTITION_NUMBERS


def test_decomposition_coefficients():
    d = genfun.decompositions(prof("2^3,-1^2"))
    assert [a for _, a in d] == [DECOMP_2_3_M1_2]
    d = genfun.decompositions(prof("3^2,-1^10"))
    parts = {tuple(sorted((q.mu, q.nu) for q in D)): a for D, a in d}
    assert parts[tuple(sorted([((), (1, 1, 1, 1))] * 2 + [((), (5, 5, 1, 1))]))] == F(1, 2)


def test_mobius_chain():
    exp = genfun.connected_expansion(prof("8,-1^12"))
    by_len = {len(k): v for k, v in exp.items()}
    assert [by_len[n] for n in (1, 2, 3, 4)] == CHAIN_8_M1_12


def test_no_negative_genus_parts():
    for D, _ in genfun.decompositions(prof("4,1^2,-1^6")):
        assert all(q.has_integer_genus() for q in D)


@pytest.mark.parametrize("text", ["-1^4", "2,-1^2", "1^2,-1^2", "3,-1^3", "2^2", "8"])
def test_connected_denominators(text):
    s = genfun.zconnected_series(prof(text), 10)
    for d in range(1, 6):
        assert factorial(2 * d) % s[2 * d].denominator == 0
        assert s[2 * d - 1] == 0


def test_single_component_profiles_are_already_connected():
    p = prof("2,-1^2")
    assert genfun.zconnected_series(p, 10) == genfun.zprime_series(p, 10)


def test_zprime_vs_all():
    # Z = Z' * Z(empty) for any profile
    p = prof("1^2,-1^2")
    assert genfun.z_all_series(p, 10) == genfun.zprime_series(p, 10) * genfun.z_empty(10)


def test_fit_weight():
    poly = genfun.zprime_poly(prof("-1^4"))
    assert poly.top_weight() <= 2
    assert poly.expand(12) == genfun.zprime_series(prof("-1^4"), 12)


def test_printed_variant_is_not_quasimodular():
    with pytest.raises(FitError):
        genfun.zprime_poly(prof("2,-1^2"), "printed")


def test_weight_cap():
    with pytest.raises(genfun.WeightTooHigh):
        genfun.zprime_poly(ProfilePair((2,) * 6, ()))


def test_abelian_series_connected():
    # one-point torus covers with a 2-cycle: connected and all agree in low degree
    s = genfun.zconnected_abelian((2,), 6)
    t = genfun.zprime_abelian((2,), 6)
    assert s[2] == t[2]
