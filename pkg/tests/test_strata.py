import pytest
from hypothesis import given
from hypothesis import strategies as st

from qdvolumes.strata import (
    InvalidSignature,
    ProfilePair,
    StratumSignature,
    from_profile,
    invariants,
    parse_signature,
    to_profile,
)


def test_parse_forms():
    a = parse_signature("2,-1^2")
    assert a == parse_signature("Q(2, -1, -1)") == parse_signature("-1^2 2")
    assert a.orders == (2, -1, -1)
    assert a.display() == "2,-1^2"
    assert str(a) == "Q(2,-1^2)"


@pytest.mark.parametrize("text", ["3,-1", "", "0,4", "-2,2", "2^0,4", "x", "-1^8"])
def test_rejects(text):
    with pytest.raises(InvalidSignature):
        parse_signature(text)


def test_profile_encoding():
    p = to_profile(parse_signature("4,2,1,1"))
    assert p.mu == (3, 2) and p.nu == (3, 3)
    assert from_profile(p) == parse_signature("4,2,1,1")


@pytest.mark.parametrize(
    "text,genus,g_eff,dim,weight",
    [("-1^4", 0, 1, 2, 2), ("2,-1^2", 1, 1, 3, 4), ("2^2", 2, 1, 4, 6), ("8", 3, 2, 5, 6), ("1^4", 2, 3, 6, 6)],
)
def test_invariants(text, genus, g_eff, dim, weight):
    inv = invariants(to_profile(parse_signature(text)))
    assert (inv.genus, inv.g_eff, inv.dim, inv.weight) == (genus, g_eff, dim, weight)


def test_profile_rejects_bad_parts():
    with pytest.raises(InvalidSignature):
        ProfilePair((1,), ())
    with pytest.raises(InvalidSignature):
        ProfilePair((), (2, 2))


@st.composite
def signatures(draw):
    orders = draw(st.lists(st.integers(-1, 12).filter(lambda a: a != 0), min_size=1, max_size=8))
    if sum(orders) % 4:
        orders.append(4 - sum(orders) % 4)
    while sum(orders) < -4:
        orders.append(4)
    return StratumSignature(tuple(orders))


@given(signatures())
def test_round_trip(sig):
    assert parse_signature(sig.display()) == sig
    assert parse_signature(sig.display(" ")) == sig
    assert from_profile(to_profile(sig)) == sig


@given(signatures())
def test_dim_identity(sig):
    p = to_profile(sig)
    inv = invariants(p)
    assert inv.dim == 2 * inv.g_eff + len(p.mu)
    assert inv.genus == sig.genus
    assert inv.weight == inv.dim + len(p.mu)
