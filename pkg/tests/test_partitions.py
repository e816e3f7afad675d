from fractions import Fraction as F
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracle_values import C_K, CHI_S4, P1, PBAR0
from qdvolumes.partitions import (
    PaddingError,
    SizeMismatch,
    balanced_partitions_of,
    bracket_weight,
    c_k,
    character_value,
    class_size,
    dim_irrep,
    f_twos,
    is_balanced,
    p_k,
    partitions_of,
    pbar_k,
)


def test_counts():
    assert [len(partitions_of(n)) for n in range(11)] == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


def test_s4_characters():
    for (lam, rho), v in CHI_S4.items():
        assert character_value(lam, rho) == v
    with pytest.raises(SizeMismatch):
        character_value((2, 1), (2, 2))


def test_shifted_sums():
    for lam, v in PBAR0.items():
        assert pbar_k(lam, 0) == v
    for lam, v in P1.items():
        assert p_k(lam, 1) == v
    for k, v in C_K.items():
        assert c_k(k) == v


def test_bracket_weight_odd_size():
    with pytest.raises(PaddingError):
        bracket_weight((2, 1))


def test_f_twos_small():
    assert f_twos((2,)) == 1
    assert f_twos((1, 1)) == -1
    assert f_twos((2, 2)) == 3 * F(2, 2)


sizes = st.integers(0, 12)


@given(sizes.flatmap(lambda n: st.sampled_from(partitions_of(n))))
def test_p1_is_size_shift(lam):
    assert p_k(lam, 1) == sum(lam) - F(1, 24)


@given(st.integers(1, 16).flatmap(lambda n: st.sampled_from(partitions_of(n))))
def test_balanced_means_even(lam):
    if is_balanced(lam):
        assert sum(lam) % 2 == 0
    if sum(lam) % 2 == 0:
        assert (f_twos(lam) != 0) == is_balanced(lam)


@pytest.mark.parametrize("n", range(1, 9))
def test_orthogonality(n):
    parts = partitions_of(n)
    for a in parts:
        for b in parts:
            s = sum(class_size(r) * character_value(a, r) * character_value(b, r) for r in parts)
            assert s == (factorial(n) if a == b else 0)
    assert sum(dim_irrep(lam) ** 2 for lam in parts) == factorial(n)


def test_balanced_sizes():
    # empty 2-core: counted by pairs of partitions with total size n/2
    pairs = [sum(len(partitions_of(a)) * len(partitions_of(m - a)) for a in range(m + 1)) for m in range(7)]
    assert [len(balanced_partitions_of(2 * m)) for m in range(7)] == pairs == [1, 2, 5, 10, 20, 36, 65]
