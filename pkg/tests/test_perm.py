from itertools import permutations
from math import factorial

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from fs_lab.perm import (
    PermError,
    all_perms,
    apply_swaps,
    apply_value_swap,
    check_bijection,
    identity,
    inverse,
    lehmer_digits,
    rank,
    rank_array,
    reverse_sequence,
    sign,
    unrank,
)
from oracles import lehmer_rank


def test_rank_examples():
    assert rank([0, 1, 2, 3]) == 0
    assert rank([3, 2, 1, 0]) == 23
    assert unrank(0, 4) == (0, 1, 2, 3)
    assert unrank(119, 5) == (4, 3, 2, 1, 0)


@pytest.mark.parametrize("n", range(0, 6))
def test_rank_matches_lexicographic_position(n):
    for i, p in enumerate(permutations(range(n))):
        assert rank(p) == i


def test_lehmer_oracle_spot():
    for p in [(2, 0, 3, 1), (1, 3, 0, 2, 4), (4, 0, 1, 3, 2)]:
        assert rank(p) == lehmer_rank(p)


@pytest.mark.parametrize("n", range(1, 9))
def test_round_trip_exhaustive(n):
    for r in range(factorial(n)):
        assert rank(unrank(r, n)) == r


@pytest.mark.parametrize("n", range(1, 9))
def test_all_perms_table(n):
    table = all_perms(n)
    assert table.shape == (factorial(n), n)
    assert np.array_equal(rank_array(table), np.arange(factorial(n)))
    # spot rows against scalar unrank
    for r in (0, factorial(n) - 1, factorial(n) // 3):
        assert tuple(int(v) for v in table[r]) == unrank(r, n)


def test_lehmer_digits_small():
    d = lehmer_digits(np.array([[2, 0, 1]], dtype=np.uint8))
    assert d.tolist() == [[2, 0, 0]]


def test_unrank_out_of_range():
    with pytest.raises(PermError):
        unrank(24, 4)
    with pytest.raises(PermError):
        unrank(-1, 4)


def test_rank_cap():
    with pytest.raises(PermError):
        rank(list(range(21)))


def test_check_bijection_rejects():
    with pytest.raises(PermError):
        check_bijection([0, 0, 1])
    with pytest.raises(PermError):
        check_bijection([1, 2, 3])


def test_sign():
    assert sign(identity(5)) == 0
    assert sign((1, 0, 2)) == 1
    assert sign((1, 2, 0)) == 0


def test_value_swap_and_sequences():
    b = (2, 0, 1)
    assert apply_value_swap(b, 0, 1) == (2, 1, 0)
    with pytest.raises(PermError):
        apply_value_swap(b, 1, 1)
    seq = [(0, 1), (1, 2)]
    assert apply_swaps(apply_swaps(b, seq), reverse_sequence(seq)) == b


perm_strategy = st.integers(1, 9).flatmap(lambda n: st.permutations(list(range(n))))


@given(perm_strategy)
def test_inverse_involution(p):
    p = tuple(p)
    assert inverse(inverse(p)) == p
    assert tuple(p[i] for i in inverse(p)) == identity(len(p))


@given(perm_strategy, st.data())
def test_value_swap_flips_sign(p, data):
    n = len(p)
    if n < 2:
        return
    u, v = data.draw(st.lists(st.integers(0, n - 1), min_size=2, max_size=2, unique=True))
    assert sign(apply_value_swap(p, u, v)) != sign(p)


@given(st.integers(1, 12).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, factorial(n) - 1))))
def test_round_trip_property(nr):
    n, r = nr
    assert rank(unrank(r, n)) == r
