import math
from collections import Counter
from fractions import Fraction

import hypothesis.strategies as st
import pytest
from hypothesis import given
from scipy.stats import chisquare

from chordalgen.exactmath import (
    RandomStream,
    binomial,
    count_R,
    derangements,
    pow2_ceil,
    random_permutation,
    random_subset,
    uniform_below,
    weighted_choice,
)


class ScriptedStream:
    """Returns the given chunk values in order."""

    def __init__(self, chunks):
        self.chunks = list(chunks)

    def next_chunk(self):
        return self.chunks.pop(0)


def test_binomial():
    assert binomial(5, 2) == 10
    assert binomial(3, 5) == 0
    assert binomial(0, 0) == 1
    assert binomial(4, -1) == 0


def test_derangements_small():
    assert [derangements(m) for m in range(6)] == [1, 0, 1, 2, 9, 44]


@given(st.integers(0, 40))
def test_derangements_match_alternating_series(m):
    series = sum(Fraction((-1) ** k, math.factorial(k)) for k in range(m + 1)) * math.factorial(m)
    assert derangements(m) == series


def test_count_R():
    assert count_R(4, 2) == 6
    assert count_R(7, 0) == 1
    assert count_R(5, 5) == 44
    with pytest.raises(ValueError):
        count_R(4, 1)


@pytest.mark.parametrize("n", range(1, 8))
def test_count_R_partitions_symmetric_group(n):
    assert sum(count_R(n, mu) for mu in [0] + list(range(2, n + 1))) == math.factorial(n)


def test_pow2_ceil():
    assert pow2_ceil(Fraction(4) - Fraction(4, 900) + Fraction(2, 10)) == 32
    assert pow2_ceil(9) == 512
    assert pow2_ceil(0) == 1
    with pytest.raises(ValueError):
        pow2_ceil(Fraction(-1, 2))


@given(st.fractions(min_value=0, max_value=200))
def test_pow2_ceil_is_least_power_above(q):
    v = pow2_ceil(q)
    assert v == 1 << (v.bit_length() - 1)
    e = v.bit_length() - 1
    assert e >= q > e - 1 or (q == 0 and e == 0)


def test_uniform_below_one_is_zero():
    rng = RandomStream(3)
    assert all(uniform_below(1, rng) == 0 for _ in range(100))


def test_uniform_below_two_balanced():
    rng = RandomStream(5)
    draws = 100_000
    ones = sum(uniform_below(2, rng) for _ in range(draws))
    assert abs(ones - draws / 2) < 5 * math.sqrt(draws / 4)


def test_uniform_below_huge_range():
    rng = RandomStream(11)
    n = 1 << 200
    vals = [uniform_below(n, rng) for _ in range(50)]
    assert all(0 <= v < n for v in vals)
    assert max(vals).bit_length() == 200


def test_uniform_below_rejects_out_of_range_chunks():
    # width 2 for n = 3: chunk 3 is rejected, chunk 6 -> 6 & 3 = 2
    assert uniform_below(3, ScriptedStream([3, 6])) == 2


def test_weighted_choice_zero_weight_never_drawn():
    rng = RandomStream(1)
    assert all(weighted_choice([0, 7], rng) == 1 for _ in range(200))


def test_weighted_choice_exact_three_quarters():
    # the total 4 uses 2 bits, so the four low-bit patterns are equally likely
    picks = Counter(weighted_choice([3, 1], ScriptedStream([c])) for c in range(4))
    assert picks == {0: 3, 1: 1}


def test_weighted_choice_uniform_triple():
    rng = RandomStream(2)
    c = Counter(weighted_choice([1, 1, 1], rng) for _ in range(30_000))
    assert chisquare([c[i] for i in range(3)]).pvalue > 0.001


def test_weighted_choice_all_zero():
    with pytest.raises(ValueError):
        weighted_choice([0, 0], RandomStream(0))


def test_random_subset_uniform():
    rng = RandomStream(9)
    c = Counter(tuple(random_subset([1, 2, 3, 4], 2, rng)) for _ in range(12_000))
    assert len(c) == 6 and chisquare(list(c.values())).pvalue > 0.001


def test_random_permutation_uniform():
    rng = RandomStream(10)
    c = Counter(tuple(random_permutation([1, 2, 3], rng)) for _ in range(12_000))
    assert len(c) == 6 and chisquare(list(c.values())).pvalue > 0.001


def test_stream_determinism_and_derivation():
    a, b = RandomStream(42), RandomStream(42)
    assert [a.next_chunk() for _ in range(5)] == [b.next_chunk() for _ in range(5)]
    assert a.position == 5
    d0, d1 = RandomStream(42).derive(0), RandomStream(42).derive(1)
    assert d0.next_chunk() != d1.next_chunk()
    assert RandomStream(42).derive(3).next_chunk() == RandomStream(42).derive(3).next_chunk()
