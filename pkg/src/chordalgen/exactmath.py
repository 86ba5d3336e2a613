"""Exact integer combinatorics and exactly-uniform random choices.

Every probability in the sampling code is realized as an integer comparison
against ``uniform_below``; floats never appear on the sampling path.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from functools import lru_cache
from typing import Sequence


def binomial(a: int, b: int) -> int:
    """C(a, b), with 0 outside 0 <= b <= a."""
    if a < 0 or b < 0 or b > a:
        return 0
    return math.comb(a, b)


@lru_cache(maxsize=None)
def derangements(m: int) -> int:
    """Number of fixed-point-free permutations of an m-set."""
    if m < 0:
        raise ValueError("m must be non-negative")
    prev2, prev1 = 1, 0  # !0, !1
    if m == 0:
        return 1
    for k in range(2, m + 1):
        prev2, prev1 = prev1, (k - 1) * (prev1 + prev2)
    return prev1


def count_R(n: int, mu: int) -> int:
    """Number of permutations of [n] moving exactly mu points."""
    if mu == 1 or mu < 0 or mu > n:
        raise ValueError(f"no permutation of [{n}] moves exactly {mu} points")
    if mu == 0:
        return 1
    return derangements(mu) * math.comb(n, mu)


def ceil_fraction(q: Fraction) -> int:
    return -((-q.numerator) // q.denominator)


def pow2_ceil(q: Fraction | int) -> int:
    """2 raised to the ceiling of a non-negative rational exponent."""
    q = Fraction(q)
    if q < 0:
        raise ValueError("negative exponent")
    return 1 << ceil_fraction(q)


class RandomStream:
    """A seeded stream of 64-bit chunks (Mersenne Twister via :mod:`random`).

    ``position`` counts the chunks drawn so far; (seed, position) fixes the
    rest of the stream.
    """

    generator = "mt19937-64/v1"

    def __init__(self, seed: int = 0):
        self.seed = seed & (2**64 - 1)
        self.position = 0
        self._rng = random.Random(self.seed)

    def next_chunk(self) -> int:
        self.position += 1
        return self._rng.getrandbits(64)

    def derive(self, index: int) -> RandomStream:
        """An independent stream for sub-task ``index`` (e.g. one per sample)."""
        mixed = (self.seed * 0x9E3779B97F4A7C15 + (index + 1) * 0xBF58476D1CE4E5B9) & (2**64 - 1)
        return RandomStream(mixed ^ (mixed >> 31))


def uniform_below(n: int, rng: RandomStream) -> int:
    """Exactly uniform integer in [0, n).

    Draws ceil(w/64) chunks for w = bitlength(n-1), keeps the low w bits and
    rejects values >= n, so each try succeeds with probability > 1/2.
    """
    if n < 1:
        raise ValueError("uniform_below needs n >= 1")
    width = (n - 1).bit_length()
    if width == 0:
        return 0
    chunks = (width + 63) // 64
    mask = (1 << width) - 1
    while True:
        value = 0
        for _ in range(chunks):
            value = (value << 64) | rng.next_chunk()
        value &= mask
        if value < n:
            return value


def weighted_choice(weights: Sequence[int], rng: RandomStream) -> int:
    """Index i with probability weights[i] / sum(weights), exactly."""
    total = sum(weights)
    if total <= 0:
        raise ValueError("all weights are zero")
    r = uniform_below(total, rng)
    for i, w in enumerate(weights):
        if r < w:
            return i
        r -= w
    raise AssertionError("unreachable")


def random_subset(items: Sequence[int], r: int, rng: RandomStream) -> list[int]:
    """A uniform r-subset of ``items``, by a partial Fisher-Yates shuffle."""
    pool = list(items)
    if not 0 <= r <= len(pool):
        raise ValueError(f"cannot choose {r} of {len(pool)}")
    for i in range(r):
        j = i + uniform_below(len(pool) - i, rng)
        pool[i], pool[j] = pool[j], pool[i]
    return sorted(pool[:r])


def random_permutation(items: Sequence[int], rng: RandomStream) -> list[int]:
    pool = list(items)
    for i in range(len(pool) - 1, 0, -1):
        j = uniform_below(i + 1, rng)
        pool[i], pool[j] = pool[j], pool[i]
    return pool
