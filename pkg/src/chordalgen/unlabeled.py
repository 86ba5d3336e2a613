"""Uniform sampling of unlabeled chordal graphs by rejection over (pi, G) pairs.

Each round picks mu with probability B[mu] / sum(B), a uniform permutation
pi moving exactly mu points, and keeps it with probability
|R_mu| * |Fix(pi)| / B[mu]; a kept pi gets a uniform G in Fix(pi).  Every
pair (pi, G) with G chordal and pi an automorphism of G is then equally
likely per round, and an isomorphism class of G pairs with exactly n! such
(pi, G), so classes come out uniformly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .counting import count_fixed, count_labeled, counter_for
from .exactmath import RandomStream, count_R, pow2_ceil, random_permutation, \
    random_subset, uniform_below, weighted_choice
from .graph import LabeledGraph, Permutation, conjugator, cycle_type_representative, \
    cycle_types, is_automorphism
from .sampling import sample_fixed

BRUTE_LIMIT = 7
EXACT_LIMIT = 7
DP_LIMIT = 60  # beyond this the labeled count B[0] is not computed
MODES = ("auto", "brute", "exact", "paper", "empirical", "injected")


class BoundViolation(RuntimeError):
    """|R_mu| * |Fix(pi)| exceeded B[mu]; the acceptance step would be biased."""

    def __init__(self, mu: int, needed: int, bound: int):
        super().__init__(f"bound for mu={mu} too small: |R_mu|*|Fix| = {needed} > B[mu] = {bound}")
        self.mu = mu


@dataclass(frozen=True)
class BoundTable:
    n: int
    mode: str
    B: dict[int, int]
    mu_max: int | None = None
    bias: Fraction | None = None  # sum of the dropped bounds over B[0] (empirical mode)
    notes: tuple[str, ...] = ()

    @property
    def total(self) -> int:
        return sum(self.B.values())


@dataclass
class UnlabeledSample:
    graph: LabeledGraph
    iterations: int
    mu: int | None
    perm: Permutation | None
    mode: str
    extra: dict = field(default_factory=dict)


def moved_counts(n: int) -> list[int]:
    """The possible numbers of moved points: 0, 2, 3, ..., n."""
    return [0] + list(range(2, n + 1))


def log2_ceil(n: int) -> int:
    return (n - 1).bit_length()


def in_small_window(n: int, mu: int) -> bool:
    """mu <= n / (200 log2 n), with log2 n rounded up to an integer."""
    lg = log2_ceil(n)
    return 2 <= mu and lg > 0 and mu * 200 * lg <= n


def _large_mu_exponent(n: int, mu: int) -> Fraction:
    # n^2/4 - f(mu) with f(mu) = mu^2/900 - mu/10
    return Fraction(n * n, 4) - Fraction(mu * mu, 900) + Fraction(mu, 10)


def bound_small_mu(n: int, mu: int, b0: int) -> int:
    """The bound for small mu, every real factor rounded up to an integer."""
    shrunk = _ceil_div(b0 * 9 ** n, 10 ** n)
    core = shrunk + (1 << n) * pow2_ceil(Fraction(2 * n * n, 9)) + n * pow2_ceil(Fraction(n * n, 4) + Fraction(n, 2))
    return core * n ** mu * math.factorial(mu)


def bound_any_mu(n: int, mu: int) -> int:
    """The bound valid for every mu >= 2, rounded up to an integer."""
    return n ** (2 * n + 1) * pow2_ceil(_large_mu_exponent(n, mu)) * n ** mu * math.factorial(mu)


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def labeled_lower_bound(n: int) -> int:
    """ceil(2^n * 2^(n^2/4) / n^2), exactly."""
    if n % 2 == 0:
        return _ceil_div(1 << (n + n * n // 4), n * n)
    # n odd: n^2/4 = (n^2-1)/4 + 1/4 and 2^(1/4) is irrational, so the quotient is never an integer
    e = n + (n * n - 1) // 4
    floor_x = math.isqrt(math.isqrt(1 << (4 * e + 1)))
    return floor_x // (n * n) + 1


def check_small_mu_ratio(n: int, mus=None) -> list[tuple[int, bool, int, int]]:
    """For mu in the small window: is B[mu] * n^(16 mu) <= 3 * lower bound on B[0]?

    B[mu] grows affinely in B[0] with a factor below 1/(3 n^(16 mu)), so the
    worst case is B[0] at its lower bound.  Returns (mu, holds, lhs_bits, rhs_bits)."""
    lower = labeled_lower_bound(n)
    if mus is None:
        mus = [mu for mu in range(2, n + 1) if in_small_window(n, mu)]
    out = []
    for mu in mus:
        lhs = bound_small_mu(n, mu, lower) * n ** (16 * mu)
        rhs = 3 * lower
        out.append((mu, lhs <= rhs, lhs.bit_length(), rhs.bit_length()))
    return out


def _max_fix_by_type(n: int, mu: int, fix) -> int:
    types = [ct for ct in cycle_types(n) if sum(ct) == mu]
    return max(fix(cycle_type_representative(n, ct)) for ct in types)


def build_bounds(n: int, mode: str = "paper", mu_max: int = 4, injected: dict[int, int] | None = None) -> BoundTable:
    if n < 1:
        raise ValueError("n must be positive")
    mus = moved_counts(n)
    if mode == "injected":
        if injected is None:
            raise ValueError("injected mode needs a table")
        return BoundTable(n, mode, {mu: injected.get(mu, 0) for mu in mus})
    if mode == "exact":
        if n > EXACT_LIMIT:
            raise ValueError(f"exact bounds need n <= {EXACT_LIMIT}")
        from .oracle import oracle_fix
        fix = lambda perm: oracle_fix(n, perm)
        B = {0: count_labeled(n)}
        for mu in mus[1:]:
            B[mu] = count_R(n, mu) * _max_fix_by_type(n, mu, fix)
        return BoundTable(n, mode, B)
    if mode == "empirical":
        B = {0: count_labeled(n)}
        dropped = 0
        for mu in mus[1:]:
            if mu <= mu_max:
                B[mu] = count_R(n, mu) * _max_fix_by_type(n, mu, count_fixed)
            else:
                B[mu] = 0
                dropped += bound_any_mu(n, mu)
        return BoundTable(n, mode, B, mu_max=mu_max, bias=Fraction(dropped, B[0]))
    if mode == "paper":
        notes = ()
        if n <= DP_LIMIT:
            b0 = count_labeled(n)
        else:
            b0 = labeled_lower_bound(n)
            notes = ("B[0] replaced by its lower bound (labeled count not computed at this n)",)
        B = {0: b0}
        for mu in mus[1:]:
            B[mu] = bound_small_mu(n, mu, b0) if in_small_window(n, mu) else bound_any_mu(n, mu)
        return BoundTable(n, mode, B, notes=notes)
    raise ValueError(f"unknown bound mode {mode!r}")


def sample_perm(n: int, mu: int, rng: RandomStream) -> Permutation:
    """Uniform permutation of [n] moving exactly mu points."""
    if mu == 1 or not 0 <= mu <= n:
        raise ValueError(f"no permutation of [{n}] moves exactly {mu} points")
    if mu == 0:
        return Permutation.identity(n)
    support = random_subset(range(1, n + 1), mu, rng)
    while True:
        images = random_permutation(support, rng)
        if all(a != b for a, b in zip(support, images)):
            break
    img = list(range(1, n + 1))
    for a, b in zip(support, images):
        img[a - 1] = b
    return Permutation(img)


def sample_fixed_any(perm: Permutation, rng: RandomStream) -> LabeledGraph:
    """Uniform graph in Fix(perm), computed for the cycle-type representative and conjugated over.

    One counter per cycle type is enough: sigma maps Fix(tau) bijectively onto
    Fix(sigma tau sigma^-1)."""
    tau = cycle_type_representative(perm.n, perm.cycle_type)
    g = sample_fixed(tau, rng, counter_for(tau))
    sigma = conjugator(tau, perm)
    out = g.relabel({v: sigma(v) for v in g.vertices})
    if not is_automorphism(out, perm):
        raise AssertionError("conjugated sample lost the automorphism")
    return out


def fix_count(perm: Permutation) -> int:
    return count_fixed(cycle_type_representative(perm.n, perm.cycle_type))


def sample_unlabeled(n: int, bounds: BoundTable, rng: RandomStream) -> UnlabeledSample:
    """One round-until-accepted run of the rejection sampler."""
    if bounds.n != n:
        raise ValueError("bound table is for a different n")
    mus = sorted(bounds.B)
    weights = [bounds.B[mu] for mu in mus]
    iterations = 0
    while True:
        iterations += 1
        mu = mus[weighted_choice(weights, rng)]
        perm = sample_perm(n, mu, rng)
        needed = count_R(n, mu) * fix_count(perm)
        bound = bounds.B[mu]
        if needed > bound:
            raise BoundViolation(mu, needed, bound)
        if uniform_below(bound, rng) < needed:
            break
    g = sample_fixed_any(perm, rng)
    return UnlabeledSample(g, iterations, mu, perm, bounds.mode)


def brute_sample_unlabeled(n: int, rng: RandomStream) -> UnlabeledSample:
    """Uniform class from the enumerated census (small n only)."""
    from .oracle import census
    if n > BRUTE_LIMIT:
        raise ValueError(f"brute force needs n <= {BRUTE_LIMIT}")
    classes = sorted(census(n).classes)
    canon = classes[uniform_below(len(classes), rng)]
    return UnlabeledSample(census(n).representative(canon), 1, None, None, "brute")


class UnlabeledSampler:
    """Mode dispatch: brute force, or rejection with a bound table."""

    def __init__(self, n: int, mode: str = "auto", mu_max: int = 4, injected: dict[int, int] | None = None):
        if mode not in MODES:
            raise ValueError(f"unknown mode {mode!r}")
        if mode == "auto":
            mode = "brute" if n <= BRUTE_LIMIT else "paper"
        self.n = n
        self.mode = mode
        self.bounds = None if mode == "brute" else build_bounds(n, mode, mu_max, injected)

    def sample(self, rng: RandomStream) -> UnlabeledSample:
        if self.mode == "brute":
            return brute_sample_unlabeled(self.n, rng)
        return sample_unlabeled(self.n, self.bounds, rng)
