from collections import Counter

import pytest
from scipy.stats import chisquare

from chordalgen.counting import ChordalCounter, CounterKey, domain_keys
from chordalgen.exactmath import RandomStream
from chordalgen.graph import Permutation, cycle_type_representative, cycle_types, evaporation_sequence, \
    is_automorphism, is_chordal
from chordalgen.oracle import enumerate_chordal
from chordalgen.sampling import FixedSampler, sample_fixed, sample_key

P = Permutation.parse


def fix_set(perm):
    return [g for g in enumerate_chordal(range(1, perm.n + 1)) if is_automorphism(g, perm)]


def chi2_over_fix(perm, per_bin, seed):
    support = fix_set(perm)
    counter = ChordalCounter(perm)
    rng = RandomStream(seed)
    seen = Counter(sample_fixed(perm, rng, counter) for _ in range(per_bin * len(support)))
    assert set(seen) <= set(support)
    if len(support) == 1:
        return 1.0
    return chisquare([seen[g] for g in support]).pvalue


def small_cases():
    for n in range(1, 5):
        for ct in cycle_types(n):
            yield cycle_type_representative(n, ct)
    for s in ("()", "(1 2)", "(1 2)(3 4)", "(1 2 3)"):
        yield P(s, 5)


@pytest.mark.parametrize("perm", list(small_cases()), ids=lambda p: f"n{p.n}{p.cycle_string()}")
def test_uniform_over_fix_set(perm):
    assert chi2_over_fix(perm, 40, seed=hash(perm.image) & 0xFFFF) > 0.001


def test_two_vertex_swap_is_fair():
    rng = RandomStream(4)
    perm = P("(1 2)")
    c = Counter(sample_fixed(perm, rng).edge_count for _ in range(4000))
    assert set(c) == {0, 1} and chisquare([c[0], c[1]]).pvalue > 0.001


def test_seed_determinism():
    perm = P("(1 2)(3 4)", 6)
    a = [sample_fixed(perm, RandomStream(99).derive(i)) for i in range(20)]
    b = [sample_fixed(perm, RandomStream(99).derive(i)) for i in range(20)]
    assert a == b


def test_top_level_split_frequencies_match_term_weights():
    perm = P("(1 2)", 3)
    counter = ChordalCounter(perm)
    key = tuple(counter.key("A", k=3, mk={1, 2}))
    terms = list(counter.terms(key))
    weights = [w for w, _ in terms if w]
    tags = [t for w, t in terms if w]
    assert sum(weights) == 4 and len(tags) >= 2
    sampler = FixedSampler(counter, RandomStream(8))
    draws = 10_000
    c = Counter(sampler.pick(key) for _ in range(draws))
    assert set(c) == set(tags)
    expected = [draws * w / 4 for w in weights]
    assert chisquare([c[t] for t in tags], expected).pvalue > 0.001


@pytest.mark.parametrize("k, t", [(3, 1), (3, 2), (4, 2), (5, 3)])
def test_connected_sample_evaporates_at_requested_time(k, t):
    counter = ChordalCounter(Permutation.identity(5))
    key = tuple(counter.key("G1", t=t, k=k))
    rng = RandomStream(k * 10 + t)
    for _ in range(200):
        g = sample_key(counter, key, rng)
        assert g.is_connected() and evaporation_sequence(g).time == t


@pytest.mark.parametrize("perm", ["()", "(1 2)", "(1 2)(3 4)", "(1 2 3)"])
def test_every_key_samples_within_its_definition(perm):
    perm = P(perm, 4)
    counter = ChordalCounter(perm)
    rng = RandomStream(3)
    checked = 0
    for key in domain_keys(counter, 3):
        if counter.eval(key) and not (key.kind == "G" and key.t > key.k):
            for _ in range(3):
                sample_key(counter, key, rng, check=True)
            checked += 1
    assert checked > 50


def test_sample_passes_guarantees_at_moderate_n():
    perm = P("(1 2 3)(4 5)", 10)
    rng = RandomStream(12)
    for _ in range(20):
        g = sample_fixed(perm, rng)
        assert g.vertices == tuple(range(1, 11))
        assert is_chordal(g) and is_automorphism(g, perm)


def test_zero_count_key_is_an_error():
    counter = ChordalCounter(Permutation.identity(3))
    key = tuple(CounterKey("G", t=0, x=1, k=1))
    with pytest.raises(ValueError):
        FixedSampler(counter, RandomStream(0)).pick(key)
