import pytest

from chordalgen.counting import CacheMismatch, ChordalCounter, CounterKey, DomainError, count_fixed, \
    count_labeled, domain_keys
from chordalgen.graph import Permutation, cycle_type_representative, cycle_types
from chordalgen.oracle import Oracle, oracle_fix

P = Permutation.parse

# Fix counts per cycle type, produced by brute-force enumeration and frozen here
FIX_BY_TYPE = {
    1: {(): 1},
    2: {(2,): 2, (): 2},
    3: {(3,): 2, (2,): 4, (): 8},
    4: {(4,): 3, (3,): 4, (2, 2): 13, (2,): 15, (): 61},
    5: {(5,): 2, (4,): 6, (3, 2): 7, (3,): 15, (2, 2): 46, (2,): 106, (): 822},
}

# labeled counts for n = 7..12; n = 7 also checked against enumeration in the slow tier
LABELED_LARGER = [617675, 30888596, 2192816760, 215488096587, 28791414081916, 5165908492061926]


def test_count_a_examples():
    assert ChordalCounter(Permutation.identity(3)).count_a(3, 1, 0) == 8
    c = ChordalCounter(P("(1 2)", 3))
    assert c.count_a(3, 1, {1, 2}) == 4
    assert ChordalCounter(Permutation.identity(4)).count_a(4, 1, 0) == 61


def test_count_c_examples():
    c = ChordalCounter(Permutation.identity(4))
    assert [c.count_c(k) for k in (1, 2, 3, 4)] == [1, 1, 4, 35]
    assert c.count_c(0) == 0
    assert c.count_a(0) == 1


def test_base_cases():
    c = ChordalCounter(Permutation.identity(4))
    assert c.eval(c.key("G1", t=1, k=1)) == 1
    assert c.eval(c.key("G", t=0, x=1)) == 1
    assert c.eval(c.key("G", t=0, x=1, k=1)) == 0
    assert c.eval(c.key("F", t=1, l=2)) == 1
    assert c.eval(c.key("F", t=2, x=1, l=1)) == 0
    assert c.eval(c.key("GT", t=3, x=1)) == 1


@pytest.mark.parametrize("k", range(1, 6))
def test_connected_count_splits_by_evaporation_time(k):
    perm = P("(1 2)", 5)
    c, orc = ChordalCounter(perm), Oracle(perm)
    for m in (0, c.mask({1, 2})):
        if bin(m).count("1") > k:
            continue
        by_time = sum(c.eval(c.key("G1", t=t, k=k, mk=m)) for t in range(1, k + 1))
        assert by_time == c.count_c(k, 1, m) == orc.count(c.key("C", k=k, mk=m))


def test_layout_places_moved_labels():
    c = ChordalCounter(P("(3 4)", 4))
    V, X, L, Z = c.layout(c.key("G", t=1, x=2, k=1, mx={3, 4}))
    assert X == (3, 4) and V == (1, 3, 4) and L == () and Z == ()
    V, X, L, Z = ChordalCounter(Permutation.identity(3)).layout(CounterKey("A", k=3))
    assert V == (1, 2, 3)


def test_invariant_subsets():
    c = ChordalCounter(P("(1 2)(3 4)"))
    subs = {frozenset(c.labels(m)) for m, _ in c.invariant_subsets(c.full, 1)}
    assert subs == {frozenset(), frozenset({1, 2}), frozenset({3, 4}), frozenset({1, 2, 3, 4})}


def test_orbit_families():
    c = ChordalCounter(P("(1 2)", 3))
    fams = c.orbit_families(c.full, 1, c.mask({1}))
    assert [(c.labels(C), pc) for C, pc, _, _ in fams] == [([1], 2)]
    c = ChordalCounter(P("(1 2 3 4)"))
    fams = c.orbit_families(c.full, 1, c.mask({1}))
    assert sorted((tuple(c.labels(C)), pc) for C, pc, _, _ in fams) == [((1,), 4), ((1, 3), 2)]
    assert ChordalCounter(Permutation.identity(3)).orbit_families(0, 1, 0) == []


def test_p_is_reduced_modulo_order():
    c = ChordalCounter(P("(1 2 3)", 4))
    assert c.canon(3) == 3 and c.canon(4) == 1 and c.canon(0) == 3
    for p in range(1, 4):
        assert c.eval(CounterKey("A", k=4, p=p + 3, mk=c.full)) == c.eval(CounterKey("A", k=4, p=p, mk=c.full))


@pytest.mark.parametrize("n", sorted(FIX_BY_TYPE))
def test_fix_counts_frozen(n):
    for ct, want in FIX_BY_TYPE[n].items():
        assert count_fixed(cycle_type_representative(n, ct)) == want


def test_labeled_counts_larger_n():
    assert [count_labeled(n) for n in range(7, 13)] == LABELED_LARGER


@pytest.mark.parametrize("n", range(2, 6))
def test_invariant_under_conjugation_and_inversion(n):
    reverse = Permutation(list(range(n, 0, -1)))
    for ct in cycle_types(n):
        tau = cycle_type_representative(n, ct)
        want = count_fixed(tau)
        assert ChordalCounter(tau.conjugate_by(reverse)).total() == want
        assert ChordalCounter(tau.inverse()).total() == want


@pytest.mark.parametrize("perm", ["(1 2)", "(1 2 3)", "(1 2)(3 4)"])
def test_connected_at_most_all(perm):
    c = ChordalCounter(P(perm, 5))
    for p in range(1, c.order + 1):
        for m, size in c.invariant_subsets(c.full, p):
            for k in range(max(size, 1), 6):
                assert c.count_c(k, p, m) <= c.count_a(k, p, m)


def test_memo_is_order_independent():
    perm = P("(1 2)", 4)
    keys = list(domain_keys(ChordalCounter(perm), 3))
    a, b = ChordalCounter(perm), ChordalCounter(perm)
    va = {k: a.eval(k) for k in keys}
    vb = {k: b.eval(k) for k in reversed(keys)}
    assert va == vb
    assert a.memo == b.memo


def test_memo_round_trip(tmp_path):
    perm = P("(1 2)", 6)
    a = ChordalCounter(perm)
    total = a.total()
    path = tmp_path / "memo.txt"
    a.save(path)
    assert path.read_text().splitlines()[0] == "CHORDAL-MEMO 1 n=6 perm=2,1,3,4,5,6"
    b = ChordalCounter(perm)
    assert b.load(path) == len(a.memo)
    assert b.memo == a.memo and b.total() == total


def test_memo_header_mismatch(tmp_path):
    path = tmp_path / "memo.txt"
    ChordalCounter(P("(1 2)", 4)).save(path)
    with pytest.raises(CacheMismatch):
        ChordalCounter(P("(1 2 3)", 4)).load(path)
    path.write_text("CHORDAL-MEMO 1 n=4 perm=2,1,3,4\nA 0 0\n")
    with pytest.raises(CacheMismatch):
        ChordalCounter(P("(1 2)", 4)).load(path)


@pytest.mark.parametrize("key, why", [
    (CounterKey("A", k=3, mk=0b01), "not invariant"),
    (CounterKey("A", k=1, mk=0b11), "larger than"),
    (CounterKey("GT", t=1, x=0, k=1), "GT needs"),
    (CounterKey("F", t=1, x=1, l=0, k=1), "l >= 1"),
    (CounterKey("FT", t=1, x=1, l=1, k=1), "time"),
    (CounterKey("G", t=1, x=1, k=1, z=1), "z < x"),
    (CounterKey("Q", k=1), "unknown kind"),
])
def test_domain_errors(key, why):
    c = ChordalCounter(P("(1 2)", 4))
    with pytest.raises(DomainError, match=why):
        c.eval(key)


def test_single_moved_point_is_rejected():
    c = ChordalCounter(P("(1 2)", 3))
    with pytest.raises(DomainError):
        c.mask({3})


@pytest.mark.slow
def test_labeled_seven_matches_enumeration():
    assert count_labeled(7) == oracle_fix(7, Permutation.identity(7)) == LABELED_LARGER[0]
