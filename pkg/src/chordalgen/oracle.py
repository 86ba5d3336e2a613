"""Brute-force ground truth for every counter and for the samplers' targets.

Everything here enumerates graphs outright and tests the defining
properties one by one.  The chordality test is a plain simplicial-peeling
loop, deliberately independent of the search-based test in :mod:`graph`.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from functools import lru_cache
from typing import Iterator, NamedTuple

from .counting import ChordalCounter, CounterKey
from .graph import LabeledGraph, Permutation, _components, evaporation_times, is_automorphism

MAX_ORDER = 7
ANY = -1  # membership that holds for every t (no components to constrain)


class OracleTooLarge(ValueError):
    pass


def _check_order(m: int, limit: int = MAX_ORDER) -> None:
    if m > limit:
        raise OracleTooLarge(f"{m} vertices exceeds the brute-force limit {limit}")


def pair_list(m: int) -> list[tuple[int, int]]:
    """Vertex pairs in upper-triangle column-major order: (0,1), (0,2), (1,2), (0,3), ..."""
    return [(i, j) for j in range(1, m) for i in range(j)]


def rows_from_mask(m: int, mask: int) -> tuple[int, ...]:
    rows = [0] * m
    for b, (i, j) in enumerate(pair_list(m)):
        if mask >> b & 1:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return tuple(rows)


def mask_from_rows(rows) -> int:
    m = len(rows)
    return sum(1 << b for b, (i, j) in enumerate(pair_list(m)) if rows[i] >> j & 1)


def peel_chordal(rows, m: int) -> bool:
    """Chordal iff simplicial vertices can be deleted one at a time until nothing is left."""
    alive = (1 << m) - 1
    while alive:
        for i in range(m):
            if alive >> i & 1:
                nb = rows[i] & alive
                if all((rows[j] | 1 << j) & nb == nb for j in range(m) if nb >> j & 1):
                    alive &= ~(1 << i)
                    break
        else:
            return False
    return True


@lru_cache(maxsize=None)
def chordal_rows(m: int) -> tuple[tuple[int, ...], ...]:
    """Row tuples of every chordal graph on m local vertices, in mask order."""
    _check_order(m)
    out = []
    for mask in range(1 << (m * (m - 1) // 2)):
        rows = rows_from_mask(m, mask)
        if peel_chordal(rows, m):
            out.append(rows)
    return tuple(out)


def _edge_orbits(m: int, sig: tuple[int, ...]) -> list[list[tuple[int, int]]]:
    seen: set[tuple[int, int]] = set()
    orbits = []
    for i, j in pair_list(m):
        if (i, j) in seen:
            continue
        orbit = []
        a, b = i, j
        while (min(a, b), max(a, b)) not in seen:
            e = (min(a, b), max(a, b))
            seen.add(e)
            orbit.append(e)
            a, b = sig[a], sig[b]
        orbits.append(orbit)
    return orbits


@lru_cache(maxsize=None)
def invariant_chordal_rows(m: int, sig: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    """Chordal graphs on m local vertices with the local permutation sig as automorphism."""
    if all(sig[i] == i for i in range(m)):
        return chordal_rows(m)
    _check_order(m)
    orbits = _edge_orbits(m, sig)
    out = []
    for choice in range(1 << len(orbits)):
        rows = [0] * m
        for b, orbit in enumerate(orbits):
            if choice >> b & 1:
                for i, j in orbit:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
        if peel_chordal(rows, m):
            out.append(tuple(rows))
    out.sort(key=mask_from_rows)
    return tuple(out)


def enumerate_chordal(vertices) -> Iterator[LabeledGraph]:
    vs = sorted(vertices)
    for rows in chordal_rows(len(vs)):
        yield LabeledGraph.from_rows(vs, rows)


def _local_perm(perm: Permutation, vertices) -> tuple[int, ...]:
    idx = {v: i for i, v in enumerate(vertices)}
    return tuple(idx[perm(v)] for v in vertices)


def oracle_fix(n: int, perm: Permutation) -> int:
    """|Fix(perm)|: chordal graphs on [n] with perm as automorphism."""
    _check_order(n)
    return len(invariant_chordal_rows(n, _local_perm(perm, range(1, n + 1))))


def oracle_fix_by_filter(n: int, perm: Permutation) -> int:
    """Same count via the plain filter over all chordal graphs (slower, for cross-checks)."""
    return sum(1 for g in enumerate_chordal(range(1, n + 1)) if is_automorphism(g, perm))


# ---------------------------------------------------------------------------
# counter functions from their definitions


class _Record(NamedTuple):
    rows: tuple[int, ...]
    times: tuple[int, ...]
    total: int
    connected: bool
    comps: tuple[tuple[int, int, int], ...]  # (mask, neighbours in X, evaporation time)


def _clique(rows, mask: int) -> bool:
    return all((rows[i] | 1 << i) & mask == mask for i in range(len(rows)) if mask >> i & 1)


def _comp_data(rows, times, within: int, target: int) -> tuple[tuple[int, int, int], ...]:
    out = []
    for comp in _components(rows, within):
        nb = 0
        ct = 0
        for i in range(len(rows)):
            if comp >> i & 1:
                nb |= rows[i]
                ct = max(ct, times[i])
        out.append((comp, nb & target, ct))
    return tuple(out)


@lru_cache(maxsize=None)
def _records(m: int, sig: tuple[int, ...], xmask: int) -> tuple[_Record, ...]:
    full = (1 << m) - 1
    out = []
    for rows in invariant_chordal_rows(m, sig):
        if not _clique(rows, xmask):
            continue
        times = evaporation_times(rows, m, xmask)
        assert times is not None
        conn = m == 0 or len(_components(rows, full)) == 1
        out.append(_Record(rows, tuple(times), max(times, default=0), conn,
                           _comp_data(rows, times, full & ~xmask, xmask)))
    return tuple(out)


def _membership(kind: str, rec: _Record, m: int, X: int, L: int, Z: int) -> int | None:
    """The t for which the graph is counted by ``kind`` (ANY for all t, None for none)."""
    comps = rec.comps
    if kind == "A":
        return ANY
    if kind == "C":
        return ANY if rec.connected else None
    if not rec.connected:
        return None
    if kind in ("G", "GT", "GTP"):
        if any(not nb & X & ~Z for _, nb, _ in comps):
            return None
        if kind == "G":
            return rec.total
        if kind == "GTP" and any(nb == X for _, nb, _ in comps):
            return None
        times = {ct for _, _, ct in comps}
        if not times:
            return ANY
        return times.pop() if len(times) == 1 else None
    if kind in ("G1", "GGE2"):
        if any(nb != X for _, nb, _ in comps):
            return None
        if (kind == "G1") != (len(comps) == 1) or not comps:
            return None
        times = {ct for _, _, ct in comps}
        return times.pop() if len(times) == 1 else None
    # f family
    full = (1 << m) - 1
    T = rec.total
    last = sum(1 << i for i in range(m) if rec.times[i] == T and T > 0)
    if last != L or not _clique(rec.rows, X | L):
        return None
    base = Z if kind == "FTPZ" else X
    if len(_components(rec.rows, full & ~base)) != 1:
        return None
    if kind == "F":
        return T
    inner = _comp_data(rec.rows, rec.times, full & ~(X | L), X | L)
    if not inner or any(ct != T - 1 for _, _, ct in inner):
        return None
    if kind == "FTPZ" and any(nb == X | L for _, nb, _ in inner):
        return None
    return T


class Oracle:
    """Direct evaluation of counter keys for one permutation."""

    def __init__(self, perm: Permutation):
        self.perm = perm
        self.layouts = ChordalCounter(perm)  # used for vertex layouts and validation only
        self._profiles: dict[tuple, Counter] = {}

    def profile(self, key: CounterKey) -> tuple[Counter, bool]:
        V, X, L, Z = self.layouts.layout(key)
        m = len(V)
        _check_order(m, 6)
        sigma = self.perm.power(key.p)
        sig = _local_perm(sigma, V)
        idx = {v: i for i, v in enumerate(V)}
        bits = lambda s: sum(1 << idx[v] for v in s)
        xm, lm, zm = bits(X), bits(L), bits(Z)
        gkey = (key.kind, m, sig, xm, lm, zm)
        hist = self._profiles.get(gkey)
        if hist is None:
            hist = Counter()
            for rec in _records(m, sig, xm):
                r = _membership(key.kind, rec, m, xm, lm, zm)
                if r is not None:
                    hist[r] += 1
            self._profiles[gkey] = hist
        return hist, key.kind == "G"

    def count(self, key) -> int:
        key = CounterKey(*key)
        key = key._replace(p=self.layouts.canon(key.p))
        hist, cumulative = self.profile(key)
        if cumulative:
            return sum(c for t, c in hist.items() if t <= key.t)
        return hist.get(ANY, 0) + hist.get(key.t, 0)


def oracle_counter(perm: Permutation, key) -> int:
    return Oracle(perm).count(key)


# ---------------------------------------------------------------------------
# unlabeled census


class CensusClass(NamedTuple):
    canonical: int  # edge mask of the canonical representative
    orbit_size: int


class Census(NamedTuple):
    n: int
    labeled_count: int
    classes: dict[int, CensusClass]

    def representative(self, canon: int) -> LabeledGraph:
        return LabeledGraph.from_rows(range(1, self.n + 1), rows_from_mask(self.n, canon))


@lru_cache(maxsize=None)
def _pair_maps(m: int) -> tuple[tuple[int, ...], ...]:
    index = {pr: b for b, pr in enumerate(pair_list(m))}
    maps = []
    for perm in itertools.permutations(range(m)):
        maps.append(tuple(index[tuple(sorted((perm[i], perm[j])))] for i, j in pair_list(m)))
    return tuple(maps)


def relabel_mask(mask: int, pair_map: tuple[int, ...]) -> int:
    out = 0
    b = 0
    while mask:
        if mask & 1:
            out |= 1 << pair_map[b]
        mask >>= 1
        b += 1
    return out


def canonical_mask(m: int, mask: int) -> int:
    """The smallest edge mask over all relabelings (m <= 8)."""
    _check_order(m, 8)
    return min(relabel_mask(mask, pm) for pm in _pair_maps(m))


def canonical_form(g: LabeledGraph) -> int:
    return canonical_mask(g.order, mask_from_rows(g.rows))


@lru_cache(maxsize=None)
def census(n: int) -> Census:
    """Isomorphism classes of chordal graphs on [n] with their labeled orbit sizes."""
    _check_order(n)
    canon_of: dict[int, int] = {}
    classes: dict[int, CensusClass] = {}
    total = 0
    maps = _pair_maps(n)
    for rows in chordal_rows(n):
        total += 1
        mask = mask_from_rows(rows)
        if mask in canon_of:
            continue
        orbit = {relabel_mask(mask, pm) for pm in maps}
        canon = min(orbit)
        for o in orbit:
            canon_of[o] = canon
        classes[canon] = CensusClass(canon, len(orbit))
    assert sum(c.orbit_size for c in classes.values()) == total
    return Census(n, total, classes)


def automorphism_count(g: LabeledGraph) -> int:
    n = g.order
    return sum(1 for perm in itertools.permutations(range(1, n + 1))
               if is_automorphism(LabeledGraph.from_rows(range(1, n + 1), g.rows), Permutation(perm)))


def burnside_sum(n: int) -> int:
    """Sum over permutations of [n] of |Fix|, grouped by cycle type."""
    from .graph import class_size, cycle_type_representative, cycle_types
    return sum(class_size(n, ct) * oracle_fix(n, cycle_type_representative(n, ct))
               for ct in cycle_types(n))


def burnside_holds(n: int) -> bool:
    return burnside_sum(n) == math.factorial(n) * len(census(n).classes)


def satisfies(counter: ChordalCounter, key, g: LabeledGraph) -> bool:
    """Whether one graph belongs to the set a key counts."""
    key = CounterKey(*key)
    V, X, L, Z = counter.layout(key)
    if tuple(g.vertices) != V:
        return False
    m = len(V)
    rows = g.rows
    sigma = counter.perm.power(key.p)
    if not peel_chordal(rows, m) or not is_automorphism(g, sigma):
        return False
    xm, lm, zm = g.mask_of(X), g.mask_of(L), g.mask_of(Z)
    if not _clique(rows, xm):
        return False
    times = evaporation_times(rows, m, xm)
    full = (1 << m) - 1
    rec = _Record(rows, tuple(times), max(times, default=0),
                  m == 0 or len(_components(rows, full)) == 1,
                  _comp_data(rows, times, full & ~xm, xm))
    r = _membership(key.kind, rec, m, xm, lm, zm)
    if r is None:
        return False
    if key.kind == "G":
        return r <= key.t
    return r == ANY or r == key.t
