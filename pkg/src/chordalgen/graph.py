"""Labeled graphs, permutations and the chordality toolkit.

Graphs store their vertices as a sorted tuple of positive integers and their
adjacency as one bitset row per vertex (bit i stands for ``vertices[i]``).
"""

from __future__ import annotations

import math
import re
from functools import cached_property
from typing import Iterable, Iterator, Mapping, Sequence


class GraphError(ValueError):
    """Raised when a graph operation's precondition does not hold."""


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class LabeledGraph:
    """An immutable simple graph on a finite set of positive integers."""

    __slots__ = ("vertices", "_index", "_rows", "__dict__")

    def __init__(self, vertices: Iterable[int], edges: Iterable[tuple[int, int]] = ()):
        verts = tuple(sorted(set(vertices)))
        if any(not isinstance(v, int) or v < 1 for v in verts):
            raise GraphError("vertices must be positive integers")
        index = {v: i for i, v in enumerate(verts)}
        rows = [0] * len(verts)
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at {u}")
            try:
                i, j = index[u], index[v]
            except KeyError as exc:
                raise GraphError(f"edge ({u}, {v}) leaves the vertex set") from exc
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        self.vertices = verts
        self._index = index
        self._rows = tuple(rows)

    @classmethod
    def from_rows(cls, vertices: Sequence[int], rows: Sequence[int]) -> LabeledGraph:
        """Build from sorted vertices and symmetric bitset rows (no checks)."""
        g = cls.__new__(cls)
        g.vertices = tuple(vertices)
        g._index = {v: i for i, v in enumerate(g.vertices)}
        g._rows = tuple(rows)
        return g

    @classmethod
    def complete(cls, vertices: Iterable[int]) -> LabeledGraph:
        verts = sorted(set(vertices))
        full = (1 << len(verts)) - 1
        return cls.from_rows(verts, [full ^ (1 << i) for i in range(len(verts))])

    @property
    def order(self) -> int:
        return len(self.vertices)

    @property
    def rows(self) -> tuple[int, ...]:
        return self._rows

    def index(self, v: int) -> int:
        return self._index[v]

    def mask_of(self, vs: Iterable[int]) -> int:
        m = 0
        for v in vs:
            m |= 1 << self._index[v]
        return m

    def labels_of(self, mask: int) -> frozenset[int]:
        return frozenset(self.vertices[i] for i in _bits(mask))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._rows[self._index[u]] >> self._index[v] & 1)

    def neighbors(self, v: int) -> frozenset[int]:
        return self.labels_of(self._rows[self._index[v]])

    @cached_property
    def edges(self) -> frozenset[tuple[int, int]]:
        out = set()
        for i, row in enumerate(self._rows):
            for j in _bits(row >> (i + 1)):
                out.add((self.vertices[i], self.vertices[i + 1 + j]))
        return frozenset(out)

    @property
    def edge_count(self) -> int:
        return sum(bin(r).count("1") for r in self._rows) // 2

    def is_clique(self, vs: Iterable[int]) -> bool:
        mask = self.mask_of(vs)
        return all((self._rows[i] | (1 << i)) & mask == mask for i in _bits(mask))

    def induced(self, vs: Iterable[int]) -> LabeledGraph:
        keep = sorted(set(vs))
        old = [self._index[v] for v in keep]
        rows = []
        for i in old:
            r = 0
            for j_new, j in enumerate(old):
                if self._rows[i] >> j & 1:
                    r |= 1 << j_new
            rows.append(r)
        return LabeledGraph.from_rows(keep, rows)

    def relabel(self, mapping: Mapping[int, int]) -> LabeledGraph:
        """Apply an injective map to the labels; unmapped labels stay put."""
        new = [mapping.get(v, v) for v in self.vertices]
        if len(set(new)) != len(new):
            raise GraphError("relabeling collides")
        return LabeledGraph(new, [(mapping.get(u, u), mapping.get(v, v)) for u, v in self.edges])

    def components(self, within: int | None = None) -> list[int]:
        """Connected components (as index masks) of the subgraph induced on ``within``."""
        rest = (1 << self.order) - 1 if within is None else within
        return _components(self._rows, rest)

    def is_connected(self) -> bool:
        return self.order == 0 or len(self.components()) == 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LabeledGraph):
            return NotImplemented
        return self.vertices == other.vertices and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self.vertices, self._rows))

    def __repr__(self) -> str:
        return f"LabeledGraph({list(self.vertices)}, {sorted(self.edges)})"


def _components(rows: Sequence[int], within: int) -> list[int]:
    comps = []
    rest = within
    while rest:
        seed = rest & -rest
        comp = seed
        frontier = seed
        while frontier:
            grow = 0
            for i in _bits(frontier):
                grow |= rows[i]
            grow &= rest & ~comp
            comp |= grow
            frontier = grow
        comps.append(comp)
        rest &= ~comp
    return comps


# ---------------------------------------------------------------------------
# chordality


def _is_simplicial(rows: Sequence[int], i: int, alive: int) -> bool:
    nb = rows[i] & alive
    return all((rows[j] | (1 << j)) & nb == nb for j in _bits(nb))


def mcs_order(g: LabeledGraph) -> list[int]:
    """Vertex indices in reverse maximum-cardinality-search order; a PEO iff g is chordal."""
    n = g.order
    weight = [0] * n
    unvisited = (1 << n) - 1
    visit = []
    for _ in range(n):
        best = max(_bits(unvisited), key=lambda i: (weight[i], -i))
        visit.append(best)
        unvisited &= ~(1 << best)
        for j in _bits(g.rows[best] & unvisited):
            weight[j] += 1
    return visit[::-1]


def is_peo(g: LabeledGraph, order: Sequence[int]) -> bool:
    """Check that every vertex is simplicial among itself and the later vertices (index form)."""
    later = (1 << g.order) - 1
    for i in order:
        later &= ~(1 << i)
        if not _is_simplicial(g.rows, i, later):
            return False
    return True


def is_chordal(g: LabeledGraph) -> bool:
    return is_peo(g, mcs_order(g))


def perfect_elimination_ordering(g: LabeledGraph) -> list[int] | None:
    order = mcs_order(g)
    return [g.vertices[i] for i in order] if is_peo(g, order) else None


def simplicial_vertices(g: LabeledGraph) -> frozenset[int]:
    alive = (1 << g.order) - 1
    return frozenset(g.vertices[i] for i in range(g.order) if _is_simplicial(g.rows, i, alive))


class EvaporationSequence:
    """Layers L1..Lt obtained by repeatedly deleting all simplicial vertices outside X."""

    __slots__ = ("layers", "exception")

    def __init__(self, layers: Sequence[frozenset[int]], exception: frozenset[int]):
        self.layers = tuple(layers)
        self.exception = exception

    @property
    def time(self) -> int:
        return len(self.layers)

    @property
    def last_layer(self) -> frozenset[int]:
        return self.layers[-1] if self.layers else frozenset()

    def time_of(self, vs: Iterable[int]) -> int:
        """The index of the last layer meeting ``vs`` (0 if none does)."""
        vs = set(vs)
        return max((i + 1 for i, layer in enumerate(self.layers) if layer & vs), default=0)

    def __repr__(self) -> str:
        return f"EvaporationSequence({[sorted(x) for x in self.layers]}, X={sorted(self.exception)})"


def evaporation_times(rows: Sequence[int], order: int, xmask: int) -> list[int] | None:
    """Per-index layer numbers (0 for X), or None if the peeling gets stuck."""
    times = [0] * order
    alive = (1 << order) - 1
    t = 0
    while alive & ~xmask:
        t += 1
        layer = 0
        for i in _bits(alive & ~xmask):
            if _is_simplicial(rows, i, alive):
                layer |= 1 << i
        if not layer:
            return None
        for i in _bits(layer):
            times[i] = t
        alive &= ~layer
    return times


def evaporation_sequence(g: LabeledGraph, exception: Iterable[int] = ()) -> EvaporationSequence:
    x = frozenset(exception)
    if not x <= set(g.vertices):
        raise GraphError("exception set is not inside the graph")
    if not g.is_clique(x):
        raise GraphError("exception set is not a clique")
    times = evaporation_times(g.rows, g.order, g.mask_of(x))
    if times is None:
        raise GraphError("graph is not chordal")
    layers = [set() for _ in range(max(times, default=0))]
    for v, t in zip(g.vertices, times):
        if t:
            layers[t - 1].add(v)
    return EvaporationSequence([frozenset(layer) for layer in layers], x)


def glue(g1: LabeledGraph, g2: LabeledGraph) -> LabeledGraph:
    """Union of two graphs that induce the same subgraph on their common vertices."""
    shared = set(g1.vertices) & set(g2.vertices)
    if g1.induced(shared) != g2.induced(shared):
        raise GraphError("graphs disagree on their common vertices")
    return LabeledGraph(set(g1.vertices) | set(g2.vertices), g1.edges | g2.edges)


def phi(a: Iterable[int], b: Iterable[int]) -> dict[int, int]:
    """The order-preserving bijection between two equally sized sets."""
    sa, sb = sorted(a), sorted(b)
    if len(sa) != len(sb):
        raise GraphError(f"size mismatch: {len(sa)} vs {len(sb)}")
    return dict(zip(sa, sb))


def maximal_cliques(g: LabeledGraph) -> list[frozenset[int]]:
    """Maximal cliques of a chordal graph, read off a PEO."""
    order = mcs_order(g)
    if not is_peo(g, order):
        raise GraphError("graph is not chordal")
    pos = {v: k for k, v in enumerate(order)}
    cands = []
    for i in order:
        later = frozenset(g.vertices[j] for j in _bits(g.rows[i]) if pos[j] > pos[i])
        cands.append(later | {g.vertices[i]})
    return [c for c in cands if not any(c < d for d in cands)]


# ---------------------------------------------------------------------------
# permutations


class Permutation:
    """A permutation of [n], stored as its image tuple."""

    __slots__ = ("n", "image", "__dict__")

    def __init__(self, image: Sequence[int]):
        img = tuple(image)
        n = len(img)
        if sorted(img) != list(range(1, n + 1)):
            raise GraphError(f"not a permutation of [{n}]: {list(img)}")
        self.n = n
        self.image = img

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(range(1, n + 1))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> Permutation:
        img = list(range(1, n + 1))
        seen: set[int] = set()
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                if not 1 <= a <= n or a in seen:
                    raise GraphError(f"bad cycle entry {a}")
                seen.add(a)
                img[a - 1] = b
        return cls(img)

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> Permutation:
        """Parse "2,1,3" (image list) or "(1 2)(3 4 5)" (cycles, fixed points omitted)."""
        text = text.strip()
        if text.startswith("(") or text == "":
            cycles = [[int(tok) for tok in body.replace(",", " ").split()]
                      for body in re.findall(r"\(([^()]*)\)", text)]
            cycles = [c for c in cycles if c]
            largest = max((max(c) for c in cycles), default=0)
            size = n if n is not None else max(largest, 1)
            if largest > size:
                raise GraphError(f"cycle entry {largest} exceeds n={size}")
            return cls.from_cycles(size, cycles)
        img = [int(tok) for tok in re.split(r"[,\s]+", text) if tok]
        if n is not None and len(img) < n:
            img += list(range(len(img) + 1, n + 1))
        if n is not None and len(img) != n:
            raise GraphError(f"image list has {len(img)} entries, expected {n}")
        return cls(img)

    def __call__(self, i: int) -> int:
        return self.image[i - 1] if 1 <= i <= self.n else i

    @cached_property
    def moved(self) -> tuple[int, ...]:
        return tuple(i for i in range(1, self.n + 1) if self.image[i - 1] != i)

    @cached_property
    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """Nontrivial cycles, each starting at its smallest element."""
        seen: set[int] = set()
        out = []
        for i in self.moved:
            if i in seen:
                continue
            cyc = [i]
            seen.add(i)
            j = self(i)
            while j != i:
                cyc.append(j)
                seen.add(j)
                j = self(j)
            out.append(tuple(cyc))
        return tuple(out)

    @cached_property
    def cycle_type(self) -> tuple[int, ...]:
        """Lengths of nontrivial cycles, descending."""
        return tuple(sorted((len(c) for c in self.cycles), reverse=True))

    @cached_property
    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles)) if self.cycles else 1

    def power(self, p: int) -> Permutation:
        p %= self.order
        img = list(range(1, self.n + 1))
        for cyc in self.cycles:
            L = len(cyc)
            for k, a in enumerate(cyc):
                img[a - 1] = cyc[(k + p) % L]
        return Permutation(img)

    def inverse(self) -> Permutation:
        img = [0] * self.n
        for i, j in enumerate(self.image, start=1):
            img[j - 1] = i
        return Permutation(img)

    def compose(self, other: Permutation) -> Permutation:
        """self ∘ other (apply other first)."""
        return Permutation([self(other(i)) for i in range(1, self.n + 1)])

    def conjugate_by(self, sigma: Permutation) -> Permutation:
        """sigma ∘ self ∘ sigma⁻¹."""
        return sigma.compose(self).compose(sigma.inverse())

    def is_identity(self) -> bool:
        return not self.moved

    def cycle_string(self) -> str:
        return "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles) or "()"

    def image_string(self) -> str:
        return ",".join(map(str, self.image))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and self.image == other.image

    def __hash__(self) -> int:
        return hash(self.image)

    def __repr__(self) -> str:
        return f"Permutation({self.cycle_string()}, n={self.n})"


def is_automorphism(g: LabeledGraph, sigma: Permutation, power: int = 1) -> bool:
    """Whether sigma**power maps g onto itself; labels above sigma.n are fixed."""
    s = sigma.power(power) if power != 1 else sigma
    vs = set(g.vertices)
    if any(s(v) not in vs for v in vs):
        raise GraphError("permutation does not map the vertex set to itself")
    return all(g.has_edge(s(u), s(v)) for u, v in g.edges)


def period(i: int, cset: Iterable[int], sigma: Permutation) -> int:
    """Smallest j >= 1 with sigma^j(i) in cset."""
    cs = set(cset)
    if i not in cs:
        raise GraphError(f"{i} is not in the set")
    j, cur = 1, sigma(i)
    while cur not in cs:
        j += 1
        cur = sigma(cur)
    return j


def cycles_restricted(sigma: Permutation, p: int, subset: Iterable[int]) -> list[frozenset[int]]:
    """The orbits of sigma^p on an invariant subset."""
    s = set(subset)
    sp = sigma.power(p)
    out = []
    while s:
        start = min(s)
        orbit = {start}
        cur = sp(start)
        while cur != start:
            if cur not in s:
                raise GraphError("subset is not invariant")
            orbit.add(cur)
            cur = sp(cur)
        out.append(frozenset(orbit))
        s -= orbit
    return out


def cycle_type_representative(n: int, cycle_type: Sequence[int]) -> Permutation:
    """The permutation with consecutive cycles (1..a)(a+1..a+b)... of the given lengths."""
    cycles, start = [], 1
    for length in cycle_type:
        cycles.append(list(range(start, start + length)))
        start += length
    if start - 1 > n:
        raise GraphError("cycle type does not fit")
    return Permutation.from_cycles(n, cycles)


def conjugator(source: Permutation, target: Permutation) -> Permutation:
    """Some sigma with sigma ∘ source ∘ sigma⁻¹ = target (equal cycle types required)."""
    if source.cycle_type != target.cycle_type:
        raise GraphError("cycle types differ")
    key = lambda c: (-len(c), c)
    img = [0] * source.n
    for cs, ct in zip(sorted(source.cycles, key=key), sorted(target.cycles, key=key)):
        for a, b in zip(cs, ct):
            img[a - 1] = b
    rest_s = [i for i in range(1, source.n + 1) if i not in set(source.moved)]
    rest_t = [i for i in range(1, source.n + 1) if i not in set(target.moved)]
    for a, b in zip(rest_s, rest_t):
        img[a - 1] = b
    return Permutation(img)


def integer_partitions(n: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in integer_partitions(n - first, first):
            yield (first,) + rest


def cycle_types(n: int) -> list[tuple[int, ...]]:
    """All cycle types of S_n, as descending tuples of nontrivial cycle lengths."""
    return [tuple(x for x in part if x > 1) for part in integer_partitions(n)]


def class_size(n: int, cycle_type: Sequence[int]) -> int:
    """Number of permutations of [n] with the given nontrivial cycle lengths."""
    ones = n - sum(cycle_type)
    denom = math.factorial(ones)
    counts: dict[int, int] = {}
    for c in cycle_type:
        counts[c] = counts.get(c, 0) + 1
    for length, mult in counts.items():
        denom *= length ** mult * math.factorial(mult)
    return math.factorial(n) // denom
