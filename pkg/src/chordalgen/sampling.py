"""Uniform sampling of chordal graphs with a prescribed automorphism.

For a key, one term of its recurrence is chosen with probability
weight / value, the label subsets behind the term's binomial factors are
chosen uniformly, the sub-keys are sampled recursively, and the parts are
relabeled into place and glued.  Since every term's weight is exactly the
number of ways to make these choices, the result is uniform over the graphs
the key counts.
"""

from __future__ import annotations

from typing import Iterable

from .counting import ChordalCounter, counter_for
from .exactmath import RandomStream, binomial, random_subset, uniform_below, weighted_choice
from .graph import GraphError, LabeledGraph, Permutation, is_automorphism, is_chordal

Edges = set[tuple[int, int]]


def _popcount(m: int) -> int:
    return bin(m).count("1")


class Piece:
    """A mutable graph under construction: vertex set plus edge set."""

    __slots__ = ("vertices", "edges")

    def __init__(self, vertices: Iterable[int] = (), edges: Iterable[tuple[int, int]] = ()):
        self.vertices = set(vertices)
        self.edges = set(edges)

    @classmethod
    def clique(cls, vertices: Iterable[int]) -> Piece:
        vs = sorted(vertices)
        return cls(vs, [(u, v) for i, u in enumerate(vs) for v in vs[i + 1:]])

    def relabeled(self, mapping: dict[int, int]) -> Piece:
        get = mapping.get
        edges = set()
        for u, v in self.edges:
            a, b = get(u, u), get(v, v)
            edges.add((a, b) if a < b else (b, a))
        return Piece({get(v, v) for v in self.vertices}, edges)

    def absorb(self, other: Piece) -> None:
        self.vertices |= other.vertices
        self.edges |= other.edges

    def to_graph(self) -> LabeledGraph:
        return LabeledGraph(self.vertices, self.edges)


def _phi(*pairs: tuple[Iterable[int], Iterable[int]]) -> dict[int, int]:
    """Order-preserving maps, part by part, merged into one dict."""
    out: dict[int, int] = {}
    for src, dst in pairs:
        src, dst = list(src), sorted(dst)
        if len(src) != len(dst):
            raise GraphError("relabel size mismatch")
        out.update(zip(src, dst))
    return out


def _minus(items: Iterable[int], chosen: Iterable[int]) -> list[int]:
    gone = set(chosen)
    return [v for v in items if v not in gone]


class FixedSampler:
    """Draws uniform graphs for the keys of one counter."""

    def __init__(self, counter: ChordalCounter, rng: RandomStream, check: bool = False):
        self.counter = counter
        self.rng = rng
        self.check = check
        self._oracle = None
        self._draw = {
            "A": self._a, "C": self._c, "G": self._g, "GT": self._gt, "GTP": self._gt,
            "G1": self._g1, "GGE2": self._gge2, "F": self._f, "FT": self._ft, "FTPZ": self._ftpz,
        }

    # ------------------------------------------------------------------

    def pick(self, key: tuple) -> tuple:
        """One term of key's recurrence, with probability weight / value."""
        total = self.counter.value(key)
        if not total:
            raise ValueError(f"no graphs for key {key}")
        r = uniform_below(total, self.rng)
        for w, term in self.counter.terms(key):
            if r < w:
                return term
            r -= w
        raise AssertionError("term weights do not add up to the value")

    def sample(self, key: tuple) -> Piece:
        term = self.pick(key)
        piece = self._draw[key[0]](key, term)
        if self.check:
            self._verify(key, piece)
        return piece

    def _verify(self, key: tuple, piece: Piece) -> None:
        from .oracle import satisfies
        V = self.counter.layout(key)[0]
        g = piece.to_graph()
        if tuple(g.vertices) != V:
            raise AssertionError(f"sample for {key} has vertices {g.vertices}, expected {V}")
        if not satisfies(self.counter, key, g):
            raise AssertionError(f"sample for {key} violates its definition: {g}")

    # ------------------------------------------------------------------
    # helpers

    def _parts(self, key):
        """Non-moved labels of X, L and K for a key."""
        _, t, x, l, k, z, p, mx, ml, mk, mz = key
        f = self.counter.free
        a, b, c = x - _popcount(mx), l - _popcount(ml), k - _popcount(mk)
        return list(f[:a]), list(f[a:a + b]), list(f[a + b:a + b + c])

    def _free_prefix(self, start: int, size: int) -> list[int]:
        return list(self.counter.free[start:start + size])

    def _choose_with_s(self, pool: list[int], r: int, s_in: bool) -> list[int]:
        """An r-subset of pool; it must contain pool[0] unless s is a moved point."""
        if s_in:
            return random_subset(pool, r, self.rng)
        return sorted([pool[0]] + random_subset(pool[1:], r - 1, self.rng))

    def _choose_x(self, xs: list[int], zb: int, r: int, avoid_z: bool) -> list[int]:
        """An r-subset of xs, forced to leave V_Z = xs[:zb] when avoid_z."""
        if not avoid_z:
            return random_subset(xs, r, self.rng)
        inside, outside = xs[:zb], xs[zb:]
        weights = [binomial(len(outside), j) * binomial(zb, r - j) if j >= 1 else 0
                   for j in range(r + 1)]
        j = weighted_choice(weights, self.rng)
        return sorted(random_subset(outside, j, self.rng) + random_subset(inside, r - j, self.rng))

    def _copies(self, piece: Piece, p: int, copies: int) -> Piece:
        """piece together with its images under pi^p, ..., pi^(p(copies-1))."""
        out = Piece(piece.vertices, piece.edges)
        perm = self.counter.perm
        for i in range(1, copies):
            sp = perm.power(p * i)
            out.absorb(piece.relabeled({v: sp(v) for v in piece.vertices}))
        return out

    def _s_in(self, before: int, count: int, mk: int) -> bool:
        return self.counter._s_in(before, count, mk)

    # ------------------------------------------------------------------
    # one method per kind, mirroring the term generators in counting

    def _a(self, key, term):
        _, t, x, l, k, z, p, mx, ml, m, mz = key
        if term[0] == "base":
            return Piece()
        _, _, us = self._parts(key)
        if term[0] == "inv":
            _, kp, mp = term
            r = kp - _popcount(mp)
            chosen = self._choose_with_s(us, r, self._s_in(0, len(us), m))
            g1 = self.sample(("C", 0, 0, 0, kp, 0, p, 0, 0, mp, 0))
            g1 = g1.relabeled(_phi((self._free_prefix(0, r), chosen)))
            g2 = self.sample(("A", 0, 0, 0, k - kp, 0, p, 0, 0, m ^ mp, 0))
            g2 = g2.relabeled(_phi((self._free_prefix(0, len(us) - r), _minus(us, chosen))))
            g1.absorb(g2)
            return g1
        _, c, pc, clos = term
        q = self.counter.canon(p * pc)
        sz = _popcount(c)
        g1 = self._copies(self.sample(("C", 0, 0, 0, sz, 0, q, 0, 0, c, 0)), p, pc)
        g1.absorb(self.sample(("A", 0, 0, 0, k - pc * sz, 0, p, 0, 0, m ^ clos, 0)))
        return g1

    def _c(self, key, term):
        _, t, x, l, k, z, p, mx, ml, m, mz = key
        return self.sample(("G1", term[1], 0, 0, k, 0, p, 0, 0, m, 0))

    def _g1(self, key, term):
        _, t, x, l, k, z, p, mx, ml, mk, mz = key
        _, ll, m = term
        xs, _, ks = self._parts(key)
        a = len(xs)
        r = ll - _popcount(m)
        chosen = random_subset(ks, r, self.rng)
        sub = self.sample(("F", t, x, ll, k - ll, 0, p, mx, m, mk ^ m, 0))
        return sub.relabeled(_phi((self._free_prefix(a, r), chosen),
                                  (self._free_prefix(a + r, len(ks) - r), _minus(ks, chosen))))

    def _f(self, key, term):
        _, t, x, l, k, z, p, mx, ml, mk, mz = key
        V, X, L, _ = self.counter.layout(key)
        if term[0] == "base":
            return Piece.clique(V)
        _, kp, m = term
        xs, ls, ks = self._parts(key)
        start = len(xs) + len(ls)
        r = kp - _popcount(m)
        chosen = random_subset(ks, r, self.rng)
        g1 = self.sample(("FT", t, x, l, kp, 0, p, mx, ml, m, 0))
        g1 = g1.relabeled(_phi((self._free_prefix(start, r), chosen)))
        rest = k - kp
        g2 = self.sample(("G", min(t - 2, rest), x + l, 0, rest, x, p, mx | ml, 0, mk ^ m, mx))
        g2 = g2.relabeled(_phi((self._free_prefix(start, len(ks) - r), _minus(ks, chosen))))
        g1.absorb(g2)
        return g1

    def _g(self, key, term):
        _, t, x, l, k, z, p, mx, ml, mk, mz = key
        if term[0] == "base":
            return Piece.clique(self.counter.layout(key)[1])
        _, kp, m = term
        xs, _, ks = self._parts(key)
        a = len(xs)
        r = kp - _popcount(m)
        chosen = random_subset(ks, r, self.rng)
        g1 = self.sample(("GT", t, x, 0, kp, z, p, mx, 0, m, mz))
        g1 = g1.relabeled(_phi((self._free_prefix(a, r), chosen)))
        rest = k - kp
        g2 = self.sample(("G", min(t - 1, rest), x, 0, rest, z, p, mx, 0, mk ^ m, mz))
        g2 = g2.relabeled(_phi((self._free_prefix(a, len(ks) - r), _minus(ks, chosen))))
        g1.absorb(g2)
        return g1

    def _gt(self, key, term):
        kind, t, x, l, k, z, p, mx, ml, mk, mz = key
        if term[0] == "base":
            return Piece.clique(self.counter.layout(key)[1])
        xs, _, ks = self._parts(key)
        a = len(xs)
        zb = z - _popcount(mz)
        if term[0] == "inv":
            _, kp, m, xp, mp = term
            r = kp - _popcount(m)
            rx = xp - _popcount(mp)
            chosen = self._choose_with_s(ks, r, self._s_in(a, len(ks), mk))
            xsel = self._choose_x(xs, zb, rx, mp & ~mz == 0)
            g1 = self.sample(("G1", t, xp, 0, kp, 0, p, mp, 0, m, 0))
            g1 = g1.relabeled(_phi((self._free_prefix(0, rx), xsel),
                                   (self._free_prefix(rx, r), chosen)))
            g2 = self.sample((kind, t, x, 0, k - kp, z, p, mx, 0, mk ^ m, mz))
            g2 = g2.relabeled(_phi((self._free_prefix(a, len(ks) - r), _minus(ks, chosen))))
            g1.absorb(g2)
            return g1
        _, c, pc, clos, xp, mp = term
        q = self.counter.canon(p * pc)
        rx = xp - _popcount(mp)
        xsel = self._choose_x(xs, zb, rx, mp & ~mz == 0)
        g1 = self.sample(("G1", t, xp, 0, _popcount(c), 0, q, mp, 0, c, 0))
        g1 = self._copies(g1.relabeled(_phi((self._free_prefix(0, rx), xsel))), p, pc)
        g1.absorb(self.sample((kind, t, x, 0, k - pc * _popcount(c), z, p, mx, 0, mk ^ clos, mz)))
        return g1

    def _gge2(self, key, term):
        _, t, x, l, k, z, p, mx, ml, mk, mz = key
        xs, _, ks = self._parts(key)
        a = len(xs)
        if term[0] == "inv":
            _, kp, m, rest_kind = term
            r = kp - _popcount(m)
            chosen = self._choose_with_s(ks, r, self._s_in(a, len(ks), mk))
            g1 = self.sample(("G1", t, x, 0, kp, 0, p, mx, 0, m, 0))
            g1 = g1.relabeled(_phi((self._free_prefix(a, r), chosen)))
            g2 = self.sample((rest_kind, t, x, 0, k - kp, 0, p, mx, 0, mk ^ m, 0))
            g2 = g2.relabeled(_phi((self._free_prefix(a, len(ks) - r), _minus(ks, chosen))))
            g1.absorb(g2)
            return g1
        _, c, pc, clos, rest_kind = term
        q = self.counter.canon(p * pc)
        sz = _popcount(c)
        g1 = self._copies(self.sample(("G1", t, x, 0, sz, 0, q, mx, 0, c, 0)), p, pc)
        if rest_kind is not None:
            g1.absorb(self.sample((rest_kind, t, x, 0, k - pc * sz, 0, p, mx, 0, mk ^ clos, 0)))
        return g1

    def _ft(self, key, term):
        _, t, x, l, k, z, p, mx, ml, mk, mz = key
        if term[0] == "none":
            return self.sample(("FTPZ", t, x, l, k, x, p, mx, ml, mk, mx))
        tag, kp, m = term
        xs, ls, ks = self._parts(key)
        start = len(xs) + len(ls)
        r = kp - _popcount(m)
        chosen = random_subset(ks, r, self.rng)
        if tag == "one":
            first = ("G1", t - 1, x + l, 0, kp, 0, p, mx | ml, 0, m, 0)
            second = ("FTPZ", t, x, l, k - kp, x, p, mx, ml, mk ^ m, mx)
        else:
            first = ("GGE2", t - 1, x + l, 0, kp, 0, p, mx | ml, 0, m, 0)
            second = ("GTP", t - 1, x + l, 0, k - kp, x, p, mx | ml, 0, mk ^ m, mx)
        g1 = self.sample(first).relabeled(_phi((self._free_prefix(start, r), chosen)))
        g2 = self.sample(second).relabeled(
            _phi((self._free_prefix(start, len(ks) - r), _minus(ks, chosen))))
        g1.absorb(g2)
        return g1

    def _ftpz(self, key, term):
        _, t, x, l, k, z, p, mx, ml, mk, mz = key
        xs, ls, ks = self._parts(key)
        a, b = len(xs), len(ls)
        zb = z - _popcount(mz)
        if term[0] == "inv":
            _, kp, m, xp, mxp, lp, mlp = term
            q, copies, clos, sz = p, 1, m, kp
            r = kp - _popcount(m)
            chosen = self._choose_with_s(ks, r, self._s_in(a + b, len(ks), mk))
        else:
            _, c, pc, clos, xp, mxp, lp, mlp = term
            q, copies, m, sz = self.counter.canon(p * pc), pc, c, _popcount(c)
            r = 0
            chosen = []
        rx = xp - _popcount(mxp)
        rl = lp - _popcount(mlp)
        xsel = self._choose_x(xs, zb, rx, lp == 0 and mxp & ~mz == 0)
        lsel = random_subset(ls, rl, self.rng)
        g1 = self.sample(("G1", t - 1, xp + lp, 0, sz, 0, q, mxp | mlp, 0, m, 0))
        g1 = g1.relabeled(_phi((self._free_prefix(0, rx + rl), xsel + lsel),
                               (self._free_prefix(rx + rl, r), chosen)))
        if copies > 1:
            g1 = self._copies(g1, p, copies)
        mlpp = self.counter.closure(mlp, p, copies) if copies > 1 else mlp
        moved_l = rl + _popcount(mlpp)
        rest_k = k - (kp if term[0] == "inv" else copies * sz)
        rest_mk = mk ^ clos
        krest = _minus(ks, chosen)
        if moved_l < l:
            g2 = self.sample(("FTPZ", t, x + moved_l, l - moved_l, rest_k, z, p,
                              mx | mlpp, ml ^ mlpp, rest_mk, mz))
            g2 = g2.relabeled(_phi((self._free_prefix(0, a + rl), xs + lsel),
                                   (self._free_prefix(a + rl, b - rl), _minus(ls, lsel)),
                                   (self._free_prefix(a + b, len(krest)), krest)))
        else:
            g2 = self.sample(("GTP", t - 1, x + l, 0, rest_k, z, p, mx | ml, 0, rest_mk, mz))
            g2 = g2.relabeled(_phi((self._free_prefix(a + b, len(krest)), krest)))
        g1.absorb(g2)
        return g1


def sample_fixed(perm: Permutation, rng: RandomStream, counter: ChordalCounter | None = None,
                 check: bool = False) -> LabeledGraph:
    """A uniform chordal graph on [n] that has perm as an automorphism."""
    counter = counter or counter_for(perm)
    counter.total()
    key = ("A", 0, 0, 0, counter.n, 0, 1, 0, 0, counter.full, 0)
    g = FixedSampler(counter, rng, check).sample(key).to_graph()
    if g.vertices != tuple(range(1, counter.n + 1)):
        raise AssertionError(f"sample spans {g.vertices}")
    if not is_chordal(g) or not is_automorphism(g, perm):
        raise AssertionError(f"sampled graph fails its guarantees: {g}")
    return g


def sample_key(counter: ChordalCounter, key: tuple, rng: RandomStream, check: bool = False) -> LabeledGraph:
    """A uniform graph among those counted by an arbitrary key."""
    return FixedSampler(counter, rng, check).sample(tuple(key)).to_graph()
