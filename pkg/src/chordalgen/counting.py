"""Exact counting of chordal graphs that admit a prescribed automorphism.

The counter functions are organised by *kind*; a key is the tuple

    (kind, t, x, l, k, z, p, mx, ml, mk, mz)

with unused fields zero.  The four masks are subsets of the moved points of
pi, as bitmasks over the sorted moved points.  Every kind is defined by a
recurrence, written as a generator of ``(weight, term)`` pairs: the value of
a key is the sum of its weights, and the sampler replays the same generator
to pick one term with probability weight / value.

Kinds (V, X, L, Z are the vertex layout of the key, sigma = pi^p):

  A     chordal graphs on V with sigma as automorphism
  C     the connected ones
  G     connected, every component of G-X evaporates within t steps
        (exception set X) and has a neighbour in X-Z
  GT    like G, and every component evaporates at exactly t
  GTP   like GT, and no component sees all of X
  G1    exactly one component, which sees all of X and evaporates at t
  GGE2  at least two components, each seeing all of X, evaporating at t
  F     evaporation time t with last layer L, X+L a clique, G-X connected
  FT    like F, every component of G-(X+L) evaporates at t-1, at least one
  FTPZ  like FT, no component of G-(X+L) sees all of X+L, and G-Z
        connected instead of G-X connected
"""

from __future__ import annotations

import itertools
import sys
from typing import Iterator, NamedTuple

from .exactmath import binomial
from .graph import Permutation

KINDS = ("A", "C", "G", "GT", "GTP", "G1", "GGE2", "F", "FT", "FTPZ")
G_FAMILY = frozenset({"G", "GT", "GTP", "G1", "GGE2"})
F_FAMILY = frozenset({"F", "FT", "FTPZ"})


class DomainError(ValueError):
    """A counter key outside the domain of its function."""


class CacheMismatch(ValueError):
    """A memo file that belongs to a different (n, pi)."""


class CounterKey(NamedTuple):
    kind: str
    t: int = 0
    x: int = 0
    l: int = 0
    k: int = 0
    z: int = 0
    p: int = 1
    mx: int = 0
    ml: int = 0
    mk: int = 0
    mz: int = 0


def _popcount(m: int) -> int:
    return bin(m).count("1")


class ChordalCounter:
    """Memo table and recurrences for one fixed permutation pi of [n]."""

    def __init__(self, perm: Permutation):
        self.perm = perm
        self.n = perm.n
        self.moved = perm.moved
        self.bit = {v: i for i, v in enumerate(self.moved)}
        self.order = perm.order
        mset = set(self.moved)
        free = []
        v = 1
        while len(free) < self.n + 16:
            if v not in mset:
                free.append(v)
            v += 1
        self.free = tuple(free)
        self.full = (1 << len(self.moved)) - 1
        # images of moved-point indices under pi^p, p = 1..order
        self._img = {}
        for p in range(1, self.order + 1):
            sp = perm.power(p)
            self._img[p] = tuple(self.bit[sp(v)] for v in self.moved)
        self._sub_cache: dict[tuple[int, int], list[tuple[int, int]]] = {}
        self._orbit_cache: dict[tuple[int, int], list[tuple[int, int, int, int]]] = {}
        self._shift_cache: dict[tuple[int, int, int], int] = {}
        self.memo: dict[tuple, int] = {}
        self._terms_of = {
            "A": self._terms_a, "C": self._terms_c, "G": self._terms_g,
            "GT": self._terms_gt, "GTP": self._terms_gtp, "G1": self._terms_g1,
            "GGE2": self._terms_gge2, "F": self._terms_f, "FT": self._terms_ft,
            "FTPZ": self._terms_ftpz,
        }
        if sys.getrecursionlimit() < 20000:
            sys.setrecursionlimit(20000)

    # ------------------------------------------------------------------
    # moved-set helpers

    def canon(self, p: int) -> int:
        return (p - 1) % self.order + 1

    def mask(self, labels) -> int:
        m = 0
        for v in labels:
            try:
                m |= 1 << self.bit[v]
            except KeyError as exc:
                raise DomainError(f"{v} is not moved by the permutation") from exc
        return m

    def labels(self, mask: int) -> list[int]:
        return [self.moved[i] for i in range(len(self.moved)) if mask >> i & 1]

    def image(self, mask: int, p: int) -> int:
        img = self._img[self.canon(p)]
        out = 0
        i = 0
        while mask:
            if mask & 1:
                out |= 1 << img[i]
            mask >>= 1
            i += 1
        return out

    def is_invariant(self, mask: int, p: int) -> bool:
        return self.image(mask, p) == mask

    def cycles(self, mask: int, p: int) -> list[int]:
        """Orbits of pi^p inside an invariant mask."""
        img = self._img[self.canon(p)]
        out = []
        rest = mask
        while rest:
            i = (rest & -rest).bit_length() - 1
            orbit = 0
            while not orbit >> i & 1:
                if not rest >> i & 1:
                    raise DomainError("mask is not invariant")
                orbit |= 1 << i
                i = img[i]
            out.append(orbit)
            rest &= ~orbit
        return out

    def invariant_subsets(self, mask: int, p: int) -> list[tuple[int, int]]:
        """All pi^p-invariant submasks with their sizes, smallest first."""
        key = (mask, p)
        hit = self._sub_cache.get(key)
        if hit is not None:
            return hit
        subs = [0]
        for cyc in self.cycles(mask, p):
            subs += [s | cyc for s in subs]
        out = sorted(((s, _popcount(s)) for s in subs), key=lambda e: (e[1], e[0]))
        self._sub_cache[key] = out
        return out

    def closure(self, mask: int, p: int, copies: int) -> int:
        """Union of the first ``copies`` shifts of mask under pi^p."""
        key = (mask, p, copies)
        hit = self._shift_cache.get(key)
        if hit is None:
            hit, cur = 0, mask
            for _ in range(copies):
                hit |= cur
                cur = self.image(cur, p)
            self._shift_cache[key] = hit
        return hit

    def period_of(self, i: int, cmask: int, p: int) -> int:
        img = self._img[p]
        j, cur = 1, img[i]
        while not cmask >> cur & 1:
            j += 1
            cur = img[cur]
        return j

    def orbit_families(self, mask: int, p: int, sbit: int) -> list[tuple[int, int, int, int]]:
        """Sets C within mask containing sbit whose elements share a period >= 2.

        Returned as (C, period, closure, |C|)."""
        key = (mask, p, sbit)
        hit = self._orbit_cache.get(key)
        if hit is not None:
            return hit
        out = []
        others = mask & ~sbit
        sub = others
        while True:
            c = sub | sbit
            periods = {self.period_of(i, c, p) for i in range(len(self.moved)) if c >> i & 1}
            if len(periods) == 1:
                pc = periods.pop()
                if pc >= 2:
                    clos = self.closure(c, p, pc)
                    if clos & ~mask == 0:
                        out.append((c, pc, clos, _popcount(c)))
            if sub == 0:
                break
            sub = (sub - 1) & others
        out.sort(key=lambda e: (e[3], e[0]))
        self._orbit_cache[key] = out
        return out

    def _s_in(self, nonmoved_before: int, nonmoved_count: int, mk: int) -> bool:
        """Whether the smallest label of the K part is a moved point."""
        if not mk:
            return False
        if nonmoved_count == 0:
            return True
        low = (mk & -mk).bit_length() - 1
        return self.moved[low] < self.free[nonmoved_before]

    # ------------------------------------------------------------------
    # keys, layouts, validation

    def key(self, kind: str, t: int = 0, x: int = 0, l: int = 0, k: int = 0, z: int = 0,
            p: int = 1, mx=0, ml=0, mk=0, mz=0) -> CounterKey:
        """Build a key; masks may be given as ints or as label collections."""
        masks = [m if isinstance(m, int) else self.mask(m) for m in (mx, ml, mk, mz)]
        return CounterKey(kind, t, x, l, k, z, self.canon(p), *masks)

    def validate(self, key: tuple) -> None:
        kind, t, x, l, k, z, p, mx, ml, mk, mz = key
        if kind not in KINDS:
            raise DomainError(f"unknown kind {kind!r}")
        if min(t, x, l, k, z) < 0:
            raise DomainError("negative size argument")
        if not 1 <= p <= self.order:
            raise DomainError("p is not canonical")
        for m in (mx, ml, mk, mz):
            if m & ~self.full:
                raise DomainError("mask outside the moved points")
            if not self.is_invariant(m, p):
                raise DomainError("mask not invariant under pi^p")
        if mx & ml or mx & mk or ml & mk:
            raise DomainError("masks overlap")
        if mz & ~mx:
            raise DomainError("M_Z must lie inside M_X")
        if _popcount(mx) > x or _popcount(ml) > l or _popcount(mk) > k or _popcount(mz) > z:
            raise DomainError("mask larger than its part")
        if z - _popcount(mz) > x - _popcount(mx):
            raise DomainError("Z does not fit inside X")
        if kind in ("A", "C"):
            if t or x or l or z or mx or ml or mz:
                raise DomainError(f"{kind} takes only k, p and M")
        elif kind in G_FAMILY:
            if l or ml:
                raise DomainError(f"{kind} has no L part")
            if kind in ("G1", "GGE2"):
                if z or mz:
                    raise DomainError(f"{kind} has no Z part")
            elif z >= x:
                raise DomainError(f"{kind} needs z < x")
            if kind != "G1" and x < 1:
                raise DomainError(f"{kind} needs x >= 1")
            if kind != "G" and t < 1:
                raise DomainError(f"{kind} needs t >= 1")
        else:
            if l < 1:
                raise DomainError(f"{kind} needs l >= 1")
            if kind != "FTPZ" and (z or mz):
                raise DomainError(f"{kind} has no Z part")
            if kind == "FTPZ" and z > x:
                raise DomainError("FTPZ needs z <= x")
            if t < (1 if kind == "F" else 2):
                raise DomainError(f"{kind} time out of domain")

    def layout(self, key: tuple) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...], tuple[int, ...]]:
        """(V, X, L, Z) label sets of a key."""
        self.validate(key)
        kind, t, x, l, k, z, p, mx, ml, mk, mz = key
        a = x - _popcount(mx)
        b = l - _popcount(ml)
        c = k - _popcount(mk)
        zb = z - _popcount(mz)
        f = self.free
        xs = list(f[:a]) + self.labels(mx)
        ls = list(f[a:a + b]) + self.labels(ml)
        ks = list(f[a + b:a + b + c]) + self.labels(mk)
        zs = list(f[:zb]) + self.labels(mz)
        srt = lambda s: tuple(sorted(s))
        return srt(xs + ls + ks), srt(xs), srt(ls), srt(zs)

    # ------------------------------------------------------------------
    # evaluation

    def value(self, key: tuple) -> int:
        v = self.memo.get(key)
        if v is None:
            v = 0
            for w, _ in self._terms_of[key[0]](*key[1:]):
                v += w
            self.memo[key] = v
        return v

    def eval(self, key: tuple) -> int:
        """Checked evaluation of an arbitrary in-domain key."""
        key = CounterKey(*key)
        key = key._replace(p=self.canon(key.p))
        self.validate(key)
        if key.kind == "G":
            key = key._replace(t=min(key.t, key.k))
        return self.value(tuple(key))

    def terms(self, key: tuple) -> Iterator[tuple[int, tuple]]:
        return self._terms_of[key[0]](*key[1:])

    def count_a(self, k: int | None = None, p: int = 1, m=None) -> int:
        k = self.n if k is None else k
        m = self.full if m is None else m
        return self.eval(self.key("A", k=k, p=p, mk=m))

    def count_c(self, k: int, p: int = 1, m=0) -> int:
        return self.eval(self.key("C", k=k, p=p, mk=m))

    def total(self) -> int:
        """Number of chordal graphs on [n] with pi as automorphism."""
        return self.count_a(self.n, 1, self.full)

    # ------------------------------------------------------------------
    # recurrences

    def _terms_a(self, t, x, l, k, z, p, mx, ml, m, mz):
        if k == 0:
            yield 1, ("base",)
            return
        value = self.value
        cm = _popcount(m)
        knm = k - cm
        s_in = self._s_in(0, knm, m)
        sbit = m & -m if s_in else 0
        for mp, sz in self.invariant_subsets(m, p):
            if s_in and not mp & sbit:
                continue
            lo = max(1, sz if s_in else sz + 1)
            for kp in range(lo, knm + sz + 1):
                b = binomial(knm, kp - sz) if s_in else binomial(knm - 1, kp - 1 - sz)
                if not b:
                    continue
                w1 = value(("C", 0, 0, 0, kp, 0, p, 0, 0, mp, 0))
                if not w1:
                    continue
                w2 = value(("A", 0, 0, 0, k - kp, 0, p, 0, 0, m ^ mp, 0))
                if w2:
                    yield w1 * w2 * b, ("inv", kp, mp)
        if s_in:
            for c, pc, clos, sz in self.orbit_families(m, p, sbit):
                q = self.canon(p * pc)
                w1 = value(("C", 0, 0, 0, sz, 0, q, 0, 0, c, 0))
                if not w1:
                    continue
                w2 = value(("A", 0, 0, 0, k - pc * sz, 0, p, 0, 0, m ^ clos, 0))
                if w2:
                    yield w1 * w2, ("orb", c, pc, clos)

    def _terms_c(self, t, x, l, k, z, p, mx, ml, m, mz):
        for tt in range(1, k + 1):
            w = self.value(("G1", tt, 0, 0, k, 0, p, 0, 0, m, 0))
            if w:
                yield w, ("t", tt)

    def _terms_g1(self, t, x, l, k, z, p, mx, ml, mk, mz):
        if k == 0 or t == 0 or t > k:
            return
        value = self.value
        knm = k - _popcount(mk)
        for m, sz in self.invariant_subsets(mk, p):
            for ll in range(max(1, sz), knm + sz + 1):
                w = value(("F", t, x, ll, k - ll, 0, p, mx, m, mk ^ m, 0))
                if w:
                    yield w * binomial(knm, ll - sz), ("l", ll, m)

    def _terms_f(self, t, x, l, k, z, p, mx, ml, mk, mz):
        if t == 1:
            if k == 0:
                yield 1, ("base",)
            return
        if k == 0 or t == 0 or k < t - 1:
            return
        value = self.value
        knm = k - _popcount(mk)
        xl = mx | ml
        for m, sz in self.invariant_subsets(mk, p):
            for kp in range(max(1, sz), knm + sz + 1):
                w1 = value(("FT", t, x, l, kp, 0, p, mx, ml, m, 0))
                if not w1:
                    continue
                rest = k - kp
                w2 = value(("G", min(t - 2, rest), x + l, 0, rest, x, p, xl, 0, mk ^ m, mx))
                if w2:
                    yield w1 * w2 * binomial(knm, kp - sz), ("k", kp, m)

    def _terms_g(self, t, x, l, k, z, p, mx, ml, mk, mz):
        if k == 0:
            yield 1, ("base",)
            return
        if t == 0:
            return
        value = self.value
        knm = k - _popcount(mk)
        for m, sz in self.invariant_subsets(mk, p):
            for kp in range(sz, knm + sz + 1):
                w1 = value(("GT", t, x, 0, kp, z, p, mx, 0, m, mz))
                if not w1:
                    continue
                rest = k - kp
                w2 = value(("G", min(t - 1, rest), x, 0, rest, z, p, mx, 0, mk ^ m, mz))
                if w2:
                    yield w1 * w2 * binomial(knm, kp - sz), ("k", kp, m)

    def _terms_gt(self, t, x, l, k, z, p, mx, ml, mk, mz):
        return self._terms_gt_common("GT", x, t, x, k, z, p, mx, mk, mz)

    def _terms_gtp(self, t, x, l, k, z, p, mx, ml, mk, mz):
        return self._terms_gt_common("GTP", x - 1, t, x, k, z, p, mx, mk, mz)

    def _terms_gt_common(self, kind, xmax, t, x, k, z, p, mx, mk, mz):
        if k == 0:
            yield 1, ("base",)
            return
        if t == 0 or t > k:
            return
        value = self.value
        a = x - _popcount(mx)
        zb = z - _popcount(mz)
        knm = k - _popcount(mk)
        s_in = self._s_in(a, knm, mk)
        sbit = mk & -mk if s_in else 0
        for m, sz in self.invariant_subsets(mk, p):
            if s_in and not m & sbit:
                continue
            lo = max(1, sz if s_in else sz + 1)
            for kp in range(lo, knm + sz + 1):
                bk = binomial(knm, kp - sz) if s_in else binomial(knm - 1, kp - 1 - sz)
                if not bk:
                    continue
                rest = value((kind, t, x, 0, k - kp, z, p, mx, 0, mk ^ m, mz))
                if not rest:
                    continue
                for mp, msz in self.invariant_subsets(mx, p):
                    in_z = mp & ~mz == 0
                    for xp in range(max(1, msz), xmax + 1):
                        bx = binomial(a, xp - msz)
                        if in_z:
                            bx -= binomial(zb, xp - msz)
                        if not bx:
                            continue
                        w = value(("G1", t, xp, 0, kp, 0, p, mp, 0, m, 0))
                        if w:
                            yield w * rest * bk * bx, ("inv", kp, m, xp, mp)
        if not s_in:
            return
        for c, pc, clos, sz in self.orbit_families(mk, p, sbit):
            rest = value((kind, t, x, 0, k - pc * sz, z, p, mx, 0, mk ^ clos, mz))
            if not rest:
                continue
            q = self.canon(p * pc)
            for mp, msz in self.invariant_subsets(mx, q):
                in_z = mp & ~mz == 0
                for xp in range(max(1, msz), xmax + 1):
                    bx = binomial(a, xp - msz)
                    if in_z:
                        bx -= binomial(zb, xp - msz)
                    if not bx:
                        continue
                    w = value(("G1", t, xp, 0, sz, 0, q, mp, 0, c, 0))
                    if w:
                        yield w * rest * bx, ("orb", c, pc, clos, xp, mp)

    def _terms_gge2(self, t, x, l, k, z, p, mx, ml, mk, mz):
        if k == 0 or t == 0 or 2 * t > k:
            return
        value = self.value
        a = x - _popcount(mx)
        knm = k - _popcount(mk)
        s_in = self._s_in(a, knm, mk)
        sbit = mk & -mk if s_in else 0
        for m, sz in self.invariant_subsets(mk, p):
            if s_in and not m & sbit:
                continue
            lo = max(1, sz if s_in else sz + 1)
            for kp in range(lo, knm + sz + 1):
                bk = binomial(knm, kp - sz) if s_in else binomial(knm - 1, kp - 1 - sz)
                if not bk:
                    continue
                w1 = value(("G1", t, x, 0, kp, 0, p, mx, 0, m, 0))
                if not w1:
                    continue
                for rest_kind in ("G1", "GGE2"):
                    w2 = value((rest_kind, t, x, 0, k - kp, 0, p, mx, 0, mk ^ m, 0))
                    if w2:
                        yield w1 * w2 * bk, ("inv", kp, m, rest_kind)
        if not s_in:
            return
        for c, pc, clos, sz in self.orbit_families(mk, p, sbit):
            q = self.canon(p * pc)
            w1 = value(("G1", t, x, 0, sz, 0, q, mx, 0, c, 0))
            if not w1:
                continue
            rest = k - pc * sz
            if rest == 0:
                yield w1, ("orb", c, pc, clos, None)
                continue
            for rest_kind in ("G1", "GGE2"):
                w2 = value((rest_kind, t, x, 0, rest, 0, p, mx, 0, mk ^ clos, 0))
                if w2:
                    yield w1 * w2, ("orb", c, pc, clos, rest_kind)

    def _terms_ft(self, t, x, l, k, z, p, mx, ml, mk, mz):
        if k == 0 or t < 2 or k < t - 1:
            return
        value = self.value
        w = value(("FTPZ", t, x, l, k, x, p, mx, ml, mk, mx))
        if w:
            yield w, ("none",)
        knm = k - _popcount(mk)
        xl = mx | ml
        for m, sz in self.invariant_subsets(mk, p):
            for kp in range(max(1, sz), knm + sz + 1):
                bk = binomial(knm, kp - sz)
                w1 = value(("G1", t - 1, x + l, 0, kp, 0, p, xl, 0, m, 0))
                if w1:
                    w2 = value(("FTPZ", t, x, l, k - kp, x, p, mx, ml, mk ^ m, mx))
                    if w2:
                        yield w1 * w2 * bk, ("one", kp, m)
                w1 = value(("GGE2", t - 1, x + l, 0, kp, 0, p, xl, 0, m, 0))
                if w1:
                    w2 = value(("GTP", t - 1, x + l, 0, k - kp, x, p, xl, 0, mk ^ m, mx))
                    if w2:
                        yield w1 * w2 * bk, ("two", kp, m)

    def _terms_ftpz(self, t, x, l, k, z, p, mx, ml, mk, mz):
        if k == 0 or t < 2 or k < t - 1:
            return
        value = self.value
        a = x - _popcount(mx)
        b = l - _popcount(ml)
        zb = z - _popcount(mz)
        knm = k - _popcount(mk)
        xl = x + l
        s_in = self._s_in(a + b, knm, mk)
        sbit = mk & -mk if s_in else 0

        def attachments(q, rest_k, rest_mk, copies):
            """(weight, x', M_X', l', M_L') over the parts of X and L a component sees."""
            for mlp, lsz in self.invariant_subsets(ml, q):
                mlpp = self.closure(mlp, p, copies) if copies > 1 else mlp
                extra = _popcount(mlpp) - lsz
                for lp in range(lsz, l + 1):
                    bl = binomial(b, lp - lsz)
                    if not bl:
                        continue
                    moved_l = lp + extra
                    if moved_l < l:
                        rest = value(("FTPZ", t, x + moved_l, l - moved_l, rest_k, z, p,
                                      mx | mlpp, ml ^ mlpp, rest_mk, mz))
                    else:
                        rest = value(("GTP", t - 1, xl, 0, rest_k, z, p, mx | ml, 0, rest_mk, mz))
                    if not rest:
                        continue
                    for mxp, xsz in self.invariant_subsets(mx, q):
                        in_z = lp == 0 and mxp & ~mz == 0
                        for xp in range(xsz, x + 1):
                            if xp + lp == 0 or xp + lp == xl:
                                continue
                            bx = binomial(a, xp - xsz)
                            if in_z:
                                bx -= binomial(zb, xp - xsz)
                            if bx:
                                yield rest * bl * bx, xp, mxp, lp, mlp

        for m, sz in self.invariant_subsets(mk, p):
            if s_in and not m & sbit:
                continue
            lo = max(1, sz if s_in else sz + 1)
            for kp in range(lo, knm + sz + 1):
                bk = binomial(knm, kp - sz) if s_in else binomial(knm - 1, kp - 1 - sz)
                if not bk:
                    continue
                for w0, xp, mxp, lp, mlp in attachments(p, k - kp, mk ^ m, 1):
                    w = value(("G1", t - 1, xp + lp, 0, kp, 0, p, mxp | mlp, 0, m, 0))
                    if w:
                        yield w * w0 * bk, ("inv", kp, m, xp, mxp, lp, mlp)
        if not s_in:
            return
        for c, pc, clos, sz in self.orbit_families(mk, p, sbit):
            q = self.canon(p * pc)
            for w0, xp, mxp, lp, mlp in attachments(q, k - pc * sz, mk ^ clos, pc):
                w = value(("G1", t - 1, xp + lp, 0, sz, 0, q, mxp | mlp, 0, c, 0))
                if w:
                    yield w * w0, ("orb", c, pc, clos, xp, mxp, lp, mlp)

    # ------------------------------------------------------------------
    # persistence

    def header(self) -> str:
        return f"CHORDAL-MEMO 1 n={self.n} perm={self.perm.image_string()}"

    def save(self, path) -> None:
        with open(path, "w", encoding="ascii") as fh:
            fh.write(self.header() + "\n")
            for key in sorted(self.memo, key=lambda k: (KINDS.index(k[0]),) + k[1:]):
                fields = " ".join(str(v) for v in key)
                fh.write(f"{fields} {self.memo[key]:x}\n")

    def load(self, path) -> int:
        """Merge a memo file into this table; returns the number of entries read."""
        with open(path, encoding="ascii") as fh:
            head = fh.readline().strip()
            if head != self.header():
                raise CacheMismatch(f"cache header {head!r} does not match {self.header()!r}")
            count = 0
            for line in fh:
                parts = line.split()
                if not parts:
                    continue
                if len(parts) != 12 or parts[0] not in KINDS:
                    raise CacheMismatch(f"malformed cache line: {line.strip()!r}")
                key = (parts[0], *map(int, parts[1:11]))
                self.memo[key] = int(parts[11], 16)
                count += 1
        return count


_COUNTERS: dict[Permutation, ChordalCounter] = {}


def counter_for(perm: Permutation) -> ChordalCounter:
    """A process-wide shared counter per permutation."""
    c = _COUNTERS.get(perm)
    if c is None:
        c = _COUNTERS[perm] = ChordalCounter(perm)
    return c


def count_labeled(n: int) -> int:
    """Number of labeled chordal graphs on [n]."""
    return counter_for(Permutation.identity(n)).total()


def count_fixed(perm: Permutation) -> int:
    """Number of chordal graphs on [n] that have perm as an automorphism."""
    return counter_for(perm).total()


def domain_keys(counter: ChordalCounter, max_size: int) -> Iterator[CounterKey]:
    """Every in-domain key with x + l + k <= max_size (t up to max_size + 1)."""
    for p in range(1, counter.order + 1):
        subs = [m for m, _ in counter.invariant_subsets(counter.full, p)]

        def disjoint(*masks):
            acc = 0
            for m in masks:
                if acc & m:
                    return False
                acc |= m
            return True

        for k in range(max_size + 1):
            for mk in subs:
                if _popcount(mk) <= k:
                    yield CounterKey("A", k=k, p=p, mk=mk)
                    if k >= 1:
                        yield CounterKey("C", k=k, p=p, mk=mk)
        for kind in ("G", "GT", "GTP", "G1", "GGE2", "F", "FT", "FTPZ"):
            f_kind = kind in F_FAMILY
            has_z = kind in ("G", "GT", "GTP", "FTPZ")
            for x in range(max_size + 1):
                for l in (range(1, max_size + 1 - x) if f_kind else (0,)):
                    for k in range(max_size + 1 - x - l):
                        for mx, ml, mk in itertools.product(subs, subs if f_kind else (0,), subs):
                            if not disjoint(mx, ml, mk):
                                continue
                            for z in (range(x + 1) if has_z else (0,)):
                                for mz in (subs if has_z else (0,)):
                                    for t in range(max_size + 2):
                                        key = CounterKey(kind, t, x, l, k, z, p, mx, ml, mk, mz)
                                        try:
                                            counter.validate(key)
                                        except DomainError:
                                            continue
                                        yield key
