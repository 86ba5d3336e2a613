"""Command line: count, sample, verify, bounds."""

from __future__ import annotations

import argparse
import math
import os
import sys
import time
from collections import Counter
from fractions import Fraction
from typing import Sequence

from .counting import CacheMismatch, ChordalCounter, DomainError, counter_for
from .exactmath import RandomStream
from .formats import write_graph
from .graph import GraphError, LabeledGraph, Permutation
from .sampling import sample_fixed
from .unlabeled import DP_LIMIT, BoundViolation, UnlabeledSampler, build_bounds, check_small_mu_ratio, \
    moved_counts

EXIT_VERIFY = 1
EXIT_DOMAIN = 2
EXIT_CACHE = 3
EXIT_BOUND = 4


def format_ratio(num: int, den: int, digits: int = 6) -> str:
    """num/den rounded to ``digits`` significant decimals, without floats."""
    if num == 0:
        return "0"
    q = Fraction(num, den)
    e = math.floor((num.bit_length() - den.bit_length()) * math.log10(2)) - digits + 1
    while True:
        scaled = q / Fraction(10) ** e
        if scaled >= 10 ** digits:
            e += 1
        elif scaled < 10 ** (digits - 1):
            e -= 1
        else:
            break
    mant = round(scaled)
    if mant == 10 ** digits:
        mant //= 10
        e += 1
    s = str(mant)
    exp = e + digits - 1
    return f"{s[0]}.{s[1:]}e{exp:+d}"


def _show_int(v: int) -> str:
    return str(v) if v.bit_length() <= 128 else f"<{v.bit_length()} bits>"


def _perm(args) -> Permutation:
    if not args.perm:
        return Permutation.identity(args.n)
    perm = Permutation.parse(args.perm, args.n)
    if perm.n != args.n:
        raise DomainError(f"permutation acts on {perm.n} points, expected {args.n}")
    return perm


def _cache_path(args) -> str | None:
    return os.environ.get("CHORDALGEN_CACHE") or getattr(args, "cache", None)


def _counter(args, perm: Permutation) -> ChordalCounter:
    counter = counter_for(perm)
    path = _cache_path(args)
    if path and os.path.exists(path):
        counter.load(path)
    return counter


def cmd_count(args) -> int:
    perm = _perm(args)
    counter = _counter(args, perm)
    print(counter.total())
    path = _cache_path(args)
    if path:
        counter.save(path)
    return 0


def cmd_sample(args) -> int:
    rng = RandomStream(args.seed)
    out = open(args.output, "w", encoding="ascii") if args.output else sys.stdout
    try:
        if args.unlabeled:
            if args.perm:
                raise DomainError("--perm applies to labeled sampling only")
            sampler = UnlabeledSampler(args.n, args.mode, args.mu_max)
            for i in range(args.samples):
                s = sampler.sample(rng.derive(i))
                g = s.graph
                if args.canonical:
                    from .oracle import canonical_form, rows_from_mask
                    g = LabeledGraph.from_rows(range(1, args.n + 1), rows_from_mask(args.n, canonical_form(g)))
                write_graph(g, args.format, out)
                mu = "-" if s.mu is None else s.mu
                print(f"mu={mu} iters={s.iterations} mode={s.mode}", file=sys.stderr)
        else:
            perm = _perm(args)
            counter = _counter(args, perm)
            for i in range(args.samples):
                g = sample_fixed(perm, rng.derive(i), counter)
                write_graph(g, args.format, out)
            if _cache_path(args):
                counter.save(_cache_path(args))
    finally:
        if out is not sys.stdout:
            out.close()
    return 0


def cmd_bounds(args) -> int:
    n = args.n
    status = 0
    if n <= DP_LIMIT or args.mode != "paper":
        table = build_bounds(n, args.mode, args.mu_max)
        total = table.total
        print(f"# n={n} mode={table.mode} B={_show_int(total)}")
        for mu in moved_counts(n):
            b = table.B[mu]
            print(f"{mu} {_show_int(b)} {format_ratio(b, total)}")
        if table.bias is not None:
            print(f"# truncation above mu={table.mu_max}: bias bound {format_ratio(table.bias.numerator, table.bias.denominator)}")
        for note in table.notes:
            print(f"# {note}")
    else:
        print(f"# n={n} mode=paper: table omitted (labeled count not computed beyond n={DP_LIMIT})")
    if args.check_ratios:
        rows = check_small_mu_ratio(n)
        if not rows:
            print("# ratio check: no mu in the small window")
        for mu, ok, lhs_bits, rhs_bits in rows:
            print(f"ratio mu={mu} {'OK' if ok else 'FAIL'} lhs_bits={lhs_bits} rhs_bits={rhs_bits}")
            if not ok:
                status = EXIT_VERIFY
    return status


def cmd_verify(args) -> int:
    from scipy.stats import chisquare

    from .counting import domain_keys
    from .graph import cycle_type_representative, cycle_types
    from .oracle import Oracle, burnside_holds, census, oracle_fix

    n = args.n
    slow = args.tier == "slow"
    ok_all = True

    def report(name: str, ok: bool, detail: str) -> None:
        nonlocal ok_all
        ok_all &= ok
        print(f"{name} {'OK' if ok else 'FAIL'} ({detail})")

    t0 = time.time()
    ident = Permutation.identity(n)
    dp, orc = counter_for(ident).total(), oracle_fix(n, ident)
    report("counts", dp == orc, f"{dp}")

    bad = 0
    types = cycle_types(n)
    for ct in types:
        rep = cycle_type_representative(n, ct)
        if counter_for(rep).total() != oracle_fix(n, rep):
            bad += 1
    report("fixed-points", bad == 0, f"{len(types)} cycle types, {bad} mismatches")

    report("burnside", burnside_holds(n), f"{len(census(n).classes)} classes")

    size = min(n, 5 if slow else 3)
    keys = mismatches = 0
    for ct in types:
        if slow or sum(ct) <= 4:
            rep = cycle_type_representative(n, ct)
            counter, oracle = ChordalCounter(rep), Oracle(rep)
            for key in domain_keys(counter, size):
                keys += 1
                mismatches += counter.eval(key) != oracle.count(key)
    report("grid", mismatches == 0, f"{keys} keys up to size {size}, {mismatches} mismatches")

    rng = RandomStream(args.seed)
    total = counter_for(ident).total()
    draws = 50 * total if total <= 2000 else 20000
    seen = Counter(sample_fixed(ident, rng.derive(i)) for i in range(draws))
    obs = list(seen.values()) + [0] * (total - len(seen))
    p = chisquare(obs).pvalue if total > 1 else 1.0
    report("sampler chi2", p > 1e-3, f"{draws} draws, {total} bins, p={p:.4g}")
    print(f"# {time.time() - t0:.1f}s")
    return 0 if ok_all else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="chordalgen", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="count labeled chordal graphs (with --perm: those fixed by a permutation)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--perm", help='image list "2,1,3" or cycles "(1 2)(3 4 5)"')
    p.add_argument("--cache", help="memo file to load and update")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("sample", help="draw uniform chordal graphs")
    p.add_argument("--n", type=int, required=True)
    kind = p.add_mutually_exclusive_group()
    kind.add_argument("--labeled", action="store_true", default=True)
    kind.add_argument("--unlabeled", action="store_true")
    p.add_argument("--perm")
    p.add_argument("--samples", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("graph6", "edges"), default="graph6")
    p.add_argument("--mode", choices=("auto", "brute", "exact", "paper", "empirical"), default="auto")
    p.add_argument("--mu-max", type=int, default=4)
    p.add_argument("--canonical", action="store_true", help="print the canonical representative (n <= 8)")
    p.add_argument("--cache")
    p.add_argument("--output")
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("verify", help="run the oracle suites")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--tier", choices=("fast", "slow"), default="fast")
    p.add_argument("--seed", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bounds", help="print the rejection-sampler bound table")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mode", choices=("paper", "exact", "empirical"), default="paper")
    p.add_argument("--mu-max", type=int, default=4)
    p.add_argument("--check-ratios", action="store_true")
    p.set_defaults(func=cmd_bounds)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.n < 1:
            raise DomainError("n must be positive")
        return args.func(args)
    except CacheMismatch as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CACHE
    except BoundViolation as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except (DomainError, GraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
