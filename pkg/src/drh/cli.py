"""Command-line interface: ``drh eq|canon|graph|factor|oracle|bench``."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import oracle
from .bench import BenchConfig, fitted_slope, run_bench, to_csv
from .canon import canonical_form
from .decider import equal_drh
from .drhgraph import GraphBuilder, to_dot
from .hsolver import varieties
from .kterm import KTerm, KTermSyntaxError, parse_kterm, print_kterm
from .pword import build_overline, factor


class UsageError(Exception):
    pass


def _parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--variety", choices=varieties(), default="g")
    shared.add_argument("--kbar", action="store_true", help="accept any (w+q)-power")

    p = argparse.ArgumentParser(prog="drh", description="Terms over DRH: equality, canonical forms, graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    eq = sub.add_parser("eq", parents=[shared], help="decide u = v over DRH")
    eq.add_argument("u")
    eq.add_argument("v")
    eq.add_argument("--witness", action="store_true", help="print where the two differ")
    eq.add_argument("--mode", choices=("pairs", "states"), default="pairs")

    canon = sub.add_parser("canon", parents=[shared], help="print the canonical form")
    canon.add_argument("term")
    canon.add_argument("--strict-kappa", action="store_true", help="rewrite x^w as x^(w-1) x")

    graph = sub.add_parser("graph", parents=[shared], help="show the DRH-graph of a term")
    graph.add_argument("term")
    graph.add_argument("--dot", action="store_true", help="emit Graphviz text")
    graph.add_argument("--trace", action="store_true", help="dump the factor table")

    fac = sub.add_parser("factor", parents=[shared], help="print the factor w(i,a)")
    fac.add_argument("i", type=int)
    fac.add_argument("a")
    fac.add_argument("term")

    orc = sub.add_parser("oracle", parents=[shared], help="search a finite semigroup for a counterexample")
    orc.add_argument("u")
    orc.add_argument("v")
    orc.add_argument("--semigroup", default=None, help="Cayley file or battery name; default: whole battery")
    orc.add_argument("--budget", type=int, default=100_000)

    bench = sub.add_parser("bench", parents=[shared], help="time decisions on random terms")
    bench.add_argument("--sizes", default="100,200,400,800", help="comma-separated term lengths")
    bench.add_argument("--seed", type=int, required=True)
    bench.add_argument("--repeats", type=int, default=1)
    return p


def _term(text: str, args) -> KTerm:
    return parse_kterm(text, kbar=args.kbar)


def _eq(args, out) -> int:
    u, v = _term(args.u, args), _term(args.v, args)
    verdict = equal_drh(u, v, args.variety, mode=args.mode)
    print("equal" if verdict.equal else "unequal", file=out)
    if args.witness and not verdict.equal:
        print(verdict.witness, file=out)
    return 0 if verdict.equal else 1


def _canon(args, out) -> int:
    w = _term(args.term, args)
    print(print_kterm(canonical_form(w, args.variety, kappa_only=args.strict_kappa)), file=out)
    return 0


def _graph(args, out) -> int:
    w = _term(args.term, args)
    builder = GraphBuilder(w, args.variety)
    A = builder.build()
    if args.dot:
        out.write(to_dot(A))
    else:
        for s in A.states:
            if s == A.terminal:
                print(f"{s}: ε", file=out)
            else:
                print(f"{s}: {A.describe(s)} -0-> {A.t0[s]} -1-> {A.t1[s]}", file=out)
    if args.trace:
        print(f"# overline: {builder.wbar}", file=out)
        for (i, a), f in builder.memo_table():
            print(f"# ({i},{a}) {f}", file=out)
    return 0


def _factor(args, out) -> int:
    w = _term(args.term, args)
    if len(args.a) != 1 or not (args.a == "#" or "a" <= args.a <= "z"):
        raise UsageError(f"bad letter {args.a!r}")
    print(factor(build_overline(w), args.i, args.a), file=out)
    return 0


def _semigroups(choice):
    if choice is None:
        return list(oracle.battery().values())
    bat = oracle.battery()
    if choice in bat:
        return [bat[choice]]
    path = Path(choice)
    if not path.exists():
        raise UsageError(f"no semigroup file or battery member {choice!r}; members: {', '.join(bat)}")
    return [oracle.load_semigroup(path.read_text(), path.stem)]


def _oracle(args, out) -> int:
    u, v = _term(args.u, args), _term(args.v, args)
    explicit = args.semigroup is not None
    for S in _semigroups(args.semigroup):
        if not oracle.is_in_drh(S, args.variety):
            if explicit:
                raise UsageError(f"{S.label} is not in DR{args.variety}")
            continue
        asg = oracle.find_counterexample(S, u, v, args.variety, args.budget)
        if asg is not None:
            shown = ", ".join(f"{a} -> {S.name(x)}" for a, x in asg.items())
            print(f"{S.label}: counterexample {shown}", file=out)
            return 0
        print(f"{S.label}: no counterexample", file=out)
    return 0


def _bench(args, out) -> int:
    try:
        sizes = tuple(int(x) for x in args.sizes.split(",") if x.strip())
    except ValueError:
        raise UsageError(f"bad sizes {args.sizes!r}") from None
    cfg = BenchConfig(sizes=sizes, variety=args.variety, seed=args.seed, repeats=args.repeats)
    rows = run_bench(cfg)
    out.write(to_csv(rows))
    slope = fitted_slope(rows)
    print(f"# slope {'n/a' if slope is None else f'{slope:.3f}'}", file=out)
    return 0


COMMANDS = {
    "eq": _eq,
    "canon": _canon,
    "graph": _graph,
    "factor": _factor,
    "oracle": _oracle,
    "bench": _bench,
}


def run(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 100_000))
    try:
        args = _parser().parse_args(argv)
    except SystemExit as e:
        return 0 if e.code == 0 else 2
    try:
        return COMMANDS[args.command](args, out)
    except (KTermSyntaxError, UsageError, oracle.SemigroupError, ValueError) as e:
        print(f"drh: error: {e}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
