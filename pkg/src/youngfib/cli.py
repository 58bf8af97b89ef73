"""Command line interface: ``youngfib <command> ...``.

Exit codes: 0 success, 1 verification failure or disagreeing methods,
2 usage error (bad arguments, malformed input, bound exceeded).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import kernels
from .chains_growth import (
    ChainError,
    boundary_chains,
    chain_to_tableau,
    evacuate_letter,
    evacuation_steps,
    evacuation_tableau,
    growth_diagram,
    parse_chain,
    tableau_to_chain,
)
from .fibokostka import KostkaMatrix, SizeMismatch, matrix_diff, n_matrix, okada_matrix
from .poset import PosetError, is_graded, is_lattice, to_dot
from .snakeshape import lattice_levels, lattice_to_dot
from .yfinsertion import (
    MAX_CLASS_N,
    PermutationError,
    fibo_class,
    format_permutation,
    insert_pq,
    parse_permutation,
)
from .yfposet import MAX_ORDER_N, BoundError, weak_order_sn, weak_order_yft
from .yftableau import TableauError, enumerate_semistandard, max_cano, min_cano, parse_tableau, require_standard
from .youngside import YoungError, format_young, kostka_matrix, weak_order_syt

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _bound(args) -> int:
    return args.unsafe_bound if args.unsafe_bound is not None else MAX_ORDER_N


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


# ------------------------------------------------------------------ commands


def cmd_insert(args) -> int:
    sigma = parse_permutation(args.sigma)
    p, q = insert_pq(sigma)
    if args.format == "json":
        _emit(json.dumps({"sigma": list(sigma), "p": str(p), "q": str(q), "shape": str(p.shape)}))
    else:
        _emit(f"P     = {p}\nQ     = {q}\nshape = {p.shape}")
    return EXIT_OK


def cmd_growth(args) -> int:
    sigma = parse_permutation(args.sigma)
    d = growth_diagram(sigma)
    p_hat, q_hat = boundary_chains(d)
    if args.format == "json":
        data = json.loads(d.to_json())
        data.update(p_hat=str(p_hat), q_hat=str(q_hat))
        _emit(json.dumps(data))
    else:
        _emit(d.render())
        _emit(f"P^ = {p_hat}  ->  {chain_to_tableau(p_hat)}")
        _emit(f"Q^ = {q_hat}  ->  {chain_to_tableau(q_hat)}")
    return EXIT_OK


def cmd_convert(args) -> int:
    if args.chain is not None:
        c = parse_chain(args.chain)
        t = chain_to_tableau(c)
    else:
        t = parse_tableau(args.tableau)
        require_standard(t)
        c = tableau_to_chain(t)
    if args.format == "json":
        _emit(json.dumps({"chain": str(c), "tableau": str(t)}))
    elif args.format == "dot":
        _emit(c.to_dot())
    else:
        _emit(f"chain   = {c}\ntableau = {t}")
    return EXIT_OK


def cmd_evacuate(args) -> int:
    t = parse_tableau(args.tableau)
    require_standard(t)
    if args.letter is not None:
        if args.letter not in t.tops:
            raise UsageError(f"{args.letter} is not a topmost entry of {t}")
        _emit(str(evacuate_letter(t, args.letter)))
        return EXIT_OK
    steps = evacuation_steps(t)
    ev = evacuation_tableau(t)
    if args.format == "json":
        rows = [{"letter": a, "tableau": str(s), "cell": list(cell)} for a, s, cell in steps]
        _emit(json.dumps({"t": str(t), "steps": rows, "ev": str(ev)}))
    else:
        width = max(len(str(s)) for _, s, _ in steps)
        for a, s, (col, row) in steps:
            _emit(f"{a:>3}  {str(s).ljust(width)}  freed column {col + 1}, {'top' if row else 'bottom'}")
        _emit(f"ev(t) = {ev}")
    return EXIT_OK


def cmd_lattice(args) -> int:
    if args.n > 30:
        raise UsageError("lattice export is limited to n <= 30")
    if args.format == "dot":
        _emit(lattice_to_dot(args.n))
    elif args.format == "json":
        _emit(json.dumps([[str(s) for s in level] for level in lattice_levels(args.n)]))
    else:
        for k, level in enumerate(lattice_levels(args.n)):
            _emit(f"{k}: {' '.join(str(s) for s in level)}")
    return EXIT_OK


def cmd_poset(args) -> int:
    bound = _bound(args)
    if args.kind == "yft":
        p = weak_order_yft(args.n, bound)
        label = str
    elif args.kind == "sn":
        p = weak_order_sn(args.n, bound)
        label = format_permutation
    else:
        p = weak_order_syt(args.n, bound)
        label = format_young
    if args.format == "dot":
        _emit(to_dot(p, name=args.kind.upper(), label=label))
    elif args.format == "json":
        _emit(p.covers_json(key=label))
    else:
        levels = getattr(p, "rank_levels", None)
        _emit(f"elements: {len(p)}")
        _emit(f"graded:   {is_graded(p)}")
        if len(p) <= 200:
            _emit(f"lattice:  {is_lattice(p)}")
        if levels:
            for r, items in levels().items():
                _emit(f"rank {r}: {' | '.join(label(x) for x in items)}")
        else:
            for x in p.elements:
                ups = ", ".join(label(y) for y in p.upper_covers(x))
                _emit(f"{label(x)} < {ups}" if ups else label(x))
    return EXIT_OK


def _nfib_enumerated(n: int) -> KostkaMatrix:
    base = n_matrix(n)
    m = base.entries.copy()
    for i, u in enumerate(base.order):
        for j, v in enumerate(base.order):
            m[i, j] = len(enumerate_semistandard(u, v))
    return KostkaMatrix(base.order, m)


def _matrix(kind: str, n: int, method: str, bound: int) -> KostkaMatrix:
    if kind == "nfib":
        return n_matrix(n) if method == "recurrence" else _nfib_enumerated(n)
    if kind == "okada":
        return okada_matrix(n, method, bound)
    return kostka_matrix(n, "recurrence" if method == "recurrence" else "chain", bound)


def cmd_matrix(args) -> int:
    bound = _bound(args)
    if args.n < 1:
        raise UsageError("n must be positive")
    if args.method != "recurrence" and args.n > bound:
        raise BoundError(f"n = {args.n} exceeds the bound {bound}; pass --unsafe-bound")
    if args.method == "both":
        a = _matrix(args.kind, args.n, "recurrence", bound)
        b = _matrix(args.kind, args.n, "interval", bound)
    else:
        a = b = _matrix(args.kind, args.n, args.method, bound)
    if args.format == "csv":
        _emit(a.to_csv())
    elif args.format == "json":
        _emit(a.to_json())
    else:
        _emit(a.to_text(dot_zero=args.kind != "nfib"))
    if args.method == "both":
        diff = matrix_diff(a, b)
        # keep machine-readable output clean
        out = sys.stdout if args.format == "text" else sys.stderr
        if diff:
            for u, v, x, y in diff:
                print(f"DIFF [{u}, {v}]: recurrence {x}, second method {y}", file=out)
            return EXIT_FAIL
        print("OK methods agree", file=out)
    return EXIT_OK


def cmd_class(args) -> int:
    t = parse_tableau(args.tableau)
    require_standard(t)
    perms = fibo_class(t, args.unsafe_bound or MAX_CLASS_N)
    if args.format == "json":
        _emit(json.dumps({
            "tableau": str(t),
            "min_cano": format_permutation(min_cano(t)),
            "max_cano": format_permutation(max_cano(t)),
            "class": [format_permutation(s) for s in perms],
        }))
    else:
        _emit(f"min_cano = {format_permutation(min_cano(t))}")
        _emit(f"max_cano = {format_permutation(max_cano(t))}")
        _emit(f"size     = {len(perms)}")
        for s in perms:
            _emit(format_permutation(s))
    return EXIT_OK


def cmd_verify(args) -> int:
    from .verify import run_suite

    failed = []

    def report(o) -> None:
        status = "ok  " if o.ok else "FAIL"
        print(f"{status} {o.check.suite}.{o.check.name} (n<={o.n})", flush=True)
        if not o.ok:
            print(f"     first counterexample: {o.failure}", flush=True)
            failed.append(o)

    outcomes = run_suite(args.suite, args.n, report)
    print(f"{len(outcomes) - len(failed)}/{len(outcomes)} checks passed [kernels: {kernels.backend()}]")
    return EXIT_FAIL if failed else EXIT_OK


# -------------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="youngfib",
        description="Young-Fibonacci insertion, growth diagrams, tableau posets and Kostka analogues.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt(p, choices=("text", "json")):
        p.add_argument("--format", choices=choices, default="text")

    def unsafe(p):
        p.add_argument(
            "--unsafe-bound", type=int, metavar="N", default=None,
            help=f"raise the size bound (default {MAX_ORDER_N}) for exhaustive constructions",
        )

    p = sub.add_parser("insert", help="insertion and recording tableaux of a permutation")
    p.add_argument("sigma", help='one-line notation, "2715643" or "10,2,1,..."')
    fmt(p)
    p.set_defaults(func=cmd_insert)

    p = sub.add_parser("growth", help="growth diagram and its boundary chains")
    p.add_argument("sigma")
    fmt(p)
    p.set_defaults(func=cmd_growth)

    p = sub.add_parser("convert", help="saturated chain <-> tableau")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--chain", help='e.g. "e,1,2,12,22"')
    g.add_argument("--tableau", help='e.g. "3:7 4:6 5 1:2"')
    fmt(p, ("text", "json", "dot"))
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("evacuate", help="evacuation steps, or evacuate a single letter")
    p.add_argument("tableau")
    p.add_argument("--letter", type=int, default=None)
    fmt(p)
    p.set_defaults(func=cmd_evacuate)

    p = sub.add_parser("lattice", help="Young-Fibonacci lattice up to rank n")
    p.add_argument("n", type=int)
    fmt(p, ("text", "json", "dot"))
    p.add_argument("--dot", dest="format", action="store_const", const="dot")
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser("poset", help="weak order on YF tableaux, Young tableaux or permutations")
    p.add_argument("kind", choices=("yft", "syt", "sn"))
    p.add_argument("n", type=int)
    fmt(p, ("text", "json", "dot"))
    p.add_argument("--dot", dest="format", action="store_const", const="dot")
    unsafe(p)
    p.set_defaults(func=cmd_poset)

    p = sub.add_parser("matrix", help="N, Okada K or Kostka matrix")
    p.add_argument("kind", choices=("nfib", "okada", "kostka"))
    p.add_argument("n", type=int)
    p.add_argument(
        "--method", choices=("recurrence", "interval", "both"), default="recurrence",
        help="interval: poset interval count (okada, kostka) or direct enumeration (nfib)",
    )
    fmt(p, ("text", "json", "csv"))
    unsafe(p)
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("class", help="permutations with a given insertion tableau")
    p.add_argument("tableau")
    fmt(p)
    unsafe(p)
    p.set_defaults(func=cmd_class)

    p = sub.add_parser("verify", help="run the invariant suites")
    p.add_argument("suite", nargs="?", default="all")
    p.add_argument("n", nargs="?", type=int, default=5)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (
        UsageError, BoundError, PermutationError, TableauError, ChainError,
        SizeMismatch, YoungError, PosetError, ValueError,
    ) as exc:
        print(f"youngfib {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
