"""Command-line front end.

Exit status: 0 on success, 1 when a verification fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from . import errors
from .compositions import compositions_of, parse_composition
from .errors import LextabError
from .hopf import (
    FormalSeries,
    antipode_lexical_two_row,
    antipode_lexical_two_row_generic,
    basis_tag,
    convert,
    multiply_nsym,
    parse_term,
    transition_matrix,
)
from .identities import IDENTITIES, clamp_max_n, verify
from .tableaux import count_K, enumerate_tableaux

_LARGE_DEGREE = 12


class UsageError(Exception):
    pass


def _composition(text: str):
    try:
        return parse_composition(text)
    except LextabError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _contents(args) -> list:
    shape = args.shape
    if args.standard:
        if args.content is not None:
            raise UsageError("--standard and --content are mutually exclusive")
        return [(1,) * shape.n]
    if args.content is not None:
        return [tuple(args.content)]
    return [tuple(b) for b in compositions_of(shape.n)]


def cmd_enumerate(args, out) -> int:
    tableaux = [t for b in _contents(args) for t in enumerate_tableaux(args.kind, args.shape, b)]
    if args.format == "json":
        json.dump([t.to_dict() for t in tableaux], out)
        out.write("\n")
    else:
        for t in tableaux:
            out.write(t.render() + "\n\n")
        out.write(f"{len(tableaux)} tableaux\n")
    return 0


def cmd_count(args, out) -> int:
    rows = [(b, count_K(args.kind, args.shape, b)) for b in _contents(args)]
    if args.format == "json":
        json.dump([{"shape": list(args.shape), "content": list(b), "count": k} for b, k in rows], out)
        out.write("\n")
    else:
        for b, k in rows:
            out.write(f"K[{args.kind}]({args.shape}; {'.'.join(map(str, b))}) = {k}\n")
    return 0


def cmd_matrix(args, out) -> int:
    m = transition_matrix(args.kind, args.n)
    if args.format == "csv":
        out.write(m.to_csv())
    elif args.format == "json":
        json.dump(m.to_dict(), out)
        out.write("\n")
    else:
        out.write(m.render() + "\n")
    return 0


def _emit_series(s: FormalSeries, fmt: str, out) -> None:
    if fmt == "json":
        out.write(s.to_json() + "\n")
    else:
        out.write(str(s) + "\n")


def cmd_expand(args, out) -> int:
    s = FormalSeries.monomial(basis_tag(args.source), args.alpha)
    _emit_series(convert(s, args.to), args.format, out)
    return 0


def cmd_product(args, out) -> int:
    left, right = parse_term(args.left), parse_term(args.right)
    p = multiply_nsym(left, right)
    _emit_series(convert(p, args.to or left.basis), args.format, out)
    return 0


def cmd_antipode(args, out) -> int:
    if args.alpha.length != 2:
        raise UsageError("antipode expects a two-part composition a,b")
    a, b = args.alpha
    fn = antipode_lexical_two_row if args.method == "formula" else antipode_lexical_two_row_generic
    _emit_series(fn(a, b), args.format, out)
    return 0


def _run_identity(name_and_n):
    name, n = name_and_n
    return [r.to_dict() for r in verify(name, n)]


def cmd_verify(args, out) -> int:
    if args.identity == "all":
        jobs = [(name, clamp_max_n(name, args.max_n)) for name in IDENTITIES]
    else:
        jobs = [(args.identity, args.max_n)]
    if args.parallel and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.parallel) as pool:
            results = list(pool.map(_run_identity, jobs))
    else:
        results = [_run_identity(j) for j in jobs]
    reports = [r for group in results for r in group]
    ok = all(r["pass"] for r in reports)
    if args.format == "json":
        json.dump(reports, out)
        out.write("\n")
    else:
        for r in reports:
            bad = [c for c in r["cases"] if not c["ok"]]
            status = "PASS" if r["pass"] else f"FAIL ({len(bad)} of {len(r['cases'])} cases)"
            out.write(f"{r['identity']}: {status} over {r['range']}\n")
            for c in bad[:5]:
                out.write(f"  {json.dumps(c['params'])}: lhs={c['lhs']} rhs={c['rhs']}\n")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lextab", description="Lexical tableaux and the lexical bases of NSym/QSym.")
    p.add_argument("--max-degree", type=int, help="override the degree cap")
    p.add_argument("--allow-large", action="store_true",
                   help=f"acknowledge that --max-degree above {_LARGE_DEGREE} may be very slow")
    p.add_argument("--parallel", type=int, default=0, metavar="N",
                   help="worker processes for 'verify --identity all'")
    sub = p.add_subparsers(dest="command", required=True)

    def fmt(sp, choices=("text", "json")):
        sp.add_argument("--format", choices=choices, default="text")

    for name, fn, helptext in (("enumerate", cmd_enumerate, "list tableaux"),
                               ("count", cmd_count, "count tableaux")):
        sp = sub.add_parser(name, help=helptext)
        sp.add_argument("--kind", choices=("lexical", "immaculate"), required=True)
        sp.add_argument("--shape", type=_composition, required=True)
        sp.add_argument("--content", type=_composition)
        sp.add_argument("--standard", action="store_true")
        fmt(sp)
        sp.set_defaults(func=fn)

    sp = sub.add_parser("matrix", help="transition matrix X_to_Y")
    sp.add_argument("--kind", required=True)
    sp.add_argument("--n", type=int, required=True)
    fmt(sp, ("text", "csv", "json"))
    sp.set_defaults(func=cmd_matrix)

    sp = sub.add_parser("expand", help="expand one basis element in another basis")
    sp.add_argument("--from", dest="source", required=True)
    sp.add_argument("--alpha", type=_composition, required=True)
    sp.add_argument("--to", required=True)
    fmt(sp)
    sp.set_defaults(func=cmd_expand)

    sp = sub.add_parser("product", help="product of two NSym basis elements")
    sp.add_argument("--left", required=True, help="BASIS:COMPOSITION, e.g. L:2.1")
    sp.add_argument("--right", required=True)
    sp.add_argument("--to")
    fmt(sp)
    sp.set_defaults(func=cmd_product)

    sp = sub.add_parser("antipode", help="antipode of a two-row lexical function")
    sp.add_argument("--alpha", type=_composition, required=True)
    sp.add_argument("--method", choices=("formula", "generic"), default="formula")
    fmt(sp)
    sp.set_defaults(func=cmd_antipode)

    sp = sub.add_parser("verify", help="run identity checks")
    sp.add_argument("--identity", choices=(*IDENTITIES, "all"), required=True)
    sp.add_argument("--max-n", type=int, required=True)
    fmt(sp)
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.max_degree is not None:
            if args.max_degree > _LARGE_DEGREE and not args.allow_large:
                raise UsageError(f"--max-degree above {_LARGE_DEGREE} requires --allow-large")
            errors.set_max_degree(args.max_degree)
        if args.parallel < 0:
            raise UsageError("--parallel must be nonnegative")
        return args.func(args, out)
    except (UsageError, LextabError) as exc:
        print(f"lextab: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
