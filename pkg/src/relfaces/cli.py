"""Command line entry point: ``relfaces <subcommand> ...``."""

from __future__ import annotations

import argparse
import json
import sys

from .complex import ComplexError, RelativeComplex, SimplicialComplex, read_complex, relative, write_complex
from .linalg import DEFAULT_PRIME, Q, FieldSpec
from .report import dumps, encode, fmt

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _field(text: str) -> FieldSpec:
    try:
        return FieldSpec.parse(text)
    except (ValueError, ComplexError) as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _load(args) -> tuple[SimplicialComplex, SimplicialComplex | None]:
    cx = read_complex(args.file)
    sub = read_complex(args.sub) if getattr(args, "sub", None) else None
    if sub is not None:
        relative(cx, sub)
    return cx, sub


def _pair(args) -> RelativeComplex:
    cx, sub = _load(args)
    return relative(cx, sub)


def _emit(obj) -> None:
    print(json.dumps(encode(obj), indent=2))


# -- subcommands ----------------------------------------------------------------

def cmd_info(args) -> int:
    from .homology import betti
    from .recognition import classify_homology, is_normal_pseudomanifold

    cx, _ = _load(args)
    print(f"vertices   {len(cx.vertices)} (ground {len(cx.ground_set)})")
    print(f"facets     {len(cx.facet_masks)}")
    print(f"dimension  {cx.dim}")
    print(f"pure       {cx.is_pure}")
    print(f"f-vector   {list(cx.f_vector())}")
    if cx.is_void:
        return EXIT_OK
    st = is_normal_pseudomanifold(cx)
    print(f"pseudomanifold  {st.status}" + (f" ({st.reason})" if st.reason else ""))
    info = classify_homology(cx, args.field)
    print(f"class over {args.field.label}  {info.kind}")
    print(f"betti over {args.field.label}  {list(betti(cx, args.field))}")
    return EXIT_OK


def cmd_fvec(args) -> int:
    psi = _pair(args)
    d = psi.total.dim + 1
    print("f", " ".join(map(str, psi.f_vector(d + 1))))
    print("h", " ".join(map(str, psi.h_vector(d))))
    print("g", " ".join(map(str, psi.g_vector(d))))
    return EXIT_OK


def cmd_homology(args) -> int:
    from .homology import betti

    psi = _pair(args)
    b = betti(psi, args.field, reduced=not args.unreduced)
    for i, v in b.as_dict().items():
        if args.unreduced and i < 0:
            continue
        print(f"{i}\t{v}")
    return EXIT_OK


def cmd_sigma(args) -> int:
    from .sigma_mu import mu, sigma_tilde

    psi = _pair(args)
    top = psi.total.dim
    if args.cmd == "sigma":
        degrees = [args.i] if args.i is not None else list(range(-1, top + 1))
        for i in degrees:
            print(f"{i}\t{fmt(sigma_tilde(psi, i, args.field))}")
    else:
        degrees = [args.i] if args.i is not None else list(range(0, top + 1))
        for i in degrees:
            print(f"{i}\t{fmt(mu(psi, i, args.field))}")
    return EXIT_OK


def cmd_betti(args) -> int:
    from .stanley_reisner import graded_betti, resolution_oracle

    psi = _pair(args)
    if args.oracle:
        table = resolution_oracle(psi, args.field, degree_bound=args.degree_bound)
    else:
        table = graded_betti(psi, args.field)
    if args.format == "json":
        _emit(table.to_dict())
    else:
        sys.stdout.write(table.to_tsv())
    return EXIT_OK


def cmd_wlp(args) -> int:
    from .stanley_reisner import wlp_test

    cx, _ = _load(args)
    res = wlp_test(cx, args.prime, args.trials, args.seed)
    _emit(res.to_dict())
    return EXIT_FAIL if res.status == "fails_sampled" else EXIT_OK


def cmd_reduce(args) -> int:
    from .stanley_reisner import artinian_reduction

    psi = _pair(args)
    d = psi.total.dim + 1
    count = d if args.forms == "d" else d + 1
    red = artinian_reduction(psi, args.prime, count, args.seed)
    _emit(red.to_dict())
    return EXIT_OK


def cmd_check(args) -> int:
    from .checks import run_check

    cx, sub = _load(args)
    options = {}
    if args.wlp_seed is not None:
        options["wlp_seed"] = args.wlp_seed
    if args.trials is not None:
        options["wlp_trials"] = args.trials
    rep = run_check(args.id, cx, sub, args.field, label=args.file, options=options)
    if args.json:
        sys.stdout.write(dumps([rep]))
    else:
        print(rep.summary_line())
        for w in rep.witnesses:
            print(f"  witness {encode(w)}")
    return EXIT_FAIL if rep.holds is False else EXIT_OK


def cmd_gen(args) -> int:
    from .constructions import from_family

    cx = from_family(args.family, args.params, args.seed)
    comment = f"{args.family} {' '.join(map(str, args.params))} seed={args.seed}"
    if args.output == "-":
        from .complex import format_complex

        sys.stdout.write(format_complex(cx, comment))
    else:
        write_complex(cx, args.output, comment)
    return EXIT_OK


def cmd_corpus(args) -> int:
    from .checks import run_corpus

    ids = args.ids.split(",") if args.ids else None
    reports, summary = run_corpus(args.suite, ids, args.field, jobs=args.jobs)
    text = dumps(reports)
    if args.json == "-":
        sys.stdout.write(text)
    else:
        if args.json:
            with open(args.json, "w", encoding="utf-8") as fh:
                fh.write(text)
        for r in reports:
            if r.status == "fail" or args.verbose:
                print(r.summary_line())
    print(f"pass {summary['pass']}  fail {summary['fail']}  skip {summary['skip']}  total {summary['total']}",
          file=sys.stderr)
    return EXIT_FAIL if summary["fail"] else EXIT_OK


# -- parser -----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    from .checks import ALL_CHECK_IDS

    p = _Parser(prog="relfaces", description="Face numbers, homology and lower-bound checks for simplicial complexes.")
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    def with_file(name, help_, relative_=True, field=True):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("file")
        if relative_:
            sp.add_argument("--sub", help="subcomplex file; the pair (FILE, SUB) is used")
        if field:
            sp.add_argument("--field", type=_field, default=Q, help="q, or a prime p (default q)")
        return sp

    sp = with_file("info", "summary of a complex", relative_=False)
    sp.set_defaults(func=cmd_info)
    sp = with_file("fvec", "f-, h- and g-vectors", field=False)
    sp.set_defaults(func=cmd_fvec)
    sp = with_file("homology", "reduced Betti numbers")
    sp.add_argument("--unreduced", action="store_true")
    sp.set_defaults(func=cmd_homology)
    for name in ("sigma", "mu"):
        sp = with_file(name, f"{name} numbers")
        sp.add_argument("-i", type=int, default=None, help="single index")
        sp.set_defaults(func=cmd_sigma)
    sp = with_file("betti", "graded Betti numbers of the face module")
    sp.add_argument("--oracle", action="store_true", help="compute by minimal free resolution instead")
    sp.add_argument("--degree-bound", type=int, default=None)
    sp.add_argument("--format", choices=("tsv", "json"), default="tsv")
    sp.set_defaults(func=cmd_betti)
    sp = with_file("wlp", "sampled weak Lefschetz test", relative_=False, field=False)
    sp.add_argument("--prime", type=int, default=DEFAULT_PRIME)
    sp.add_argument("--trials", type=int, default=3)
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_wlp)
    sp = with_file("reduce", "Artinian reduction dimensions", field=False)
    sp.add_argument("--prime", type=int, default=DEFAULT_PRIME)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--forms", choices=("d", "d+1"), default="d")
    sp.set_defaults(func=cmd_reduce)

    sp = sub.add_parser("check", help="evaluate one check")
    sp.add_argument("id", choices=ALL_CHECK_IDS, metavar="ID")
    sp.add_argument("file")
    sp.add_argument("--sub")
    sp.add_argument("--field", type=_field, default=Q)
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--wlp-seed", type=int, default=None)
    sp.add_argument("--trials", type=int, default=None)
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("gen", help="write a generated complex")
    sp.add_argument("family")
    sp.add_argument("params", nargs="*", type=int)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("-o", "--output", default="-")
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("corpus", help="run checks over a named suite")
    sp.add_argument("suite")
    sp.add_argument("--ids", help="comma separated check ids (default: all)")
    sp.add_argument("--field", type=_field, default=Q)
    sp.add_argument("--json", help="write the JSON report here ('-' for stdout)")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("-v", "--verbose", action="store_true")
    sp.set_defaults(func=cmd_corpus)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (OSError, ComplexError, ValueError) as exc:
        print(f"relfaces: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
