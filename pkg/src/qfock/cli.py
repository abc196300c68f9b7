"""Command line front end.

Subcommands: bkl (canonical/dual canonical expansions), qsym (canonical
basis of the symmetrized image in a choice of coordinates), char
(character and multiplicity tables), verify (identity sweeps), quiver
(the gl(1|n) presentation).  Exit codes: 0 on success, 2 on any
verification failure or bad input, 3 when a computation needs letters
outside the requested window.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys

from .canonical import canonical, dual_canonical
from .qsym import ReexpressionFailure, base_change, qsym_canonical
from .reports import (
    VERIFY_SUITES,
    character_table,
    parse_weight,
    quiver_presentation,
    run_verify,
    whittaker_decomposition,
)
from .weightlat import Parabolic, Shape, SignedTuple, Window, WindowEscape


def parse_shape(text: str) -> Shape:
    m = re.fullmatch(r"(\d+)\|(\d+)", text.strip())
    if not m:
        raise ValueError(f"shape must look like m|n, got {text!r}")
    return Shape(int(m.group(1)), int(m.group(2)))


def parse_window(text: str) -> Window:
    m = re.fullmatch(r"(-?\d+)\.\.(-?\d+)", text.strip())
    if not m:
        raise ValueError(f"window must look like lo..hi, got {text!r}")
    return Window(int(m.group(1)), int(m.group(2)))


def parse_parabolic(text: str, shape: Shape) -> Parabolic:
    text = text.strip()
    if text in ("", "e", "trivial"):
        return Parabolic.trivial(shape)
    if text == "full":
        return Parabolic.full(shape)
    gens = set()
    for tok in text.split(","):
        tok = tok.strip()
        if tok.startswith("s"):
            tok = tok[1:]
        if not tok.isdigit():
            raise ValueError(f"bad parabolic generator {tok!r}")
        gens.add(int(tok))
    return Parabolic(shape, frozenset(gens))


def _print_expansion(header: str, rows, label: str) -> None:
    print(header)
    for g, c in rows:
        print(f"  {c} * {label}[{g}]")


def _rows_csv(rows) -> str:
    out = io.StringIO()
    wr = csv.writer(out)
    wr.writerow(["tuple", "coefficient"])
    for g, c in rows:
        wr.writerow([str(g), str(c)])
    return out.getvalue()


def cmd_bkl(args) -> int:
    shape = parse_shape(args.shape)
    f = SignedTuple.parse(args.tuple, shape)
    w = parse_window(args.window)
    exp = canonical(f, w) if args.mode == "canonical" else dual_canonical(f, w)
    rows = sorted(exp.coefficients.items(), key=lambda t: t[0].entries)
    if args.json:
        print(json.dumps(exp.to_json(), indent=2))
    elif args.csv:
        print(_rows_csv(rows), end="")
    else:
        _print_expansion(
            f"{args.mode} basis element for f = {f}, shape {shape}, window {w}",
            rows,
            "M",
        )
    return 0


def cmd_qsym(args) -> int:
    shape = parse_shape(args.shape)
    f = SignedTuple.parse(args.tuple, shape)
    w = parse_window(args.window)
    par = parse_parabolic(args.parabolic, shape)
    exp = qsym_canonical(f, par, w)
    vec = exp.vector()
    if args.basis != vec.basis:
        vec = base_change(vec, args.basis)
    rows = sorted(vec.terms.items(), key=lambda t: t[0].entries)
    if args.json:
        data = dict(vec.to_json())
        data["target"] = str(f)
        data["mode"] = "canonical"
        data["window"] = str(w)
        print(json.dumps(data, indent=2))
    elif args.csv:
        print(_rows_csv(rows), end="")
    else:
        _print_expansion(
            f"canonical image element for f = {f}, parabolic {par}, "
            f"window {w}, {args.basis} coordinates",
            rows,
            args.basis,
        )
    return 0


_COLUMN_LABEL = {
    "simple-in-Verma": "M",
    "tilting-in-Verma": "M",
    "Verma-in-simple": "L",
    "standard-Whittaker": "pstd",
    "tilting-Delta": "Delta",
}


def cmd_char(args) -> int:
    m = re.fullmatch(r"gl\((\d+)\|(\d+)\)", args.algebra.strip())
    if not m:
        raise ValueError(f"algebra must look like gl(m|n), got {args.algebra!r}")
    shape = Shape(int(m.group(1)), int(m.group(2)))
    wshape, lam = parse_weight(args.weight)
    if wshape != shape:
        raise ValueError(f"weight {args.weight!r} does not match {args.algebra}")
    w = parse_window(args.window)
    if args.kind == "whittaker":
        par = parse_parabolic(args.parabolic, shape)
        tab = whittaker_decomposition(shape, lam, par, w)
    else:
        tab = character_table(shape, lam, w, args.kind)
    if args.json:
        print(json.dumps(tab.to_json(), indent=2))
    elif args.csv:
        print(tab.to_csv(), end="")
    else:
        label = _COLUMN_LABEL[tab.tag]
        print(f"{tab.tag} table, shape {shape}, window {w}")
        for row in tab.rows:
            terms = sorted(row.entries.items(), key=lambda t: t[0].entries)
            body = ", ".join(f"{c}*{label}[{g}]" for g, c in terms)
            print(f"  {row.name} = {body}")
    return 0


def cmd_verify(args) -> int:
    w = parse_window(args.window)
    ok, msgs = run_verify(args.suite, args.max_size, w)
    for line in msgs:
        print(line)
    print(f"suite {args.suite}: {'PASS' if ok else 'FAIL'}")
    return 0 if ok else 2


def cmd_quiver(args) -> int:
    print(quiver_presentation(args.n).display(), end="")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qfock",
        description="canonical bases of the q-Fock space and their character tables",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bkl", help="canonical or dual canonical expansion of a tuple")
    p.add_argument("--shape", required=True, help="m|n")
    p.add_argument("--tuple", required=True, help='signed tuple, e.g. "1,2|5"')
    p.add_argument("--window", required=True, help="lo..hi")
    p.add_argument("--mode", choices=("canonical", "dual"), default="canonical")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_bkl)

    p = sub.add_parser("qsym", help="canonical basis element of the symmetrized image")
    p.add_argument("--shape", required=True, help="m|n")
    p.add_argument("--parabolic", required=True, help='"s1,s3", "full" or "e"')
    p.add_argument("--tuple", required=True, help="anti-dominant signed tuple")
    p.add_argument("--window", required=True, help="lo..hi")
    p.add_argument("--basis", choices=("N", "Ntilde", "Mtilde"), default="N")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_qsym)

    p = sub.add_parser("char", help="character and multiplicity tables")
    p.add_argument("--algebra", required=True, help="gl(m|n)")
    p.add_argument("--weight", required=True, help='integral weight, e.g. "2|-2"')
    p.add_argument("--window", required=True, help="lo..hi")
    p.add_argument("--kind", choices=("simple", "tilting", "whittaker"), required=True)
    p.add_argument(
        "--parabolic",
        default="full",
        help="parabolic for --kind whittaker (default: full)",
    )
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_char)

    p = sub.add_parser("verify", help="re-run an identity sweep")
    p.add_argument("--suite", choices=sorted(VERIFY_SUITES), required=True)
    p.add_argument("--max-size", type=int, default=4)
    p.add_argument("--window", default="0..4", help="lo..hi")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("quiver", help="gl(1|n) quiver presentation")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_quiver)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except WindowEscape as exc:
        print(f"window escape: {exc}", file=sys.stderr)
        return 3
    except AssertionError as exc:
        print(f"identity verification failed: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ArithmeticError, ReexpressionFailure) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
