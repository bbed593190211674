"""Command-line interface.

Subcommands: ``algebras``, ``check``, ``shapovalov``, ``scan``,
``validate``, ``figure``.  All numeric output is exact (p/q, never
decimals).  Exit codes: 0 success, 2 usage error, 3 input-validation
error, 4 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import linalg
from .criterion import (
    criterion_reducible,
    cross_validate,
    default_scan_height,
    report_json_bytes,
    scan_reducible,
)
from .current import TruncatedAlgebra
from .errors import InvalidAlgebraError, TclaError
from .figures import render_csv, render_svg, sl3_hyperplanes, virasoro_lines
from .lie_core import BUILTIN_ALGEBRAS, Algebra, Root, algebra
from .rationals import format_rational, parse_rational
from .shapovalov import matrix_to_json, shapovalov_matrix
from .verma import VermaModule
from .weights import WeightFunctional


class InputError(TclaError):
    """Bad user input (file contents, flag values)."""


def _load_weight(path: str, base: Algebra, nilp: int) -> WeightFunctional:
    try:
        with open(path, encoding="utf-8") as handle:
            doc = json.load(handle)
    except OSError as exc:
        raise InputError(f"cannot read weight file {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"weight file {path} is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict) or "levels" not in doc:
        raise InputError(f'weight file {path} must be an object with a "levels" list')
    levels = doc["levels"]
    if not isinstance(levels, list) or not all(isinstance(l, dict) for l in levels):
        raise InputError(f'"levels" in {path} must be a list of objects')
    if len(levels) != nilp + 1:
        raise InputError(
            f"weight file {path} has {len(levels)} levels but nilp={nilp} needs {nilp + 1}"
        )
    parsed = []
    for i, level in enumerate(levels):
        row = {}
        for name, value in level.items():
            if name not in base.cartan_names:
                raise InputError(
                    f"level {i}: unknown Cartan name {name!r}; "
                    f"expected among {list(base.cartan_names)}"
                )
            try:
                row[name] = parse_rational(value) if isinstance(value, str) else parse_rational(str(value))
            except ValueError as exc:
                raise InputError(f"level {i}, {name}: {exc}") from exc
        parsed.append(row)
    return WeightFunctional.from_named(base, nilp, parsed)


def _parse_chi(text: str, base: Algebra) -> Root:
    parts = [p.strip() for p in text.split(",")]
    try:
        coords = tuple(int(p) for p in parts)
    except ValueError as exc:
        raise InputError(f"chi must be comma-separated integers, got {text!r}") from exc
    if len(coords) != base.simple_generator_count:
        raise InputError(
            f"chi has {len(coords)} coordinates but {base.name} has "
            f"{base.simple_generator_count} simple generator(s)"
        )
    if any(c < 0 for c in coords):
        raise InputError(f"chi coordinates must be nonnegative, got {text!r}")
    return Root(coords)


def _get_algebra(name: str) -> Algebra:
    try:
        return algebra(name)
    except TclaError as exc:
        raise InputError(str(exc)) from exc


def _check_nilp(nilp: int) -> int:
    if nilp < 1:
        raise InputError("nilp must be >= 1 (order 0 is the untruncated base algebra)")
    return nilp


def _witness_label(base: Algebra, root: Root) -> str:
    if base.simple_generator_count == 1:
        return f"m={root.coords[0]}"
    terms = []
    for i, c in enumerate(root.coords):
        if c == 1:
            terms.append(f"alpha{i + 1}")
        elif c:
            terms.append(f"{c}*alpha{i + 1}")
    return "+".join(terms)


def _emit(text: str, out: str) -> None:
    if out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)


# -- subcommands ----------------------------------------------------------------


def _cmd_algebras(_args: argparse.Namespace) -> int:
    for name in BUILTIN_ALGEBRAS:
        base = algebra(name)
        roots = "finite" if base.finite_roots else "infinite"
        print(
            f"{name}: rank={base.cartan_rank} cartan=[{', '.join(base.cartan_names)}] "
            f"simple_generators={base.simple_generator_count} roots={roots}"
        )
    return 0


def _cmd_check(args: argparse.Namespace) -> int:
    base = _get_algebra(args.algebra)
    alg = TruncatedAlgebra(base, _check_nilp(args.nilp))
    weight = _load_weight(args.lambda_file, base, alg.nilp)
    height = args.max_height if args.max_height is not None else default_scan_height(base)
    verdict = criterion_reducible(weight, alg, height)
    if verdict.reducible:
        labels = ", ".join(_witness_label(base, w) for w in verdict.witnesses)
        noun = "witness" if len(verdict.witnesses) == 1 else "witnesses"
        suffix = ""
        if verdict.scanned_height is not None:
            suffix = f" (witnesses listed up to height {verdict.scanned_height})"
        print(f"REDUCIBLE, {noun} {labels}{suffix}")
    else:
        print("IRREDUCIBLE")
    return 0


def _cmd_shapovalov(args: argparse.Namespace) -> int:
    base = _get_algebra(args.algebra)
    alg = TruncatedAlgebra(base, _check_nilp(args.nilp))
    weight = _load_weight(args.lambda_file, base, alg.nilp)
    chi = _parse_chi(args.chi, base)
    module = VermaModule(alg, weight)
    matrix = shapovalov_matrix(module, chi)
    det = linalg.determinant(matrix.entries)
    print(f"chi={chi} size={matrix.size}")
    for row in matrix.entries:
        print("[" + ", ".join(format_rational(x) for x in row) + "]")
    print(f"det = {format_rational(det)}")
    if args.json:
        doc = json.dumps(matrix_to_json(matrix, det), indent=2) + "\n"
        _emit(doc, args.json)
    return 0


def _cmd_scan(args: argparse.Namespace) -> int:
    base = _get_algebra(args.algebra)
    alg = TruncatedAlgebra(base, _check_nilp(args.nilp))
    weight = _load_weight(args.lambda_file, base, alg.nilp)
    report = scan_reducible(weight, alg, args.max_height)
    for rec in report.records:
        print(f"chi={rec.chi} dim={rec.dimension} det={format_rational(rec.det)}")
    if report.zero_found:
        print("zero determinant at: " + ", ".join(str(c) for c in report.zero_chis))
    else:
        print(f"no zero determinant up to height {report.max_height}")
    if args.json:
        doc = json.dumps(
            {
                "max_height": report.max_height,
                "records": [
                    {
                        "chi": list(r.chi.coords),
                        "dimension": r.dimension,
                        "det": format_rational(r.det),
                    }
                    for r in report.records
                ],
                "zero_found": report.zero_found,
                "zero_chis": [list(c.coords) for c in report.zero_chis],
            },
            indent=2,
        ) + "\n"
        _emit(doc, args.json)
    return 0


def _cmd_validate(args: argparse.Namespace) -> int:
    base = _get_algebra(args.algebra)
    _check_nilp(args.nilp)
    if args.samples < 1:
        raise InputError("samples must be >= 1")
    height = args.max_height if args.max_height is not None else default_scan_height(base)
    report = cross_validate(base, args.nilp, args.samples, args.seed, height)
    print(report.to_text())
    if args.json:
        _emit(report_json_bytes(report).decode("utf-8") + "\n", args.json)
    return 0


def _cmd_figure(args: argparse.Namespace) -> int:
    if args.which == "sl3":
        ls = sl3_hyperplanes()
    else:
        ls = virasoro_lines(args.m_max)
    text = render_csv(ls) if args.format == "csv" else render_svg(ls)
    _emit(text, args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tcla",
        description="Exact Verma-module computations over truncated current Lie algebras",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("algebras", help="list built-in algebras").set_defaults(func=_cmd_algebras)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--algebra", required=True, help="algebra name (see `tcla algebras`)")
        p.add_argument("--nilp", required=True, type=int, help="nilpotency order N >= 1")
        p.add_argument(
            "--lambda", dest="lambda_file", required=True, metavar="FILE",
            help='weight JSON: {"levels": [{<cartan_name>: "p/q", ...}, ...]}',
        )

    p_check = sub.add_parser("check", help="run the reducibility criterion")
    common(p_check)
    p_check.add_argument("--max-height", type=int, default=None)
    p_check.set_defaults(func=_cmd_check)

    p_shap = sub.add_parser("shapovalov", help="print one Shapovalov matrix and determinant")
    common(p_shap)
    p_shap.add_argument("--chi", required=True, help="weight drop, e.g. 1,1")
    p_shap.add_argument("--json", metavar="PATH", default=None, help="also write JSON ('-' = stdout)")
    p_shap.set_defaults(func=_cmd_shapovalov)

    p_scan = sub.add_parser("scan", help="scan determinants over all weight drops up to a height")
    common(p_scan)
    p_scan.add_argument("--max-height", type=int, required=True)
    p_scan.add_argument("--json", metavar="PATH", default=None)
    p_scan.set_defaults(func=_cmd_scan)

    p_val = sub.add_parser("validate", help="cross-validate criterion vs determinant scan")
    p_val.add_argument("--algebra", required=True)
    p_val.add_argument("--nilp", required=True, type=int)
    p_val.add_argument("--samples", required=True, type=int)
    p_val.add_argument("--seed", required=True, type=int)
    p_val.add_argument("--max-height", type=int, default=None)
    p_val.add_argument("--json", metavar="PATH", default=None)
    p_val.set_defaults(func=_cmd_validate)

    p_fig = sub.add_parser("figure", help="emit a reducibility-locus arrangement")
    p_fig.add_argument("--which", required=True, choices=("sl3", "virasoro"))
    p_fig.add_argument("--m-max", type=int, default=4)
    p_fig.add_argument("--format", required=True, choices=("csv", "svg"))
    p_fig.add_argument("--out", required=True, help="output path, '-' for stdout")
    p_fig.set_defaults(func=_cmd_figure)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InvalidAlgebraError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 4
    except TclaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


def entry() -> None:
    sys.exit(main())
