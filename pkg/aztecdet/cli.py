import argparse
import itertools
import logging
import sys
from pathlib import Path
from typing import List, Optional, Sequence

from aztecdet.bijection import family_domain
from aztecdet.dataclasses import CheckReport, PathFamilyParams, PathKind
from aztecdet.formulas import formula_table
from aztecdet.kks import NAMED_KKS, kks_matrix, named_kks
from aztecdet.linalg import det_bareiss, det_modular, normalized_cofactors, row_pairing
from aztecdet.logging import logger, timed
from aztecdet.render import render
from aztecdet.tilings import EnumerationLimitError, enumerate_tilings
from aztecdet.utils import _parse_params, _short
from aztecdet.verify import CHECKS, SUITES, VerifySettings, reports_to_json, run_check, run_suite


def _write_text(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")


def _print_reports(reports: Sequence[CheckReport]) -> None:
    for report in reports:
        params = ",".join(f"{k}={v}" for k, v in report.params.items())
        tail = report.reason if report.reason else f"{_short(report.lhs)} {'==' if report.passed else '!='} {_short(report.rhs)}"
        print(f"{report.status:7} {report.id:28} {params:40} {tail}  [{report.millis:.1f} ms]")
    counts = {status: sum(1 for r in reports if r.status == status) for status in ("pass", "fail", "skipped")}
    print(f"{counts['pass']} passed, {counts['fail']} failed, {counts['skipped']} skipped")


def _cmd_check(args: argparse.Namespace) -> int:
    params = _parse_params(args.params)
    if args.target in CHECKS and (params or args.target not in SUITES):
        reports = run_check(args.target, **params)
    else:
        settings = VerifySettings()
        if args.nmax is not None:
            settings = settings.with_nmax(args.nmax)
        if args.cap is not None:
            settings.tiling_cap = settings.theorem_tiling_cap = args.cap
        if args.seed is not None:
            settings.seed = args.seed
        reports = run_suite(args.target, settings)
    _print_reports(reports)
    if args.json is not None:
        _write_text(args.json, reports_to_json(reports) + "\n")
    return 0 if all(report.status != "fail" for report in reports) else 1


def _cmd_table(args: argparse.Namespace) -> int:
    for n, value in formula_table(args.formula, args.nmax, **_parse_params(args.params)):
        print(f"{n:3} {value}")
    return 0


def _cmd_render(args: argparse.Namespace) -> int:
    kind = PathKind.DELANNOY if args.type == 1 else PathKind.HDELANNOY
    domain = family_domain(PathFamilyParams(args.s, args.r, args.n, kind))
    tiling = None
    if args.tiling is not None:
        tiling = next(itertools.islice(enumerate_tilings(domain, args.cap), args.tiling, None), None)
        if tiling is None:
            raise ValueError(f"the domain has fewer than {args.tiling + 1} tilings")
    if args.svg is not None:
        _write_text(args.svg, render(domain, tiling, "svg") + "\n")
        logger.info(f"wrote {args.svg}")
    else:
        print(render(domain, tiling, "ascii"), end="")
    return 0


def _cmd_cofactors(args: argparse.Namespace) -> int:
    A = kks_matrix(named_kks(args.matrix, args.n))
    c = normalized_cofactors(A)
    for j, value in enumerate(c):
        print(f"c[{j}] = {value}")
    print(f"det A_n / det A_(n-1) = {row_pairing(A, c, args.n - 1)}")
    return 0


def _cmd_bench(args: argparse.Namespace) -> int:
    A = kks_matrix(named_kks(args.matrix, args.n))
    with timed(f"{args.det} {args.matrix} n={args.n}") as elapsed:
        value = det_bareiss(A) if args.det == "bareiss" else det_modular(A)
    print(f"{args.det} {args.matrix} n={args.n}: {len(str(abs(int(value))))} digits, {elapsed[0]:.1f} ms")
    return 0


def _parse_args(argv: Optional[List[str]] = None) -> argparse.Namespace:
    parser = argparse.ArgumentParser(prog="aztecdet", description="Exact checks of domino tiling, lattice path and binomial determinant identities.")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for progress, -vv for timings")
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="run a suite ('all', " + ", ".join(SUITES) + ") or a single check id")
    check.add_argument("target")
    check.add_argument("--params", help="comma separated name=value pairs for a single check")
    check.add_argument("--nmax", type=int, help="size limit for every suite")
    check.add_argument("--cap", type=int, help="cell cap of the tiling enumeration")
    check.add_argument("--seed", type=int, help="seed of the random series instances")
    check.add_argument("--json", type=Path, help="write the reports to this file")
    check.set_defaults(func=_cmd_check)

    table = sub.add_parser("table", help="exact values of a catalog formula")
    table.add_argument("formula")
    table.add_argument("--nmax", type=int, default=8)
    table.add_argument("--params", help="formula parameters, e.g. s=2,r=1")
    table.set_defaults(func=_cmd_table)

    draw = sub.add_parser("render", help="draw an Aztec-type domain of an arithmetic partition")
    draw.add_argument("--type", type=int, choices=(1, 2), default=1)
    draw.add_argument("--s", type=int, required=True)
    draw.add_argument("--r", type=int, required=True)
    draw.add_argument("--n", type=int, required=True)
    draw.add_argument("--tiling", type=int, help="index of the tiling to draw, in enumeration order")
    draw.add_argument("--cap", type=int)
    draw.add_argument("--svg", type=Path, help="write SVG here instead of printing ASCII")
    draw.set_defaults(func=_cmd_render)

    cofactors = sub.add_parser("cofactors", help="normalized cofactors of a named KKS matrix")
    cofactors.add_argument("--matrix", choices=sorted(NAMED_KKS), default="WH31")
    cofactors.add_argument("--n", type=int, required=True)
    cofactors.set_defaults(func=_cmd_cofactors)

    bench = sub.add_parser("bench", help="time an exact determinant")
    bench.add_argument("--det", choices=("bareiss", "modular"), default="modular")
    bench.add_argument("--matrix", choices=sorted(NAMED_KKS), default="WD33")
    bench.add_argument("--n", type=int, default=40)
    bench.set_defaults(func=_cmd_bench)
    return parser.parse_args(argv)


def main(argv: Optional[List[str]] = None) -> int:
    args = _parse_args(argv)
    level = logging.WARNING if args.verbose == 0 else logging.INFO if args.verbose == 1 else logging.DEBUG
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (KeyError, ValueError, TypeError, EnumerationLimitError) as exc:
        message = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"aztecdet: error: {message}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
