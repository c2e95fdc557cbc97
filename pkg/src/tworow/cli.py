"""Command line front end: construction, straightening, and verification.

Every command takes ``--format text|json``; JSON verification reports
use the schema {command, context: {n, k}, checks: [{name, status,
details, elapsed_ms}], elapsed_ms} and the process exits 0 exactly when
every check passed.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from math import comb

from . import springer, tableaux
from .polynomials import (
    MPoly,
    PolyParseError,
    format_poly,
    parse_poly,
    variable_names,
)
from .springer import ConsistencyError, SpringerContext

CHECK_NAMES = (
    "fixed-points",
    "relations",
    "square-reduction",
    "basis-determinant",
    "straighten",
    "kernel-ideal",
    "ordinary",
    "hook-identity",
)


class UsageError(Exception):
    pass


def _context(n: int, k: int) -> SpringerContext:
    try:
        return SpringerContext(n=n, k=k)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        for line in text_lines:
            print(line)


# -- listing commands --------------------------------------------------------


def _cmd_fixed_points(args) -> int:
    ctx = _context(args.n, args.k)
    points = springer.fixed_points(ctx)
    payload = {
        "command": args.command_echo,
        "context": {"n": ctx.n, "k": ctx.k},
        "fixed_points": [
            {"ell": list(w.ell), "w": list(w.w)} for w in points
        ],
    }
    lines = [f"# fixed points for n={ctx.n}, k={ctx.k}: {len(points)}"]
    for w in points:
        lines.append(f"ell={list(w.ell)} w={list(w.w)}")
    _emit(args, payload, lines)
    return 0


def _cmd_generators(args) -> int:
    ctx = _context(args.n, args.k)
    try:
        ideal = springer.ideal_by_name(ctx, args.ideal)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    names = variable_names(ctx.n, include_t=(ideal.nvars == ctx.n + 1))
    rendered = [format_poly(g, names) for g in ideal.generators]
    payload = {
        "command": args.command_echo,
        "context": {"n": ctx.n, "k": ctx.k},
        "ideal": ideal.name,
        "count": len(ideal.generators),
        "generators": [
            {"label": label, "text": text}
            for label, text in zip(ideal.labels, rendered)
        ],
    }
    lines = [
        f"# ideal {ideal.name} for n={ctx.n}, k={ctx.k}: {len(ideal.generators)} generators"
    ]
    for label, text in zip(ideal.labels, rendered):
        lines.append(f"{label}: {text}")
    _emit(args, payload, lines)
    return 0


def _cmd_tableaux(args) -> int:
    if args.shape:
        try:
            parts = tuple(int(p) for p in args.shape.split(","))
            shape = tableaux.Partition(parts)
        except ValueError as exc:
            raise UsageError(f"bad shape {args.shape!r}: {exc}") from exc
        hooks = [
            [tableaux.hook_length(shape, r, c) for c in range(1, shape.parts[r - 1] + 1)]
            for r in range(1, len(shape.parts) + 1)
        ]
        count = tableaux.hook_count(shape)
        payload = {
            "command": args.command_echo,
            "context": {"n": shape.size, "k": None},
            "shape": list(shape.parts),
            "hook_lengths": hooks,
            "standard_tableau_count": count,
        }
        lines = [f"# shape {list(shape.parts)}: {count} standard tableaux"]
        for row in hooks:
            lines.append("hooks: " + " ".join(map(str, row)))
        _emit(args, payload, lines)
        return 0
    if args.n is None or args.ell is None:
        raise UsageError("provide either --shape or both --n and --ell")
    try:
        found = tableaux.enumerate_standard_tableaux(args.n, args.ell)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    payload = {
        "command": args.command_echo,
        "context": {"n": args.n, "k": None},
        "ell": args.ell,
        "count": len(found),
        "tableaux": [[list(f.top), list(f.bottom)] for f in found],
    }
    lines = [f"# standard tableaux of shape ({args.n - args.ell},{args.ell}): {len(found)}"]
    lines.extend(f.text() for f in found)
    _emit(args, payload, lines)
    return 0


def _format_coefficients(coefficients) -> list[dict]:
    ordered = sorted(coefficients.items(), key=lambda item: (item[0].ell, item[0].bottom))
    return [
        {"tableau": [list(tab.top), list(tab.bottom)], "coefficient": str(value)}
        for tab, value in ordered
    ]


def _cmd_straighten(args) -> int:
    ctx = _context(args.n, args.k)
    names = variable_names(ctx.n)
    try:
        poly = parse_poly(args.poly, names)
    except PolyParseError as exc:
        raise UsageError(f"cannot parse polynomial: {exc}") from exc
    results = {}
    if args.method in ("oracle", "both"):
        results["oracle"] = springer.straighten_by_solve(poly, ctx)
    if args.method in ("paper", "both"):
        results["paper"] = springer.straighten_by_rewrite(poly, ctx)
    agree = None
    if args.method == "both":
        agree = results["oracle"] == results["paper"]
    shown = results.get("oracle", results.get("paper"))
    payload = {
        "command": args.command_echo,
        "context": {"n": ctx.n, "k": ctx.k},
        "polynomial": format_poly(poly, names),
        "method": args.method,
        "coefficients": _format_coefficients(shown),
    }
    if agree is not None:
        payload["agree"] = agree
    lines = [f"# straighten {format_poly(poly, names)}  (n={ctx.n}, k={ctx.k}, method={args.method})"]
    for entry in payload["coefficients"]:
        tab = json.dumps(entry["tableau"], separators=(",", ":"))
        lines.append(f"{tab} : {entry['coefficient']}")
    if not payload["coefficients"]:
        lines.append("0")
    if agree is not None:
        lines.append(f"methods agree: {agree}")
    _emit(args, payload, lines)
    if agree is False:
        return 1
    return 0


# -- the verification driver -------------------------------------------------


def _check_fixed_points(ctx, _args):
    enumerated = springer.fixed_points(ctx)
    brute = springer.fixed_points_bruteforce(ctx)
    expected = comb(ctx.n, ctx.k)
    ok = (
        len(enumerated) == expected
        and sorted(w.w for w in enumerated) == brute
    )
    detail = f"{len(enumerated)} fixed points, brute force {'agrees' if ok else 'differs'}"
    return ok, detail


def _check_relations(ctx, _args):
    report = springer.verify_relations(ctx)
    detail = (
        f"{report.generators_checked} generators vanish at "
        f"{report.fixed_points_checked} fixed points"
    )
    if not report.ok:
        detail = f"failures: {report.failures[:3]}"
    return report.ok, detail


def _check_square_reduction(ctx, _args):
    ok = springer.verify_square_reduction(ctx)
    return ok, f"telescoping identity for i=1..{ctx.n}"


def _check_basis_determinant(ctx, _args):
    bm = springer.basis_image_matrix(ctx)
    ok = bm.core_determinant != 0
    return ok, f"integer core determinant {bm.core_determinant}"


def _check_straighten(ctx, _args):
    monos = springer.squarefree_monomials(ctx, ctx.k + 1)
    monos += springer.sample_monomials(ctx)
    mismatches = 0
    for mono in monos:
        poly = MPoly.from_monomial(mono)
        if springer.straighten_by_solve(poly, ctx) != springer.straighten_by_rewrite(poly, ctx):
            mismatches += 1
    detail = f"{len(monos)} monomials straightened by both routes"
    if mismatches:
        detail = f"{mismatches} of {len(monos)} monomials disagree between routes"
    return mismatches == 0, detail


def _check_kernel_ideal(ctx, args):
    bound = args.degree_max if args.degree_max is not None else springer.default_degree_bound(ctx)
    comparisons = springer.kernel_ideal_comparisons(ctx, bound)
    bad = [c for c in comparisons if not c.equal]
    if bad:
        return False, f"mismatch at degrees {[c.degree for c in bad]}"
    dims = ", ".join(f"d={c.degree}:{c.ideal_dim}" for c in comparisons)
    return True, f"ideal and kernel dimensions agree ({dims})"


def _check_ordinary(ctx, _args):
    report = springer.ordinary_presentation_check(ctx)
    detail = (
        f"dim {report.dimension} (expected {report.expected_dimension}), "
        f"tanisaki={report.tanisaki_equal}, t=0 specialization={report.specialization_equal}"
    )
    return report.ok, detail


def _check_hook_identity(ctx, _args):
    binomial, total, equal = tableaux.binomial_hook_identity(ctx.n, ctx.k)
    return equal, f"C({ctx.n},{ctx.k}) = {binomial}, tableau total = {total}"


_CHECKS = {
    "fixed-points": _check_fixed_points,
    "relations": _check_relations,
    "square-reduction": _check_square_reduction,
    "basis-determinant": _check_basis_determinant,
    "straighten": _check_straighten,
    "kernel-ideal": _check_kernel_ideal,
    "ordinary": _check_ordinary,
    "hook-identity": _check_hook_identity,
}


def _cmd_verify(args) -> int:
    if args.n_max < 1:
        raise UsageError("--n-max must be at least 1")
    selected = CHECK_NAMES
    if args.checks:
        selected = tuple(name.strip() for name in args.checks.split(","))
        unknown = [name for name in selected if name not in _CHECKS]
        if unknown:
            raise UsageError(
                f"unknown checks {unknown}; available: {', '.join(CHECK_NAMES)}"
            )
    started = time.perf_counter()
    entries = []
    all_ok = True
    for n in range(1, args.n_max + 1):
        ks = range(n // 2 + 1) if args.k == "all" else (n // 2,)
        for k in ks:
            ctx = SpringerContext(n=n, k=k)
            for name in selected:
                tick = time.perf_counter()
                ok, details = _CHECKS[name](ctx, args)
                elapsed_ms = int((time.perf_counter() - tick) * 1000)
                all_ok = all_ok and ok
                entries.append(
                    {
                        "name": f"{name}[n={n},k={k}]",
                        "status": "pass" if ok else "fail",
                        "details": details,
                        "elapsed_ms": elapsed_ms,
                    }
                )
    total_ms = int((time.perf_counter() - started) * 1000)
    payload = {
        "command": args.command_echo,
        "context": {"n": args.n_max, "k": None},
        "checks": entries,
        "elapsed_ms": total_ms,
    }
    lines = []
    for entry in entries:
        status = entry["status"].upper()
        lines.append(
            f"{status:4} {entry['name']}: {entry['details']} [{entry['elapsed_ms']} ms]"
        )
    lines.append(
        f"# {len(entries)} checks, "
        f"{sum(1 for e in entries if e['status'] == 'fail')} failed, {total_ms} ms"
    )
    _emit(args, payload, lines)
    return 0 if all_ok else 1


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tworow",
        description=(
            "Exact presentations of the circle-equivariant and ordinary "
            "cohomology of two-row Springer varieties."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("fixed-points", help="list the circle-fixed points")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    add_format(p)
    p.set_defaults(func=_cmd_fixed_points)

    p = sub.add_parser("generators", help="list presentation ideal generators")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--ideal", choices=("I", "J", "tanisaki"), default="I")
    add_format(p)
    p.set_defaults(func=_cmd_generators)

    p = sub.add_parser("straighten", help="expand a polynomial over the tableau basis")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--poly", type=str, required=True)
    p.add_argument("--method", choices=("oracle", "paper", "both"), default="both")
    add_format(p)
    p.set_defaults(func=_cmd_straighten)

    p = sub.add_parser("tableaux", help="standard tableau enumeration and hook data")
    p.add_argument("--n", type=int)
    p.add_argument("--ell", type=int)
    p.add_argument("--shape", type=str, help="comma-separated partition, e.g. 4,3,2,1,1")
    add_format(p)
    p.set_defaults(func=_cmd_tableaux)

    p = sub.add_parser("verify", help="run the verification suite")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--k", choices=("all", "max"), default="all")
    p.add_argument("--degree-max", type=int, default=None)
    p.add_argument(
        "--checks",
        type=str,
        default=None,
        help="comma-separated subset of: " + ", ".join(CHECK_NAMES),
    )
    add_format(p)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    args.command_echo = "tworow " + " ".join(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ConsistencyError as exc:
        print(f"consistency error: {exc}", file=sys.stderr)
        return 1


def run() -> None:
    raise SystemExit(main())
