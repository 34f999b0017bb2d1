"""Command-line front end.

Exit codes: 0 success, 1 a check failed, 2 usage or parse error.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import report
from .ef_analysis import (LinearMap, is_ef_exists, is_ef_linear_map, is_ef_standard)
from .exact_arith import DimensionError, format_rational
from .formats import ParseError, format_h, format_v, read_one
from .polyhedron import enumerate_generators, remove_redundancy
from .projection import fourier_motzkin
from .representations import HPolyhedron, VPolyhedron
from .tsp_model import (DEFAULT_TOUR_CAP, build_ap_hrep, enumerate_tours, tour_to_assignment,
                        verify_theorem1)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _coords(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip() != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated indices, got {text!r}")


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_verify_paper(args) -> int:
    only = [c.strip() for c in args.only.split(",")] if args.only else None
    try:
        results = report.run_checks(args.seed, args.n_max, only, args.timeout)
    except KeyError as exc:
        raise UsageError(f"unknown check id: {exc.args[0]}")
    if args.format == "json":
        text = report.render_json(results, args.seed, args.n_max, args.timings)
    else:
        text = report.render_text(results)
    _emit(text, args.out)
    return EXIT_OK if all(r.holds for r in results) else EXIT_FAIL


def cmd_project(args) -> int:
    poly = read_one(args.file, (HPolyhedron, VPolyhedron))
    if isinstance(poly, VPolyhedron):
        from .projection import project_v
        _emit(format_v(project_v(poly, args.keep)), args.out)
        return EXIT_OK
    proj = fourier_motzkin(poly, args.keep)
    if args.minimal and proj.rows:
        proj = remove_redundancy(proj)
    _emit(format_h(proj), args.out)
    return EXIT_OK


def cmd_vertices(args) -> int:
    h = read_one(args.file, HPolyhedron)
    _emit(format_v(enumerate_generators(h)), args.out)
    return EXIT_OK


def _verdict_json(v) -> dict:
    w = v.witness
    if isinstance(w, LinearMap):
        w = "map"
    elif w is not None:
        w = [format_rational(x) for x in w]
    return {"definition": v.definition, "holds": v.holds, "witness": w}


def cmd_ef_check(args) -> int:
    q = read_one(args.q_file, HPolyhedron)
    p = read_one(args.p_file, (HPolyhedron, VPolyhedron))
    wanted = {"all": ("standard", "exists", "map"), "standard": ("standard",),
              "exists": ("exists",), "map": ("map",)}[args.definition]
    lmap = read_one(args.map, LinearMap) if args.map else None
    if "map" in wanted and lmap is None:
        if args.definition == "map":
            raise UsageError("--definition map requires --map FILE")
        wanted = tuple(w for w in wanted if w != "map")
    verdicts = []
    for name in wanted:
        if name == "standard":
            verdicts.append(is_ef_standard(q, p, args.x_coords))
        elif name == "exists":
            verdicts.append(is_ef_exists(q, p, args.x_coords))
        else:
            verdicts.append(is_ef_linear_map(q, p, lmap))
    if args.format == "json":
        text = json.dumps({"verdicts": [_verdict_json(v) for v in verdicts]}, indent=2) + "\n"
    else:
        lines = []
        for v in verdicts:
            d = _verdict_json(v)
            extra = f"  witness {' '.join(d['witness'])}" if isinstance(d["witness"], list) else ""
            lines.append(f"{v.definition:<15} {'holds' if v.holds else 'fails'}{extra}")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def cmd_tsp(args) -> int:
    if args.n < 2:
        raise UsageError(f"n must be at least 2, got {args.n}")
    if args.n > args.cap:
        raise UsageError(f"n={args.n} exceeds the tour cap {args.cap} (raise it with --cap)")
    if args.action == "tours":
        text = "".join(f"{t}\n" for t in enumerate_tours(args.n, args.cap))
        _emit(text, args.out)
        return EXIT_OK
    if args.action == "ap":
        _emit(format_h(build_ap_hrep(args.n)), args.out)
        return EXIT_OK
    rep = verify_theorem1(args.n, args.cap)
    lines = [f"n {rep.n}", f"vertices {rep.vertex_count}", f"tours {rep.expected_count}",
             f"integral {str(rep.all_integral).lower()}",
             f"permutation_matrices {str(rep.all_permutations).lower()}",
             f"bijection {str(rep.bijection).lower()}",
             f"round_trips {str(rep.round_trips).lower()}"]
    for t in enumerate_tours(args.n, args.cap):
        flat = " ".join(str(x) for x in tour_to_assignment(t).flat())
        lines.append(f"tour {t} -> w {flat}")
    lines.append("holds" if rep.holds else "FAILS")
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK if rep.holds else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="exactpoly", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    vp = sub.add_parser("verify-paper", help="run the fixed verification checks")
    vp.add_argument("--seed", type=int, default=report.DEFAULT_SEED)
    vp.add_argument("--n-max", type=int, default=report.DEFAULT_N_MAX)
    vp.add_argument("--only", help="comma-separated check ids")
    vp.add_argument("--format", choices=("text", "json"), default="text")
    vp.add_argument("--out")
    vp.add_argument("--timeout", type=float, help="per-check time limit in seconds")
    vp.add_argument("--timings", action="store_true", help="include elapsed times in JSON")
    vp.set_defaults(func=cmd_verify_paper)

    pr = sub.add_parser("project", help="project a polyhedron onto coordinates")
    pr.add_argument("file")
    pr.add_argument("--keep", type=_coords, required=True)
    pr.add_argument("--minimal", action="store_true", help="remove redundant rows")
    pr.add_argument("--out")
    pr.set_defaults(func=cmd_project)

    ve = sub.add_parser("vertices", help="enumerate generators of an H-polyhedron")
    ve.add_argument("file")
    ve.add_argument("--out")
    ve.set_defaults(func=cmd_vertices)

    ef = sub.add_parser("ef-check", help="extended-formulation verdicts for (Q, P)")
    ef.add_argument("q_file")
    ef.add_argument("p_file")
    ef.add_argument("--x-coords", type=_coords, required=True)
    ef.add_argument("--map")
    ef.add_argument("--definition", choices=("all", "standard", "exists", "map"), default="all")
    ef.add_argument("--format", choices=("text", "json"), default="text")
    ef.add_argument("--out")
    ef.set_defaults(func=cmd_ef_check)

    ts = sub.add_parser("tsp", help="tours and the assignment polytope")
    ts.add_argument("n", type=int)
    ts.add_argument("action", choices=("tours", "ap", "bijection"))
    ts.add_argument("--cap", type=int, default=DEFAULT_TOUR_CAP)
    ts.add_argument("--out")
    ts.set_defaults(func=cmd_tsp)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ParseError, DimensionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
