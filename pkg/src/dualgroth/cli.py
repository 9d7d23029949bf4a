"""Command-line front end: compute, verify, lattice.

Exit codes: 0 success, 1 counterexample or divergence, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass, field

from .detkit import FORMULAS, FormulaUsageError, g_via
from .lattice3d import (
    count_path_tuples,
    cut_edge,
    enumerate_systems,
    from_rpp,
    good_sum,
    good_systems,
    lgv_signed_sum,
    path_involution,
    project,
    system_to_json_obj,
    to_rpp,
)
from .polyring import Poly
from .shapes import Partition, ShapeError, SkewShape, parse_shape, partitions_up_to, subpartitions
from .tableaux import RPP

DEFAULT_CAP = 10 ** 6


@dataclass
class VerifyReport:
    family: str
    formulas: tuple[str, ...]
    checked: int = 0
    counterexample: tuple[str, int, str, str, str, str] | None = None
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return self.counterexample is None

    def lines(self) -> list[str]:
        out = [
            f"family: {self.family}",
            f"formulas: {', '.join(self.formulas)}",
            f"checked: {self.checked} cases in {self.elapsed:.2f}s",
        ]
        if self.passed:
            out.append("result: PASS")
        else:
            shape, m, fa, pa, fb, pb = self.counterexample
            out.append(f"result: FAIL at shape {shape}, m={m}")
            out.append(f"  {fa}: {pa}")
            out.append(f"  {fb}: {pb}")
        return out


def _check_case(shape_text: str, m: int, formulas: tuple[str, ...]):
    """Compare all requested formulas pairwise on one shape; None when equal."""
    shape = parse_shape(shape_text)
    refined = [f for f in formulas if f == "jt_e_refined"]
    plain = [f for f in formulas if f != "jt_e_refined"]
    results: list[tuple[str, Poly]] = []
    for f in plain:
        results.append((f, g_via(f, shape, m)))
    ref_results: list[tuple[str, Poly]] = []
    if refined:
        ref_results.append(("oracle(refined)", g_via("oracle", shape, m, refined=True)))
        for f in refined:
            ref_results.append((f, g_via(f, shape, m, refined=True)))
    for group in (results, ref_results):
        for (fa, pa), (fb, pb) in zip(group, group[1:]):
            if pa != pb:
                return (str(shape), m, fa, str(pa), fb, str(pb))
    return None


def run_verify(max_size: int, max_cols: int | None, max_rows: int | None,
               m_list: list[int], formulas: tuple[str, ...],
               straight_only: bool) -> VerifyReport:
    family = f"|outer| <= {max_size}"
    if max_cols is not None:
        family += f", cols <= {max_cols}"
    if max_rows is not None:
        family += f", rows <= {max_rows}"
    family += ", straight shapes" if straight_only else ", all nested inner shapes"
    report = VerifyReport(family=family, formulas=formulas)
    started = time.perf_counter()

    cases: list[tuple[str, int]] = []
    for lam in partitions_up_to(max_size, max_cols, max_rows):
        inners = [Partition()] if straight_only else list(subpartitions(lam))
        for mu in inners:
            text = str(SkewShape(lam, mu))
            for m in m_list:
                cases.append((text, m))

    workers = int(os.environ.get("DUALGROTH_WORKERS", "1"))
    if workers > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(_check_case,
                                     [c[0] for c in cases], [c[1] for c in cases],
                                     [formulas] * len(cases), chunksize=8))
    else:
        outcomes = [_check_case(text, m, formulas) for text, m in cases]

    for outcome in outcomes:
        report.checked += 1
        if outcome is not None:
            report.counterexample = outcome
            break
    report.elapsed = time.perf_counter() - started
    return report


def render_system_svg(system, path: str, cell: int = 28, pad: int = 30) -> None:
    """One panel per z-plane showing every defined projection as a polyline."""
    colors = ["#c0392b", "#2980b9", "#27ae60", "#8e44ad", "#d35400", "#16a085"]
    oc = system.outer.conjugate()
    top = max([oc.part(s) for s in range(1, system.n + 1)] + [1])
    xs = [v[0] for p in system.paths for v in p.vertices] + [0]
    x_lo, x_hi = min(xs) - 1, max(xs) + 1
    width = (x_hi - x_lo) * cell + 2 * pad
    height = (system.m + 1) * cell + 2 * pad
    panels = []
    for k in range(top):
        shapes = []
        for idx, p in enumerate(system.paths):
            proj = project(p, k)
            if proj is None:
                continue
            pts = " ".join(
                f"{pad + (x - x_lo) * cell},{pad + (system.m - y) * cell}"
                for x, y in proj.points)
            color = colors[idx % len(colors)]
            shapes.append(
                f'<polyline points="{pts}" fill="none" stroke="{color}" stroke-width="2"/>')
            try:
                edge = cut_edge(p, k)
            except Exception:
                edge = None
            if edge is not None:
                tx, ty = proj.points[proj.clip_index]
                fill = "#e67e22" if edge.kind == "t" else "#c0392b"
                cx = pad + (tx - x_lo) * cell
                cy = pad + (system.m - ty) * cell
                shapes.append(f'<circle cx="{cx}" cy="{cy}" r="4" fill="{fill}">'
                              f'<title>cut {edge.kind}{edge.index}</title></circle>')
        grid = []
        for gx in range(x_lo, x_hi + 1):
            px = pad + (gx - x_lo) * cell
            grid.append(f'<line x1="{px}" y1="{pad}" x2="{px}" y2="{height - pad}" '
                        f'stroke="#ddd"/>')
        for gy in range(system.m + 1):
            py = pad + gy * cell
            grid.append(f'<line x1="{pad}" y1="{py}" x2="{width - pad}" y2="{py}" '
                        f'stroke="#ddd"/>')
        label = f'<text x="{pad}" y="{pad - 10}" font-size="13">plane z = {k}</text>'
        panels.append("\n".join(grid + shapes + [label]))
    total_w = width * max(len(panels), 1)
    body = []
    for i, panel in enumerate(panels):
        body.append(f'<g transform="translate({i * width},0)">{panel}</g>')
    svg = (f'<svg xmlns="http://www.w3.org/2000/svg" width="{total_w}" '
           f'height="{height}" viewBox="0 0 {total_w} {height}">\n'
           + "\n".join(body) + "\n</svg>\n")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(svg)


def _poly_out(p: Poly, fmt: str) -> str:
    if fmt == "json":
        return p.to_json()
    return str(p)


def cmd_compute(args) -> int:
    shape = parse_shape(args.shape)
    poly = g_via(args.formula, shape, args.m, refined=args.refined, n=args.n)
    print(_poly_out(poly, args.format))
    return 0


def cmd_verify(args) -> int:
    m_list = [int(tok) for tok in args.m.split(",") if tok.strip()]
    formulas = tuple(tok.strip() for tok in args.formulas.split(",") if tok.strip())
    for f in formulas:
        if f not in FORMULAS:
            raise FormulaUsageError(f"unknown formula {f!r}; choose from {FORMULAS}")
    report = run_verify(args.max_size, args.max_cols, args.max_rows, m_list,
                        formulas, args.straight_only)
    for line in report.lines():
        print(line)
    return 0 if report.passed else 1


def _load_rpp(text: str) -> RPP:
    if text.lstrip().startswith("{"):
        return RPP.from_json(text)
    with open(text, encoding="utf-8") as fh:
        return RPP.from_json(fh.read())


def cmd_lattice(args) -> int:
    shape = parse_shape(args.shape)
    lam, mu = shape.outer, shape.inner
    n = args.n if args.n is not None else max(lam.part(1), mu.part(1))
    if args.action != "bijection" or args.from_rpp is None:
        projected = count_path_tuples(lam, mu, n, args.m)
        if projected > args.cap:
            print(f"refusing: projected path-tuple count {projected} exceeds the cap "
                  f"{args.cap}; shrink the shape or raise --cap", file=sys.stderr)
            return 2

    if args.action == "lgv":
        print(_poly_out(lgv_signed_sum(lam, mu, n, args.m), args.format))
        return 0

    if args.action == "good-sum":
        print(_poly_out(good_sum(lam, mu, n, args.m), args.format))
        return 0

    if args.action == "orbits":
        systems = [s for s, _ in enumerate_systems(lam, mu, n, args.m)]
        fixed = 0
        moved = 0
        for s in systems:
            image = path_involution(s)
            if image == s:
                fixed += 1
                continue
            moved += 1
            back = path_involution(image)
            if back != s:
                print("FAIL: involution is not self-inverse", file=sys.stderr)
                return 1
            if image.weight() != s.weight() or image.sign != -s.sign:
                print("FAIL: orbit does not cancel", file=sys.stderr)
                return 1
        print(f"systems: {len(systems)}")
        print(f"good (fixed): {fixed}")
        print(f"paired: {moved} (signs cancel pairwise)")
        if args.render:
            for idx, s in enumerate(systems[: args.render_limit]):
                render_system_svg(s, f"{args.render}.{idx}.svg")
        return 0

    # bijection
    if args.from_rpp is not None:
        rpp = _load_rpp(args.from_rpp)
        system = from_rpp(rpp, args.m, n=args.n)
        print(json.dumps(system_to_json_obj(system), separators=(",", ":")))
        back = to_rpp(system)
        if back != rpp:
            print("FAIL: round trip did not reproduce the filling", file=sys.stderr)
            return 1
        if args.render:
            render_system_svg(system, args.render)
        return 0
    goods = good_systems(lam, mu, n, args.m)
    for s in goods:
        rpp = to_rpp(s)
        if from_rpp(rpp, args.m, n=n) != s:
            print("FAIL: bijection round trip diverged", file=sys.stderr)
            return 1
        print(rpp.to_json())
    print(f"good systems: {len(goods)}; round trips verified")
    if args.render and goods:
        render_system_svg(goods[0], args.render)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dualgroth",
        description="Exact skew dual Grothendieck polynomials by independent routes.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_compute = sub.add_parser("compute", help="evaluate one polynomial")
    p_compute.add_argument("--shape", required=True, help='skew shape, e.g. "4,2,1/2"')
    p_compute.add_argument("--m", type=int, required=True, help="number of x-variables")
    p_compute.add_argument("--formula", default="oracle", choices=FORMULAS)
    p_compute.add_argument("--refined", action="store_true", help="keep the t-variables")
    p_compute.add_argument("--n", type=int, default=None, help="matrix padding size")
    p_compute.add_argument("--format", default="text", choices=("text", "json"))
    p_compute.set_defaults(func=cmd_compute)

    p_verify = sub.add_parser("verify", help="cross-check formulas over a shape family")
    p_verify.add_argument("--max-size", type=int, required=True)
    p_verify.add_argument("--max-cols", type=int, default=None)
    p_verify.add_argument("--max-rows", type=int, default=None)
    p_verify.add_argument("--m", default="1,2", help="comma-separated variable counts")
    p_verify.add_argument("--formulas", default="jt_e,oracle")
    p_verify.add_argument("--straight-only", action="store_true")
    p_verify.set_defaults(func=cmd_verify)

    p_lattice = sub.add_parser("lattice", help="path-system computations")
    p_lattice.add_argument("--shape", required=True)
    p_lattice.add_argument("--m", type=int, required=True)
    p_lattice.add_argument("--n", type=int, default=None)
    p_lattice.add_argument("--action", required=True,
                           choices=("lgv", "orbits", "good-sum", "bijection"))
    p_lattice.add_argument("--from-rpp", default=None,
                           help="RPP as inline JSON or a path to a JSON file")
    p_lattice.add_argument("--render", default=None, help="write an SVG to this path")
    p_lattice.add_argument("--render-limit", type=int, default=4)
    p_lattice.add_argument("--cap", type=int, default=DEFAULT_CAP,
                           help="refuse enumerations above this projected size")
    p_lattice.add_argument("--format", default="text", choices=("text", "json"))
    p_lattice.set_defaults(func=cmd_lattice)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (ShapeError, FormulaUsageError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
