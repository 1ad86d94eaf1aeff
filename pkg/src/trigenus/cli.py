"""Command-line front end.

Exit codes: 0 success, 1 bad input or a failed check on the input,
2 an internal invariant failure.  Human output goes to stdout; with
``--format machine`` stdout carries one sorted JSON document instead.
Progress messages go to stderr.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
import time

from . import bounds as B
from .algebra import betti2_from_duality, homology_h1, pi1_presentation, write_presentation
from .colouring import (
    Colouring,
    SearchBudgetExceeded,
    find_colouring,
    run_pipeline,
    verify_colouring,
)
from .davis import davis_construction
from .io import load_triangulation, read_colouring, save_triangulation, write_colouring
from .triangulation import (
    TriangulationError,
    dual_graph,
    f_vector,
    orientability,
    validate,
)
from .trisection import TrisectionIdentityError, trisection_report

log = logging.getLogger("trigenus")


class UserError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


class _Out:
    """Collects human lines and machine fields side by side."""

    def __init__(self, fmt):
        self.fmt = fmt
        self.lines = []
        self.data = {}

    def line(self, text):
        self.lines.append(text)

    def put(self, **fields):
        self.data.update(fields)

    def flush(self, stream):
        if self.fmt == "machine":
            stream.write(json.dumps(self.data, sort_keys=True, indent=2) + "\n")
        else:
            for text in self.lines:
                stream.write(text + "\n")


def _load(path):
    try:
        return load_triangulation(path)
    except OSError as exc:
        raise UserError(f"cannot read {path}: {exc.strerror}") from exc


def _fvec(f):
    return "(" + ",".join(str(x) for x in f) + ")"


def cmd_validate(args, out):
    tri = _load(args.input)
    report = validate(tri)
    out.put(valid=report.valid, closed=report.closed, unglued=len(report.unglued),
            violations=[str(v) for v in report.violations], size=tri.size)
    if report.valid:
        state = "closed" if report.closed else f"{len(report.unglued)} unglued facets"
        out.line(f"valid, {tri.size} pentachora, {state}")
        return 0
    for v in report.violations:
        out.line(str(v))
    out.line(f"invalid: {len(report.violations)} violations")
    return 1


def cmd_info(args, out):
    tri = _load(args.input)
    tri.require_valid()
    graph = dual_graph(tri)
    out.put(size=tri.size, closed=tri.is_closed, components=len(graph.components))
    if tri.is_closed:
        f = f_vector(tri)
        orientation = "orientable" if orientability(tri) else "non-orientable"
        out.line(f"f = {_fvec(f)}, chi = {f.chi}, {orientation}")
        out.line(f"f4 = {f[4]}, chi = {f.chi}")
        out.put(f=list(f), chi=f.chi, orientable=bool(orientability(tri)))
    else:
        out.line(f"f4 = {tri.size}, bounded with {len(tri.unglued_facets())} unglued facets")
        out.put(unglued=len(tri.unglued_facets()))
    out.line(f"dual graph: {len(graph.edges)} edges, {len(graph.components)} component(s)")
    out.put(dual_edges=len(graph.edges))
    return 0


def _colouring_for(tri, args):
    if args.colouring:
        with open(args.colouring, encoding="utf-8") as fh:
            colouring = read_colouring(fh.read())
        bad = verify_colouring(tri, colouring)
        if bad:
            raise UserError(f"colouring violates the 2-2-1 pattern at pentachoron {bad[0]}")
        return colouring
    if args.types:
        return Colouring.from_types(tri)
    try:
        colouring = find_colouring(tri, node_budget=args.budget)
    except SearchBudgetExceeded as exc:
        raise UserError(f"no tricolouring found (budget exhausted: {exc})") from exc
    if colouring is None:
        raise UserError("no tricolouring found (search complete)")
    return colouring


def cmd_colour(args, out):
    tri = _load(args.input)
    tri.require_valid(closed=True)
    colouring = _colouring_for(tri, args)
    text = write_colouring(colouring)
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        out.lines.extend(text.rstrip("\n").split("\n"))
    sizes = colouring.class_sizes()
    out.put(class_sizes=list(sizes), colours=list(colouring.colours),
            representatives=[f"{p}:{s}" for p, s in colouring.representatives])
    if args.output:
        out.line(f"class sizes {sizes[0]} / {sizes[1]} / {sizes[2]}")
    return 0


def cmd_trisect(args, out):
    tri = _load(args.input)
    tri.require_valid(closed=True)
    colouring = _colouring_for(tri, args)
    t0 = time.perf_counter()
    moved, moved_colouring = run_pipeline(tri, colouring)
    log.info("pipeline: %d doubles, %d pentachora (%.2fs)",
             tri.size // 2, moved.size, time.perf_counter() - t0)
    report = trisection_report(moved, moved_colouring)
    h1 = homology_h1(tri)
    inv = B.InvariantSet(
        chi=report.chi,
        beta1=h1.beta1,
        beta2=betti2_from_duality(report.chi, h1.beta1),
        sigma=tri.size,
        excluded_s4=args.not_s4,
        excluded_cp2=args.not_cp2,
        trisection_genus=report.genus,
    )
    bnd = B.genus_bounds(inv)
    s = report.surface
    out.line(report.genus_tuple())
    out.line(bnd.sandwich("g"))
    out.line(f"doubles = {tri.size // 2}, pentachora after moves = {moved.size}")
    out.line(f"surface: squares = {s.squares}, edges = {s.edges}, vertices = {s.vertices}, "
             f"chi = {s.chi}, genus = {s.genus}")
    for sp in report.spines:
        out.line(f"spine {sp.colour}: vertices = {len(sp.vertices)}, edges = {len(sp.edges)}, "
                 f"connected = {'yes' if sp.connected else 'no'}, betti1 = {sp.betti1}")
    out.line(f"beta1 = {h1.beta1}, beta2 = {inv.beta2}, chi = {report.chi}")
    out.line(f"60 sigma = {B.upper_bound_sigma(tri.size)}")
    out.put(trisection=report.to_dict(), bounds=bnd.to_dict(), doubles=tri.size // 2,
            pentachora_after_moves=moved.size, beta1=h1.beta1, beta2=inv.beta2,
            sixty_sigma=B.upper_bound_sigma(tri.size), genus_tuple=report.genus_tuple())
    return 0


def cmd_homology(args, out):
    tri = _load(args.input)
    h1 = homology_h1(tri)
    torsion = " + ".join(f"Z/{t}" for t in h1.torsion) or "none"
    out.line(f"beta1 = {h1.beta1}, torsion = {torsion}")
    out.put(beta1=h1.beta1, torsion=list(h1.torsion))
    if orientability(tri):
        chi = f_vector(tri).chi
        beta2 = betti2_from_duality(chi, h1.beta1)
        out.line(f"beta2 = {beta2}, chi = {chi}")
        out.put(beta2=beta2, chi=chi)
    if args.presentation_out:
        with open(args.presentation_out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(write_presentation(pi1_presentation(tri)))
    return 0


def cmd_bounds(args, out):
    inv = B.InvariantSet(
        chi=args.chi,
        beta1=args.b1,
        beta2=args.b2,
        rank_lb=args.rank,
        sigma=args.sigma,
        volume=args.volume,
        signature=args.signature,
        gromov_norm=args.gromov,
        excluded_s4=args.not_s4,
        excluded_cp2=args.not_cp2,
        trisection_genus=args.trisection_genus,
    )
    report = B.genus_bounds(inv)
    out.lines.extend(report.to_text().split("\n"))
    out.put(bounds=report.to_dict())
    if args.cover_degree:
        cover = B.cover_bounds(inv, args.cover_degree)
        out.line(f"cover of degree {args.cover_degree}: {cover.sandwich('g(N)')}")
        out.put(cover=cover.to_dict())
    if args.hyperbolic or args.volume is not None:
        hyp = B.hyperbolic_bounds(inv)
        for name in sorted(hyp.extras):
            out.line(f"hyperbolic {name} = {hyp.extras[name]:.6g}")
        out.line(f"hyperbolic lower = {hyp.lower}")
        out.put(hyperbolic=hyp.to_dict())
    if not report.consistent:
        raise UserError(report.diagnostic)
    return 0


def cmd_davis(args, out):
    start = time.perf_counter()
    dc = davis_construction()
    log.info("Davis construction finished in %.2fs", time.perf_counter() - start)
    if args.list_candidates:
        for c in dc.candidates:
            out.line(f"{'PASS' if c.passed else 'fail'}  w = {c.label}  ({c.reason})")
    out.put(candidates=[{"word": list(c.word), "passed": c.passed, "reason": c.reason}
                        for c in dc.candidates])
    tri = dc.bounded if args.emit_bounded else dc.triangulation
    if args.output:
        save_triangulation(tri, args.output)
    if args.colouring_out:
        with open(args.colouring_out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(write_colouring(dc.colouring))
    out.line(f"group order {len(dc.table)}, pentachora {tri.size}, "
             f"{'bounded' if args.emit_bounded else 'closed'}")
    out.put(order=len(dc.table), size=tri.size, closed=tri.is_closed)
    return 0


def _add_colour_source(p):
    g = p.add_mutually_exclusive_group()
    g.add_argument("--auto", action="store_true", help="search for a tricolouring (default)")
    g.add_argument("--types", action="store_true",
                   help="colour by vertex type: 0,1 -> 0; 2 -> 1; 3,4 -> 2")
    g.add_argument("--colouring", metavar="FILE", help="read a colouring file")
    p.add_argument("--budget", type=int, default=None,
                   help="node budget for the colouring search")


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("human", "machine"), default="human")
    common.add_argument("--threads", type=int, default=1,
                        help="accepted for reproducibility baselines; runs are single-threaded")
    common.add_argument("-v", "--verbose", action="store_true", help="progress on stderr")

    parser = _Parser(prog="trigenus", description=__doc__.split("\n")[0], parents=[common])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("validate", parents=[common], help="check gluing consistency")
    p.add_argument("input")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("info", parents=[common], help="f-vector, chi, orientability")
    p.add_argument("input")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("colour", parents=[common], help="find or check a tricolouring")
    p.add_argument("input")
    _add_colour_source(p)
    p.add_argument("-o", "--output", help="write the colouring here")
    p.set_defaults(func=cmd_colour)

    p = sub.add_parser("trisect", parents=[common], help="trisection and genus bounds")
    p.add_argument("input")
    _add_colour_source(p)
    p.add_argument("--not-s4", action="store_true", help="assert M is not S^4")
    p.add_argument("--not-cp2", action="store_true", help="assert M is not +-CP^2")
    p.set_defaults(func=cmd_trisect)

    p = sub.add_parser("homology", parents=[common], help="H_1 and beta_2")
    p.add_argument("input")
    p.add_argument("--presentation-out", help="write the pi_1 presentation here")
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("bounds", parents=[common], help="genus bounds from invariants")
    p.add_argument("--chi", type=int, required=True)
    p.add_argument("--b1", type=int)
    p.add_argument("--b2", type=int)
    p.add_argument("--rank", type=int, help="lower bound on rank of pi_1")
    p.add_argument("--sigma", type=int, help="pentachoron count of a triangulation")
    p.add_argument("--volume", type=float)
    p.add_argument("--hyperbolic", action="store_true", help="report hyperbolic bounds")
    p.add_argument("--signature", type=int)
    p.add_argument("--gromov", type=float, help="Gromov norm")
    p.add_argument("--not-s4", action="store_true")
    p.add_argument("--not-cp2", action="store_true")
    p.add_argument("--cover-degree", type=int)
    p.add_argument("--trisection-genus", type=int)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("davis", parents=[common], help="build the Davis triangulation")
    p.add_argument("-o", "--output", help="write the triangulation here")
    p.add_argument("--colouring-out", help="write the type colouring here")
    p.add_argument("--emit-bounded", action="store_true",
                   help="emit the 120-cell before identification")
    p.add_argument("--list-candidates", action="store_true")
    p.set_defaults(func=cmd_davis)
    return parser


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    handler = logging.StreamHandler(stderr)
    handler.setFormatter(logging.Formatter("%(message)s"))
    log.handlers[:] = [handler]
    log.setLevel(logging.INFO if args.verbose else logging.WARNING)
    out = _Out(args.format)
    try:
        code = args.func(args, out)
    except (TrisectionIdentityError, AssertionError) as exc:
        stderr.write(f"internal error: {exc}\n")
        return 2
    except (UserError, TriangulationError, ValueError, OSError) as exc:
        stderr.write(f"error: {exc}\n")
        return 1
    out.flush(stdout)
    return code


def main_entry():
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
