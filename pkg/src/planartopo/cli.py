"""Command line entry point.

Exit codes: 0 decided or pass, 1 property violated or precondition failed,
2 input error, 3 undecided at the resolution floor.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .constructions.grid_cycle import grid_cycle
from .constructions.neighborhood import build_neighborhood
from .constructions.obstruction import annulus_obstruction
from .constructions.svg import render_cycles, render_grid, render_neighborhood, render_scenes
from .errors import DisjointnessError, DomainError, FrameError, GeometryError, InputError
from .geometry.parse import parse_scene
from .geometry.raster import rasterize
from .geometry.scene import Frame, Scene
from .harness.generate import GenParams
from .harness.verify import fuzz_campaign, verify_union
from .topology.certificates import (
    component_simply_connected,
    decide_complement,
    sphere_connected_complement,
)
from .topology.labeling import label_components, unbounded_component
from .topology.pgm import load_pgm

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT, EXIT_UNDECIDED = 0, 1, 2, 3


class _Input:
    """A loaded input: either named scenes on a frame, or a mask grid."""

    def __init__(self, scenes=None, frame=None, grid=None):
        self.scenes, self.frame, self.grid = scenes, frame, grid

    def scene(self, name: str) -> Scene:
        if self.scenes is None:
            raise InputError("a scene document is required, not a mask", "")
        if name not in self.scenes:
            raise InputError(f"missing set {name!r}", f"/sets/{name}")
        return self.scenes[name]


def _load(path: str, mode: str | None) -> _Input:
    try:
        with open(path, "rb") as fh:
            data = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read input: {exc.strerror}", path) from None
    if data[:2] in (b"P2", b"P5"):
        return _Input(grid=load_pgm(path, 1.0, mode or "outer"))
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError:
        raise InputError("input is neither UTF-8 JSON nor PGM", path) from None
    scenes, frame = parse_scene(text)
    return _Input(scenes, frame)


def _frame(inp: _Input, args) -> Frame:
    """Document frame at the requested h (default: frame width / 256)."""
    f = inp.frame
    if args.h is not None:
        try:
            return f.with_h(args.h)
        except FrameError as exc:
            raise InputError(str(exc), "--h") from None
    try:
        return f.with_h(f.width / 256)
    except FrameError:
        return f


def _floor(frame: Frame, args) -> float:
    return args.floor if args.floor is not None else frame.width / 4096


def _default_set(inp: _Input, args, fallback: str = "K") -> str:
    if args.set:
        return args.set
    if fallback in inp.scenes:
        return fallback
    return next(iter(inp.scenes))


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def _write(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def _single_grid(inp: _Input, args):
    if inp.grid is not None:
        return inp.grid
    frame = _frame(inp, args)
    return rasterize(inp.scene(_default_set(inp, args)), frame, args.mode or "outer")


# -- subcommands ---------------------------------------------------------------


def cmd_components(inp, args) -> int:
    g = _single_grid(inp, args)
    occ = label_components(g, "occupied")
    comp = label_components(g, "complement")
    _emit(
        {
            "mode": g.mode,
            "h": g.frame.h,
            "occupied": {"count": occ.count, "sizes": [c.size for c in occ.components]},
            "complement": {
                "count": comp.count,
                "bounded": len(comp.bounded_ids()),
                "unbounded_id": unbounded_component(comp),
            },
        }
    )
    return EXIT_OK


def _decide(inp, args):
    """Certificate for the chosen input: one grid when a mode or mask is given, else refined."""
    if inp.grid is not None or args.mode is not None:
        g = _single_grid(inp, args)
        return g, sphere_connected_complement(g)
    frame = _frame(inp, args)
    scene = inp.scene(_default_set(inp, args))
    cert = decide_complement(scene, frame, _floor(frame, args)).certificate
    return rasterize(scene, frame.with_h(cert.h), cert.mode), cert


def cmd_sphere_connected(inp, args) -> int:
    _, cert = _decide(inp, args)
    _emit(cert.to_dict())
    return EXIT_OK if cert.decided else EXIT_UNDECIDED


def cmd_simply_connected(inp, args) -> int:
    g, cert = _decide(inp, args)
    occ = label_components(g, "occupied")
    per = [component_simply_connected(g, occ, i).verdict for i in range(occ.count)]
    verdict = {
        "connected": "all simply connected",
        "disconnected": "not all simply connected",
        "undecided": "undecided",
    }[cert.verdict]
    _emit({"verdict": verdict, "certificate": cert.to_dict(), "components": per})
    return EXIT_OK if cert.decided else EXIT_UNDECIDED


def cmd_neighborhood(inp, args) -> int:
    k, a = inp.scene("K"), inp.scene("A")
    res = build_neighborhood(k, a, h=args.h, floor=args.floor)
    _emit(res.to_dict())
    if args.svg and res.V is not None:
        _write(args.svg, render_neighborhood(res, k, a))
    return EXIT_OK if res.success else EXIT_UNDECIDED


def cmd_grid_cycle(inp, args) -> int:
    k = inp.scene(_default_set(inp, args))
    eps = args.eps if args.eps is not None else (args.h if args.h is not None else inp.frame.width / 32)
    gcs = grid_cycle(k, eps)
    out = gcs.to_dict()
    _emit(out)
    if args.svg:
        _write(args.svg, render_cycles(gcs, k, inp.frame))
    return EXIT_OK if out["winding"] != 0 else EXIT_VIOLATION


def cmd_annulus(inp, args) -> int:
    frame = _frame(inp, args)
    k = inp.scene(_default_set(inp, args))
    res = annulus_obstruction(k, frame.h, frame, _floor(frame, args))
    _emit(res.to_dict())
    if args.svg:
        _write(args.svg, render_scenes({"K": k, "A": res.scene()}, frame))
    return EXIT_OK


def cmd_verify_union(inp, args) -> int:
    frame = _frame(inp, args)
    report = verify_union(
        inp.scene("K"), inp.scene("L"), frame=frame, floor=_floor(frame, args), neighborhoods=args.neighborhoods
    )
    _emit(report.to_dict())
    return {"pass": EXIT_OK, "undecided": EXIT_UNDECIDED}.get(report.verdict, EXIT_VIOLATION)


def cmd_fuzz(args) -> int:
    p = GenParams(seed=args.seed)
    summary = fuzz_campaign(args.count, p, workers=args.workers)
    if args.dump_dir:
        os.makedirs(args.dump_dir, exist_ok=True)
        for rec in summary.defects:
            _write(os.path.join(args.dump_dir, f"defect_{rec['index']:05d}.json"), rec["instance"])
    _emit(summary.to_dict())
    return EXIT_OK if not summary.defects else EXIT_VIOLATION


def cmd_render(inp, args) -> int:
    if inp.grid is not None:
        svg = render_grid(inp.grid, "V")
    else:
        svg = render_scenes(inp.scenes, inp.frame)
    if args.svg:
        _write(args.svg, svg)
    else:
        sys.stdout.write(svg)
    return EXIT_OK


_COMMANDS = {
    "components": cmd_components,
    "sphere-connected": cmd_sphere_connected,
    "simply-connected": cmd_simply_connected,
    "neighborhood": cmd_neighborhood,
    "grid-cycle": cmd_grid_cycle,
    "annulus": cmd_annulus,
    "verify-union": cmd_verify_union,
    "render": cmd_render,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="planartopo", description="Certified planar topology on rasters.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in _COMMANDS:
        sp = sub.add_parser(name)
        sp.add_argument("input", help="scene JSON document or PGM mask")
        sp.add_argument("--h", type=float, help="cell size (default: frame width / 256)")
        sp.add_argument("--mode", choices=("outer", "inner"), help="rasterization mode (disables refinement)")
        sp.add_argument("--floor", type=float, help="smallest cell size (default: frame width / 4096)")
        sp.add_argument("--svg", help="write an SVG rendering to this path")
        sp.add_argument("--set", help="name of the set to analyse (default: K)")
        if name == "grid-cycle":
            sp.add_argument("--eps", type=float, help="grid pitch (default: --h or frame width / 32)")
        if name == "verify-union":
            sp.add_argument("--neighborhoods", action="store_true", help="also build neighborhoods of K and L")
    fz = sub.add_parser("fuzz")
    fz.add_argument("--seed", type=int, default=0)
    fz.add_argument("--count", type=int, default=100)
    fz.add_argument("--workers", type=int, default=1)
    fz.add_argument("--dump-dir", help="directory for defect instance documents")
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        if args.command == "fuzz":
            if args.count < 1 or not 0 <= args.seed < 2**64:
                raise InputError("count must be >= 1 and seed a 64-bit unsigned integer", "--count")
            return cmd_fuzz(args)
        if args.h is not None and not args.h > 0:
            raise InputError("must be positive", "--h")
        inp = _load(args.input, args.mode)
        return _COMMANDS[args.command](inp, args)
    except (InputError, GeometryError, FrameError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except DisjointnessError as exc:
        print(f"precondition: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except DomainError as exc:
        print(f"precondition: {exc}", file=sys.stderr)
        if exc.certificate is not None:
            _emit({"error": str(exc), "certificate": exc.certificate.to_dict()})
            if exc.certificate.verdict == "undecided":
                return EXIT_UNDECIDED
        return EXIT_VIOLATION


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
