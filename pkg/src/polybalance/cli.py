"""Command-line entry point: ``polybalance <command> ...``.

Every command reads a weighted polyhedron from a JSON file or from a built-in
fixture (``fixtures:<name>``) and writes JSON to standard output.  Exit codes:
0 on success, 1 on domain errors (reported as a JSON object), 2 on usage
errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, is_dataclass
from pathlib import Path

from . import acceptance, fixtures
from .core import Rat, Vec3, rat_to_json
from .duality import polar_dual
from .equilibria import classify
from .errors import GeometryError, NotATetrahedron
from .generator import generate_mono_monostatic
from .monostatic import (
    find_obtuse_cycles,
    find_obtuse_paths,
    loading_region,
    monostable_weighting,
    monounstable_weighting,
)
from .polyhedron import face_vector, parse, serialize
from .tipping import resting_height2, tip_path
from .vertex_links import dihedral_sign, vertex_signature


class UsageError(Exception):
    pass


def jsonable(obj):
    if isinstance(obj, Vec3):
        return obj.to_json()
    if isinstance(obj, Rat):
        return rat_to_json(obj)
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if is_dataclass(obj):
        return jsonable(asdict(obj))
    return obj


def load_input(source: str, center: str | None = None):
    if source.startswith("fixtures:"):
        try:
            return fixtures.load(source.split(":", 1)[1], center)
        except KeyError as exc:
            raise UsageError(str(exc.args[0])) from exc
    if center is not None:
        raise UsageError("--center only applies to fixtures:nine_centers")
    try:
        text = Path(source).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {source}: {exc.strerror}") from exc
    return parse(text)


def cmd_analyze(args):
    wp = load_input(args.input, args.center)
    return classify(wp).to_json(wp.shape)


def cmd_signatures(args):
    wp = load_input(args.input, args.center)
    p = wp.shape
    out = {"dihedrals": [{"edge": list(e.endpoints), "class": dihedral_sign(p, e).value} for e in p.edges]}
    if not p.is_tetrahedron():
        raise NotATetrahedron("vertex signatures are defined for tetrahedra only")
    out["signatures"] = []
    for v in range(4):
        s = vertex_signature(p, v)
        out["signatures"].append({"vertex": v, "m": s.m, "n": s.n,
                                  "right_face_angles": s.right_face_angles,
                                  "right_dihedrals": s.right_dihedrals})
    return out


def cmd_obtuse_path(args):
    wp = load_input(args.input, args.center)
    return {"paths": [list(p.vertices) for p in find_obtuse_paths(wp.shape)]}


def cmd_obtuse_cycle(args):
    wp = load_input(args.input, args.center)
    return {"cycles": [list(c.vertices) for c in find_obtuse_cycles(wp.shape)]}


def cmd_load_monostable(args):
    wp = load_input(args.input, args.center)
    region = loading_region(wp.shape, args.face)
    weighted = monostable_weighting(wp.shape, args.face)
    return {
        "target_face": args.face,
        "region": region.corners,
        "trace": region.trace,
        "center": weighted.center,
        "report": classify(weighted).to_json(weighted.shape),
    }


def cmd_load_monounstable(args):
    wp = load_input(args.input, args.center)
    cycles = find_obtuse_cycles(wp.shape)
    if not cycles:
        raise GeometryError("tetrahedron has no obtuse cycle")
    if not 0 <= args.cycle < len(cycles):
        raise UsageError(f"--cycle must be below {len(cycles)}")
    trace: list = []
    weighted = monounstable_weighting(wp.shape, cycles[args.cycle], trace=trace)
    return {
        "cycle": list(cycles[args.cycle].vertices),
        "center": weighted.center,
        "iterations": len(trace),
        "trace": trace,
        "report": classify(weighted).to_json(weighted.shape),
    }


def cmd_dual(args):
    wp = load_input(args.input, args.center)
    dual, corr = polar_dual(wp)
    out = serialize(dual)
    out["face_to_vertex"] = corr.face_to_vertex
    out["vertex_to_face"] = corr.vertex_to_face
    return out


def _path_json(wp, path):
    return {
        "start_face": path.start_face,
        "steps": [{"from_face": s.from_face, "exit_edge": list(wp.shape.edges[s.exit_edge].endpoints),
                   "to_face": s.to_face} for s in path.steps],
        "terminal_face": path.terminal_face,
        "height2": [resting_height2(wp, f) for f in path.faces()],
    }


def cmd_tip(args):
    wp = load_input(args.input, args.center)
    if args.all:
        return {"paths": [_path_json(wp, tip_path(wp, f)) for f in range(wp.shape.num_faces)]}
    if args.start_face is None:
        raise UsageError("give --start-face or --all")
    return _path_json(wp, tip_path(wp, args.start_face))


def cmd_generate(args):
    trace: list = []
    wp = generate_mono_monostatic(args.faces, args.vertices, trace)
    out = {
        "face_vector": list(face_vector(wp.shape).as_tuple()),
        "report": classify(wp).to_json(wp.shape),
        "trace": [list(step) for step in trace],
    }
    if args.out:
        Path(args.out).write_text(json.dumps(serialize(wp)) + "\n")
        out["written"] = args.out
    else:
        out["polyhedron"] = serialize(wp)
    return out


def cmd_verify_paper(args):
    results = acceptance.run_all(seed=args.seed, echo=lambda line: print(line, file=sys.stderr))
    return {
        "passed": all(r.passed for r in results),
        "criteria": [{"number": r.number, "title": r.title, "passed": r.passed, "detail": r.detail,
                      "seconds": round(r.seconds, 4)} for r in results],
    }


def _global_flags(suppress: bool) -> argparse.ArgumentParser:
    # subcommands accept the global flags too; SUPPRESS keeps them from
    # overwriting values given before the subcommand
    default = (lambda value: argparse.SUPPRESS) if suppress else (lambda value: value)
    flags = argparse.ArgumentParser(add_help=False)
    flags.add_argument("--seed", type=int, default=default(acceptance.DEFAULT_SEED),
                       help="seed for property suites")
    fmt = flags.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="pretty", action="store_false", default=default(False),
                     help="compact JSON (default)")
    fmt.add_argument("--pretty", dest="pretty", action="store_true", default=default(False),
                     help="indented JSON")
    return flags


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="polybalance", description=__doc__.splitlines()[0],
                                     parents=[_global_flags(False)])
    common = _global_flags(True)
    sub = parser.add_subparsers(dest="command", required=True)

    def with_input(name, fn, help_):
        p = sub.add_parser(name, help=help_, parents=[common])
        p.add_argument("input", help="JSON file or fixtures:<name>")
        p.add_argument("--center", help="named center for fixtures:nine_centers (M22 ... M44)")
        p.set_defaults(func=fn)
        return p

    with_input("analyze", cmd_analyze, "classify all equilibria")
    with_input("signatures", cmd_signatures, "vertex signatures and dihedral classes")
    with_input("obtuse-path", cmd_obtuse_path, "list obtuse paths of a tetrahedron")
    with_input("obtuse-cycle", cmd_obtuse_cycle, "list obtuse cycles of a tetrahedron")
    p = with_input("load-monostable", cmd_load_monostable, "center making a tetrahedron monostable on a face")
    p.add_argument("--face", type=int, required=True)
    p = with_input("load-monounstable", cmd_load_monounstable, "center making a tetrahedron mono-unstable")
    p.add_argument("--cycle", type=int, default=0, help="index into the list of obtuse cycles")
    with_input("dual", cmd_dual, "polar dual about the center")
    p = with_input("tip", cmd_tip, "quasi-static rolling to rest")
    p.add_argument("--start-face", type=int)
    p.add_argument("--all", action="store_true")
    p = sub.add_parser("generate", help="mono-monostatic polyhedron with a given face vector", parents=[common])
    p.add_argument("--faces", type=int, required=True)
    p.add_argument("--vertices", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_generate)
    p = sub.add_parser("verify-paper", help="run every acceptance criterion", parents=[common])
    p.set_defaults(func=cmd_verify_paper)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        result = args.func(args)
    except UsageError as exc:
        print(f"polybalance: error: {exc}", file=sys.stderr)
        return 2
    except GeometryError as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}))
        return 1
    print(json.dumps(jsonable(result), indent=2 if args.pretty else None))
    if args.command == "verify-paper" and not result["passed"]:
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
