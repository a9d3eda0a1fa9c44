"""Command-line front end.

Every subcommand prints a JSON summary on stdout.  Exit status: 0 on
success, 1 for invalid input, 2 when a checked property fails.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import graph as gmod
from .compact import CompactionError, OpvrDrawing, compact
from .configs import check_properties, detect_all, report_json
from .generators import kite_corpus, lower_bound_graph, nested_triangles
from .graph import GraphError, is_three_connected
from .nonredundant import (MatchingError, build_aux_graph, build_F, check_lemma3,
                           compute_assignment, has_separating_t)
from .ortho import ComplexityError, min_complexity
from .pipeline import PipelineConfig, run_pipeline
from .render import to_svg
from .surgery import SurgeryError, apply_all
from .verify import verify

log = logging.getLogger("opvr")


class PropertyViolation(RuntimeError):
    def __init__(self, message: str, payload: dict | None = None) -> None:
        super().__init__(message)
        self.payload = payload or {}


def _emit(obj) -> None:
    json.dump(obj, sys.stdout, indent=1, sort_keys=True)
    sys.stdout.write("\n")


def _write(path, obj) -> None:
    if path:
        Path(path).write_text(json.dumps(obj, indent=1, sort_keys=True) + "\n")


def _load(path):
    return gmod.load(path)


# -- subcommands -------------------------------------------------------------


def cmd_validate(a) -> dict:
    g = _load(a.inp)
    return {"valid": True, "vertices": len(g.vertices), "edges": len(g.edges),
            "crossings": len(g.crossings), "faces": len(g.faces),
            "three_connected": len(g.vertices) >= 4 and is_three_connected(g)}


def cmd_detect(a) -> dict:
    g = _load(a.inp)
    configs = detect_all(g)
    kinds = {k: sum(c.kind == k for c in configs) for k in ("B", "T", "W")}
    out = {"configs": len(configs), **kinds, "list": report_json(configs)}
    if a.properties:
        rep = check_properties(g, configs)
        out["properties"] = rep.to_json()
        if not rep.passed:
            _write(a.out, out)
            raise PropertyViolation("structural property violated", out["properties"])
    _write(a.out, out)
    return {k: v for k, v in out.items() if k != "list"}


def cmd_nonredundant(a) -> dict:
    g = _load(a.inp)
    configs = detect_all(g)
    F = build_F(g, configs)
    aux = build_aux_graph(g, F)
    bound = check_lemma3(F, aux, has_separating_t(g, configs))
    out = {**F.summary(), "entries": [e.name for e in F.entries],
           "aux": {"n": aux.n, "m": aux.m, "shared": aux.shared, "faces": aux.faces},
           "bound": bound.to_json()}
    _write(a.out, out)
    if not bound.holds or not bound.aux_ok:
        raise PropertyViolation(f"counting bound violated: {bound.to_json()}")
    return {k: v for k, v in out.items() if k != "entries"}


def cmd_match(a) -> dict:
    g = _load(a.inp)
    F = build_F(g, detect_all(g))
    A = compute_assignment(F)
    out = A.to_json()
    _write(a.out, out)
    return {"F": len(F), "max_load": A.max_load, "load_histogram": out["load_histogram"]}


def cmd_subdivide(a) -> dict:
    g = _load(a.inp)
    F = build_F(g, detect_all(g))
    res = apply_all(g, compute_assignment(F))
    if a.out:
        gmod.dump(res.graph, a.out)
    _write(a.report, res.log_json())
    return {"subdivisions": len(res.steps), "absorbed": len(res.absorbed),
            "vertices": len(res.graph.vertices), "configs_after": 0}


def _generate(family: str, param: str, seed: int):
    if family == "nested":
        return nested_triangles(int(param)).graph
    if family == "lowerbound":
        return lower_bound_graph(int(param), relaxed=True).graph
    if family == "kite":
        parts = [int(x) for x in param.split(",")]
        n, kites, lenses, hexagons = (parts + [0, 0, 0])[:4]
        return kite_corpus(n, seed, kites=kites, lenses=lenses, hexagons=hexagons)[0]
    raise ValueError(f"unknown family {family!r}")


def cmd_generate(a) -> dict:
    g = _generate(a.family, a.param, a.seed)
    if a.out:
        gmod.dump(g, a.out)
    return {"family": a.family, "param": a.param, "seed": a.seed, "vertices": len(g.vertices),
            "edges": len(g.edges), "crossings": len(g.crossings)}


def cmd_draw(a) -> dict:
    g = _load(a.inp)
    if g.edges:
        k, rep = min_complexity(g, a.max_k, a.try_all_outer_faces)
    else:
        k, rep = 0, None
    d = compact(g, rep)
    _write(a.out, d.to_json())
    if a.svg:
        Path(a.svg).write_text(to_svg(d))
    out = {"k*": k, "grid": list(d.grid), "polygons": len(d.polygons)}
    if a.report:
        r = verify(g, d)
        _write(a.report, r.to_json())
        out["verified"] = r.ok
        if not r.ok:
            raise PropertyViolation("drawing failed verification")
    return out


def cmd_verify(a) -> dict:
    g = _load(a.graph)
    d = OpvrDrawing.from_json(json.loads(Path(a.drawing).read_text()))
    r = verify(g, d)
    _write(a.report, r.to_json())
    if not r.ok:
        raise PropertyViolation("drawing failed verification", r.to_json())
    return r.to_json()


def cmd_pipeline(a) -> dict:
    g = _load(a.inp)
    run = run_pipeline(g, PipelineConfig(max_k=a.max_k, try_all_outer_faces=a.try_all_outer_faces))
    if a.out:
        out = Path(a.out)
        out.mkdir(parents=True, exist_ok=True)
        _write(out / "drawing.json", run.drawing.to_json())
        _write(out / "assignment.json", run.assignment.to_json())
        if run.surgery:
            _write(out / "surgery.json", run.surgery.log_json())
            gmod.dump(run.surgery.graph, out / "subdivided.json")
        if a.svg:
            (out / "drawing.svg").write_text(to_svg(run.drawing))
    summary = run.summary()
    if a.report:
        _write(a.report, summary)
    if not run.verified:
        raise PropertyViolation("pipeline output failed verification", summary)
    return summary


def _sweep_one(job) -> dict:
    family, param, seed = job
    g = _generate(family, param, seed)
    run = run_pipeline(g)
    s = run.summary()
    row = {"family": family, "param": param, "seed": seed, "F": s["F"], "P": s["P"],
           "k*": s["k*"], "verified": s["verified"], "grid_ratio": s["grid_ratio"]}
    if family == "lowerbound":
        row["4np-8"] = 4 * int(param) - 8
    return row


def cmd_sweep(a) -> dict:
    params = a.np.split(",") if a.np else a.param.split(";")
    jobs = [(a.family, p, a.seed) for p in params]
    if a.jobs > 1:
        with ProcessPoolExecutor(a.jobs) as ex:
            rows = list(ex.map(_sweep_one, jobs))
    else:
        rows = [_sweep_one(j) for j in jobs]
    _write(a.out, rows)
    if not all(r["verified"] for r in rows):
        raise PropertyViolation("a sweep instance failed verification", {"rows": rows})
    return {"rows": rows}


# -- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="opvr", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        sp.set_defaults(fn=fn)
        return sp

    for name, fn, h in (("validate", cmd_validate, "check a graph document"),
                        ("detect", cmd_detect, "list forbidden configurations"),
                        ("nonredundant", cmd_nonredundant, "build F and check the counting bound"),
                        ("match", cmd_match, "assign F to poles, at most five per pole"),
                        ("subdivide", cmd_subdivide, "apply the subdivision surgery")):
        sp = add(name, fn, h)
        sp.add_argument("--in", dest="inp", required=True)
        sp.add_argument("--out")
        if name == "detect":
            sp.add_argument("--properties", action="store_true", help="also run the structural property checks")
        if name == "subdivide":
            sp.add_argument("--report")

    sp = add("generate", cmd_generate, "write a generated graph")
    sp.add_argument("--family", choices=("nested", "lowerbound", "kite"), required=True)
    sp.add_argument("--param", required=True, help="i, n_p, or n[,kites,lenses,hexagons]")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--out")

    for name, fn, h in (("draw", cmd_draw, "minimum-complexity OPVR"),
                        ("pipeline", cmd_pipeline, "all stages with verification")):
        sp = add(name, fn, h)
        sp.add_argument("--in", dest="inp", required=True)
        sp.add_argument("--out")
        sp.add_argument("--svg", nargs="?", const=True, default=None)
        sp.add_argument("--max-k", type=int, default=None)
        sp.add_argument("--report")
        sp.add_argument("--try-all-outer-faces", action="store_true")

    sp = add("verify", cmd_verify, "check a drawing against its graph")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--drawing", required=True)
    sp.add_argument("--report")

    sp = add("sweep", cmd_sweep, "batch pipeline over a family")
    sp.add_argument("--family", choices=("nested", "lowerbound", "kite"), required=True)
    sp.add_argument("--np", help="comma-separated n_p values (lowerbound)")
    sp.add_argument("--param", default="", help="semicolon-separated params")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--out")
    return p


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=os.environ.get("OPVR_LOG", "WARNING").upper(),
                        format="%(levelname)s %(name)s: %(message)s")
    args = build_parser().parse_args(argv)
    if getattr(args, "svg", None) is True:
        args.svg = "drawing.svg" if args.command == "draw" else True
    try:
        out = args.fn(args)
    except (GraphError, ValueError, KeyError, FileNotFoundError, json.JSONDecodeError) as e:
        log.error("%s", e)
        _emit({"error": str(e), "kind": "invalid input"})
        return 1
    except (MatchingError, SurgeryError, ComplexityError, CompactionError, PropertyViolation) as e:
        log.error("%s", e)
        _emit({"error": str(e), "kind": "property violation", **getattr(e, "payload", {})})
        return 2
    _emit(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
