"""End-to-end run: detect, reduce, match, subdivide, draw, verify."""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .compact import OpvrDrawing, compact
from .configs import ForbiddenConfig, detect_all
from .graph import OnePlaneGraph, is_three_connected
from .nonredundant import (BoundReport, NonRedundantSet, PoleAssignment, build_aux_graph,
                           build_F, check_lemma3, compute_assignment, has_separating_t)
from .ortho import OrthoRep, expand, feasible, min_complexity
from .surgery import SurgeryResult, apply_all
from .verify import BoundaryAudit, VerificationReport, boundary_audit, verify


@dataclass
class PipelineConfig:
    max_k: int | None = None
    surgery: bool = True
    audit: bool = True
    try_all_outer_faces: bool = False


@dataclass
class PipelineRun:
    graph: OnePlaneGraph
    configs: list[ForbiddenConfig]
    F: NonRedundantSet
    bound: BoundReport
    assignment: PoleAssignment
    surgery: SurgeryResult | None
    surgery_k0: bool | None
    k_star: int
    rep: OrthoRep
    drawing: OpvrDrawing
    report: VerificationReport
    audits: list[BoundaryAudit] | None
    timing: dict[str, float] = field(default_factory=dict)

    @property
    def audits_ok(self) -> bool | None:
        return None if self.audits is None else all(a.holds for a in self.audits)

    @property
    def verified(self) -> bool:
        return self.report.ok and self.audits_ok is not False

    def summary(self) -> dict:
        g = self.graph
        return {
            "n": len(g.vertices), "m": len(g.edges), "crossings": len(g.crossings),
            "configs": len(self.configs),
            **self.F.summary(),
            "counting_bound": self.bound.to_json(),
            "max_load": self.assignment.max_load,
            "subdivisions": len(self.surgery.steps) if self.surgery else None,
            "surgery_k0": self.surgery_k0,
            "k*": self.k_star,
            "grid": list(self.drawing.grid),
            "grid_ratio": round(self.report.grid_ratio, 3),
            "verified": self.verified,
            "boundary_audits": self.audits_ok,
            "timing": {k: round(v, 3) for k, v in self.timing.items()},
        }


def run_pipeline(g: OnePlaneGraph, cfg: PipelineConfig = PipelineConfig()) -> PipelineRun:
    timing = {}
    t0 = time.perf_counter()

    def lap(name):
        nonlocal t0
        now = time.perf_counter()
        timing[name] = now - t0
        t0 = now

    configs = detect_all(g)
    lap("detect")
    F = build_F(g, configs)
    aux = build_aux_graph(g, F)
    bound = check_lemma3(F, aux, has_separating_t(g, configs))
    assignment = compute_assignment(F)
    lap("match")
    res = k0 = None
    if cfg.surgery and len(g.vertices) >= 4 and is_three_connected(g):
        res = apply_all(g, assignment)
        k0 = feasible(expand(res.graph), 0, optimize=False) is not None
    lap("surgery")
    k, rep = min_complexity(g, cfg.max_k, cfg.try_all_outer_faces) if g.edges else (0, None)
    lap("draw")
    drawing = compact(g, rep)
    lap("compact")
    report = verify(g, drawing)
    audits = None
    if cfg.audit and report.ok:
        audits = [boundary_audit(g, drawing, c) for c in configs]
    lap("verify")
    return PipelineRun(g, configs, F, bound, assignment, res, k0, k, rep, drawing, report,
                       audits, timing)
