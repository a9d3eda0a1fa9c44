"""The mixed experiment corpus: random kite/lens/hexagon instances plus the
structured families and the 3-connected hand fixtures."""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import fixtures
from .generators import kite_corpus, lower_bound_graph, nested_triangles
from .graph import OnePlaneGraph

MAX_N = 500


@dataclass(frozen=True)
class CorpusItem:
    name: str
    family: str
    graph: OnePlaneGraph


def random_instances(count: int, seed: int, max_n: int = MAX_N) -> list[CorpusItem]:
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        i = len(out)
        n = int(round(2 ** rng.uniform(3, 8.4)))  # 8 .. ~340 base vertices
        kites = rng.randint(0, max(1, n // 6))
        lenses = rng.randint(0, n // 25)
        hexagons = rng.randint(0, n // 40)
        if rng.random() < 0.15:
            lenses = hexagons = 0
        g = kite_corpus(max(n, 4), rng.randrange(1 << 30), kites=kites, lenses=lenses,
                        hexagons=hexagons)[0]
        if len(g.vertices) > max_n:
            continue
        out.append(CorpusItem(f"kite{i:03d}_n{n}_k{kites}_l{lenses}_h{hexagons}", "kite", g))
    return out


def structured_instances() -> list[CorpusItem]:
    out = [CorpusItem(f"nested{i}", "nested", nested_triangles(i).graph) for i in range(2, 9)]
    for n_p in (3, 6, 9, 12, 15):
        out.append(CorpusItem(f"lowerbound{n_p}", "lowerbound",
                              lower_bound_graph(n_p, relaxed=True).graph))
    for name in ("k4_plane", "k4_crossed", "triangle_t", "w_pair", "w_pair_with_b"):
        out.append(CorpusItem(name, "fixture", fixtures.ALL[name]()))
    return out


def default_corpus(count: int = 190, seed: int = 2024) -> list[CorpusItem]:
    return structured_instances() + random_instances(count, seed)


def evaluate(item: CorpusItem) -> dict:
    """One corpus row: everything the acceptance criteria look at."""
    import time

    from .configs import check_properties
    from .graph import is_three_connected
    from .nonredundant import hall_check_bruteforce
    from .pipeline import run_pipeline

    g = item.graph
    t = time.perf_counter()
    run = run_pipeline(g)
    three = len(g.vertices) >= 4 and is_three_connected(g)
    props = check_properties(g, run.configs) if three else None
    F = run.F
    hall = hall_check_bruteforce(F) if 0 < len(F) <= 20 else None
    return {
        "name": item.name,
        "family": item.family,
        "n": len(g.vertices),
        "n_planarized": len(g.vertices) + len(g.crossings),
        "three_connected": three,
        "configs": len(run.configs),
        "F": len(F), "P": len(F.poles), "beta": F.beta, "tau": F.tau, "omega": F.omega,
        "bound_applicable": run.bound.applicable,
        "bound_holds": run.bound.holds,
        "bound_equality": run.bound.equality,
        "characterization_ok": run.bound.characterization_ok,
        "aux_ok": run.bound.aux_ok,
        "max_load": run.assignment.max_load,
        "matched": len(run.assignment.pairs),
        "hall": hall,
        "surgery_ok": run.surgery is not None,
        "subdivisions": len(run.surgery.steps) if run.surgery else None,
        "surgery_k0": run.surgery_k0,
        "k_star": run.k_star,
        "verified": run.report.ok,
        "violations": run.report.violations[:3],
        "audits_ok": run.audits_ok,
        "audit_shape_ok": all(_audit_shape(a) for a in run.audits or ()),
        "audits": len(run.audits or ()),
        "grid": list(run.drawing.grid),
        "grid_ratio": run.report.grid_ratio,
        "properties_ok": props.passed if props else None,
        "seconds": time.perf_counter() - t,
    }


def _audit_shape(a) -> bool:
    kind = a.config[0].upper()
    if kind == "B":
        return a.crossing_turns == 1 and a.attachments >= 4
    if kind == "T":
        return a.crossing_turns == 3 and a.attachments >= 6
    return a.crossing_turns == 2
