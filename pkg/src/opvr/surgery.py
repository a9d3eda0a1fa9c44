"""Subdivision surgery that destroys every configuration of a non-redundant set."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .builder import EmbeddingBuilder
from .configs import detect_all
from .graph import Dart, GraphError, OnePlaneGraph, is_three_connected
from .nonredundant import MAX_LOAD, Entry, PoleAssignment


class SurgeryError(RuntimeError):
    pass


@dataclass(frozen=True)
class SurgeryStep:
    entry: str
    pole: str  # u, owner of the subdivided fragment
    crossing: str  # k
    edge_u: str  # (u, v), the edge that gets subdivided
    edge_z: str  # (w, z)
    other_pole: str  # z
    far_end: str  # w
    vertex: str = ""  # s, filled in when applied

    def to_json(self) -> dict:
        return {"entry": self.entry, "pole": self.pole, "crossing": self.crossing,
                "subdivided_edge": self.edge_u, "crossing_edge": self.edge_z,
                "other_pole": self.other_pole, "far_end": self.far_end, "vertex": self.vertex}


def _candidates(entry: Entry, u: str) -> list[str]:
    cfg = entry.config
    if entry.copy_of is not None:
        return [entry.copy_of]
    out = []
    for k in sorted(cfg.crossings):
        a, c = cfg.pole_pair_at(k)
        if u in (a, c):
            out.append(k)
    return out


def plan_step(g: OnePlaneGraph | EmbeddingBuilder, entry: Entry, pole: str,
              taken: set[Dart] = frozenset()) -> SurgeryStep | None:
    """Step for ``entry`` matched to ``pole``.

    Uses the lowest qualifying crossing whose fragments toward both poles
    are still intact (not in ``taken``).  Returns None if an earlier step
    already subdivided every candidate, which destroyed the entry.
    """
    if pole not in entry.poles:
        raise SurgeryError(f"{entry.name} has no pole {pole}")
    cands = _candidates(entry, pole)
    if not cands:
        raise SurgeryError(f"no crossing of {entry.name} joins {pole} to another pole")
    for k in cands:
        a, c = entry.config.pole_pair_at(k)
        z = c if a == pole else a
        if (k, pole) in taken or (k, z) in taken:
            continue
        e1, e2 = g.crossings[k]
        edge_u = e1 if pole in g.edges[e1] else e2
        edge_z = e2 if edge_u == e1 else e1
        if pole not in g.edges[edge_u] or z not in g.edges[edge_z]:
            raise SurgeryError(f"crossing {k} does not join {pole} and {z}")
        w = next(x for x in g.edges[edge_z] if x != z)
        return SurgeryStep(entry.name, pole, k, edge_u, edge_z, z, w)
    return None


def _chord_darts(b: EmbeddingBuilder, s: str, k: str, x: str) -> tuple[Dart, Dart]:
    """Darts entering ``s`` and ``x`` in the face holding the corner s-k-x at k."""
    rot = b.rot[k]
    i = rot.index(s)
    if rot[(i - 1) % len(rot)] == x:
        walk = b.face_walk((s, k))  # ... (?, s), (s, k), (k, x) ...
        j = walk.index((s, k))
        return walk[j - 1], (k, x)
    if rot[(i + 1) % len(rot)] == x:
        walk = b.face_walk((x, k))  # ... (?, x), (x, k), (k, s) ...
        j = walk.index((x, k))
        return (k, s), walk[j - 1]
    raise SurgeryError(f"{s} and {x} are not consecutive around {k}")


def apply_step(b: EmbeddingBuilder, step: SurgeryStep) -> SurgeryStep:
    u, k, z, w = step.pole, step.crossing, step.other_pole, step.far_end
    if k not in b.rot[u] or u not in b.rot[k]:
        raise SurgeryError(f"fragment ({k},{u}) is no longer intact")
    s = b.fresh("s")
    b.add_vertex(s)
    b.replace_neighbor(u, k, s)
    b.replace_neighbor(k, u, s)
    b.rot[s] = [u, k]
    if b.outer == (u, k):
        b.outer = (u, s)
    elif b.outer == (k, u):
        b.outer = (k, s)
    # (u, v) becomes the uncrossed (u, s) and the crossed (s, v)
    _, v = b.edges[step.edge_u] if b.edges[step.edge_u][0] == u else b.edges[step.edge_u][::-1]
    b.edges[step.edge_u] = (s, v)
    b.edges[f"{step.edge_u}/{s}"] = (u, s)
    for x in (z, w):
        into_s, into_x = _chord_darts(b, s, k, x)
        b.add_edge_in_face(f"{s}-{x}", s, x, into_s, into_x)
    return SurgeryStep(step.entry, u, k, step.edge_u, step.edge_z, z, w, s)


@dataclass
class SurgeryResult:
    graph: OnePlaneGraph
    steps: list[SurgeryStep]
    absorbed: list[str]

    def subdivision_neighbours(self) -> Counter:
        return Counter(st.pole for st in self.steps)

    def log_json(self) -> dict:
        return {"steps": [s.to_json() for s in self.steps], "absorbed": list(self.absorbed)}


def apply_all(g: OnePlaneGraph, assignment: PoleAssignment, check: bool = True) -> SurgeryResult:
    """Apply one subdivision per assigned entry and check the postconditions.

    An entry is absorbed (no step) when a previous step already subdivided
    every fragment it could use; that happens only for T-configurations that
    share a crossing pair with an earlier entry.
    """
    b = EmbeddingBuilder.from_graph(g)
    steps, absorbed = [], []
    taken: set[Dart] = set()
    order = sorted(assignment.pairs, key=lambda ep: (ep[0].kind != "B", ep[0].name, ep[1]))
    for entry, pole in order:
        step = plan_step(b, entry, pole, taken)
        if step is None:
            absorbed.append(entry.name)
            continue
        steps.append(apply_step(b, step))
        taken.add((step.crossing, pole))
    out = b.build()
    res = SurgeryResult(out, steps, absorbed)
    if check:
        _postconditions(g, res)
    return res


def _postconditions(g: OnePlaneGraph, res: SurgeryResult) -> None:
    left = detect_all(res.graph)
    if left:
        raise SurgeryError("configurations survive surgery: " + ", ".join(c.name for c in left[:5]))
    if len(g.vertices) >= 4 and is_three_connected(g) and not is_three_connected(res.graph):
        raise SurgeryError("surgery broke 3-connectivity")
    over = {p: n for p, n in res.subdivision_neighbours().items() if n > MAX_LOAD}
    if over:
        raise SurgeryError(f"poles with more than {MAX_LOAD} subdivision neighbours: {over}")
    for st in res.steps:
        if len(res.graph.rotation[st.vertex]) != 4:
            raise GraphError(f"subdivision vertex {st.vertex} does not have degree 4")
