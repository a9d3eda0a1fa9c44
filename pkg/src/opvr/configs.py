"""Detection of B-, T- and W-configurations and their structural properties."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .graph import Dart, GraphError, OnePlaneGraph

KINDS = ("B", "T", "W")


@dataclass(frozen=True)
class ForbiddenConfig:
    """A forbidden configuration found in a graph.

    ``boundary`` is the closed dart walk of the external boundary,
    ``interior_faces`` the faces on its inner side (the side away from the
    outer face) and ``witnesses`` the non-pole endpoints required inside.
    """

    kind: str
    poles: tuple[str, ...]
    crossings: tuple[str, ...]
    boundary: tuple[Dart, ...]
    interior_faces: frozenset[int] = field(repr=False)
    witnesses: tuple[str, ...] = ()

    @property
    def key(self) -> tuple:
        return (self.kind, tuple(sorted(self.poles)), tuple(sorted(self.crossings)))

    @property
    def name(self) -> str:
        k, poles, cr = self.key
        return f"{k.lower()}({','.join(poles)})[{','.join(cr)}]"

    def pole_pair_at(self, dummy: str) -> tuple[str, str]:
        """The two poles joined through ``dummy`` on the boundary."""
        walk = self.boundary
        for i, (a, b) in enumerate(walk):
            if b == dummy:
                return (a, walk[(i + 1) % len(walk)][1])
        raise KeyError(dummy)

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "poles": sorted(self.poles),
            "crossings": sorted(self.crossings),
            "interior_face_count": len(self.interior_faces),
        }


# ---------------------------------------------------------------------------
# Region splitting
# ---------------------------------------------------------------------------


def walk_from_nodes(nodes: Sequence[str]) -> tuple[Dart, ...]:
    n = len(nodes)
    return tuple((nodes[i], nodes[(i + 1) % n]) for i in range(n))


def _check_walk(g: OnePlaneGraph, curve: Sequence[Dart]) -> None:
    if len(curve) < 2:
        raise GraphError("curve must have at least two darts")
    heads = [d[1] for d in curve]
    if len(set(heads)) != len(heads):
        raise GraphError("non-simple walk: a node repeats")
    for i, (a, b) in enumerate(curve):
        if b not in g.rotation.get(a, ()):
            raise GraphError(f"curve dart {(a, b)} is not in the planarization")
        if curve[(i + 1) % len(curve)][0] != b:
            raise GraphError("curve darts are not consecutive")


def _sides(g: OnePlaneGraph, curve: Sequence[Dart]) -> tuple[set[int], bool]:
    """Flood the dual from both sides of the curve at once.

    Returns the faces of whichever side finished first and whether that side
    is the inner one (the side not holding the outer face).
    """
    blocked = set(curve) | {(b, a) for a, b in curve}
    fo = g.face_of
    dual = g.dual_adjacency
    left = {fo[d] for d in curve}
    right = {fo[(b, a)] for a, b in curve}
    if left & right:
        raise GraphError("curve does not separate the plane")
    sides = [left, right]
    frontiers = [list(left), list(right)]
    while True:
        for s in (0, 1):
            if not frontiers[s]:
                side = sides[s]
                inner = g.outer_face not in side
                return side, inner
            nxt = []
            for f in frontiers[s]:
                for h, d in dual[f]:
                    if d in blocked or h in sides[s]:
                        continue
                    if h in sides[1 - s]:
                        raise GraphError("curve does not separate the plane")
                    sides[s].add(h)
                    nxt.append(h)
            frontiers[s] = nxt


class _Region:
    __slots__ = ("faces", "is_inside", "total")

    def __init__(self, faces: set[int], is_inside: bool, total: int):
        self.faces = faces
        self.is_inside = is_inside
        self.total = total

    def contains_face(self, f: int) -> bool:
        return (f in self.faces) == self.is_inside

    def contains_node(self, g: OnePlaneGraph, n: str) -> bool:
        return all(self.contains_face(f) for f in g.node_faces[n])

    def inside_set(self, g: OnePlaneGraph) -> frozenset[int]:
        if self.is_inside:
            return frozenset(self.faces)
        return frozenset(f.id for f in g.faces if f.id not in self.faces)


def _region(g: OnePlaneGraph, curve: Sequence[Dart]) -> _Region:
    side, inner = _sides(g, curve)
    return _Region(side, inner, len(g.faces))


def region_split(g: OnePlaneGraph, curve: Sequence[Dart]) -> tuple[frozenset[int], frozenset[int]]:
    """Split the faces by a simple closed walk into (inside, outside).

    "Outside" is the side holding the outer face.
    """
    curve = tuple(curve)
    _check_walk(g, curve)
    inside = _region(g, curve).inside_set(g)
    outside = frozenset(f.id for f in g.faces) - inside
    return inside, outside


def nodes_inside(g: OnePlaneGraph, inside: frozenset[int]) -> list[str]:
    """Planarization nodes whose incident faces all lie in ``inside``."""
    return [n for n in g.nodes if g.node_faces[n] <= inside]


# ---------------------------------------------------------------------------
# Detection
# ---------------------------------------------------------------------------


def _crossing_ends(g: OnePlaneGraph, p: str) -> tuple[tuple[str, str], tuple[str, str]]:
    e1, e2 = g.crossings[p]
    return g.edges[e1], g.edges[e2]


def _pole_pairs(g: OnePlaneGraph, p: str):
    """(pole s, pole t, witness opposite s, witness opposite t) per choice."""
    (a, b), (c, d) = _crossing_ends(g, p)
    for s, sw in ((a, b), (b, a)):
        for t, tw in ((c, d), (d, c)):
            yield s, t, sw, tw


def _pole_edge_path(g: OnePlaneGraph, z: str, u: str) -> list[str] | None:
    """Planarization nodes from z to u along edge (z,u), excluding z."""
    e = g.edge_between(z, u)
    if e is None:
        return None
    q = g.edge_crossing.get(e)
    return [u] if q is None else [q, u]


def detect_all(g: OnePlaneGraph) -> list[ForbiddenConfig]:
    """Every B-, T- and W-configuration of ``g`` in canonical order."""
    found: dict[tuple, ForbiddenConfig] = {}
    pair_index: dict[frozenset, list[tuple[str, str, str, str, str]]] = defaultdict(list)
    for p in g.dummies:
        for s, t, sw, tw in _pole_pairs(g, p):
            pair_index[frozenset((s, t))].append((p, s, t, sw, tw))

    # B: a crossing plus the edge joining one end of each crossing edge
    for p in g.dummies:
        for u, z, v, w in _pole_pairs(g, p):
            rest = _pole_edge_path(g, z, u)
            if rest is None:
                continue
            nodes = [u, p, z] + rest[:-1]
            cfg = _try(g, "B", (u, z), (p,), nodes, (v, w))
            if cfg is not None:
                found.setdefault(cfg.key, cfg)

    # W: two crossings joining the same pair of poles
    for pair, items in pair_index.items():
        if len(items) < 2:
            continue
        for (p, s1, t1, s1w, t1w), (q, s2, t2, s2w, t2w) in combinations(items, 2):
            if p == q:
                continue
            u, z = s1, t1
            wit = (s1w, t1w, s2w, t2w)
            cfg = _try(g, "W", (u, z), (p, q), [u, p, z, q], wit)
            if cfg is not None:
                found.setdefault(cfg.key, cfg)

    # T: three crossings whose pole pairs form a triangle
    by_pole: dict[str, list[tuple[str, str, str, str]]] = defaultdict(list)
    for p in g.dummies:
        for s, t, sw, tw in _pole_pairs(g, p):
            by_pole[s].append((p, t, sw, tw))
            by_pole[t].append((p, s, tw, sw))
    seen_t: set = set()
    for u in sorted(by_pole):
        for (p, z, pw_u, pw_z) in by_pole[u]:
            for (q, x, qw_u, qw_x) in by_pole[u]:
                if q == p or x == z:
                    continue
                for (r, z2, rw_x, rw_z) in by_pole[x]:
                    if z2 != z or r in (p, q):
                        continue
                    tag = frozenset(((p, frozenset((u, z))), (q, frozenset((u, x))),
                                     (r, frozenset((x, z)))))
                    if tag in seen_t:
                        continue
                    seen_t.add(tag)
                    wit = (pw_u, pw_z, qw_u, qw_x, rw_x, rw_z)
                    cfg = _try(g, "T", (u, x, z), (p, q, r), [u, p, z, r, x, q], wit)
                    if cfg is not None:
                        found.setdefault(cfg.key, cfg)
    return [found[k] for k in sorted(found)]


def _try(g, kind, poles, crossings, nodes, witnesses) -> ForbiddenConfig | None:
    if len(set(nodes)) != len(nodes):
        return None
    curve = walk_from_nodes(nodes)
    try:
        region = _region(g, curve)
    except GraphError:
        return None
    if not all(region.contains_node(g, w) for w in witnesses):
        return None
    return ForbiddenConfig(kind, tuple(poles), tuple(crossings), curve,
                           region.inside_set(g), tuple(witnesses))


def dependent(f1: ForbiddenConfig, f2: ForbiddenConfig) -> bool:
    return bool(set(f1.crossings) & set(f2.crossings))


def all_poles(configs: Iterable[ForbiddenConfig]) -> frozenset[str]:
    return frozenset(p for c in configs for p in c.poles)


def is_separating_t(g: OnePlaneGraph, t: ForbiddenConfig, poles: Iterable[str]) -> bool:
    if t.kind != "T":
        raise ValueError("is_separating_t expects a T-configuration")
    own = set(t.poles)
    return any(v not in own and g.node_faces[v] <= t.interior_faces for v in poles)


# ---------------------------------------------------------------------------
# Structural properties on 3-connected graphs
# ---------------------------------------------------------------------------


@dataclass
class PropertyReport:
    checked: dict[str, int] = field(default_factory=dict)
    violations: list[tuple[str, str]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {"passed": self.passed, "checked": dict(self.checked),
                "violations": [list(v) for v in self.violations]}


def separating_curves(g: OnePlaneGraph):
    """Yield (u, p, z, q) for every separating curve C(u,p,z,q)."""
    pair_index: dict[frozenset, list[str]] = defaultdict(list)
    for p in g.dummies:
        for s, t, _, _ in _pole_pairs(g, p):
            pair_index[frozenset((s, t))].append(p)
    for pair, ps in sorted(pair_index.items(), key=lambda kv: sorted(kv[0])):
        u, z = sorted(pair)
        for p, q in combinations(sorted(set(ps)), 2):
            yield u, p, z, q


def check_properties(g: OnePlaneGraph, configs: Sequence[ForbiddenConfig] | None = None) -> PropertyReport:
    """Audit the structural properties of forbidden configurations.

    P1: no three pairwise independent configurations share a pole pair.
    P2: at most one W, and every vertex but its poles lies inside it.
    P3: no configuration independent of the W uses both W poles.
    P4: two B-configurations share both poles only when they form the W.
    P5: dependent T-configurations share exactly one crossing.
    SC: separating curves never split the remaining vertices.
    """
    if configs is None:
        configs = detect_all(g)
    rep = PropertyReport()
    bs = [c for c in configs if c.kind == "B"]
    ts = [c for c in configs if c.kind == "T"]
    ws = [c for c in configs if c.kind == "W"]

    by_pair: dict[frozenset, list[ForbiddenConfig]] = defaultdict(list)
    for c in configs:
        for a, b in combinations(sorted(set(c.poles)), 2):
            by_pair[frozenset((a, b))].append(c)
    n1 = 0
    for pair, cs in by_pair.items():
        for trio in combinations(cs, 3):
            n1 += 1
            if not any(dependent(x, y) for x, y in combinations(trio, 2)):
                rep.violations.append(("P1", " ".join(c.name for c in trio)))
    rep.checked["P1"] = n1

    rep.checked["P2"] = len(ws)
    if len(ws) > 1:
        rep.violations.append(("P2", "more than one W-configuration: " + " ".join(w.name for w in ws)))
    for w in ws:
        for v in g.vertices:
            if v in w.poles:
                continue
            if not g.node_faces[v] <= w.interior_faces:
                rep.violations.append(("P2", f"{v} outside {w.name}"))

    n3 = 0
    for w in ws:
        wp = set(w.poles)
        for c in configs:
            if c is w or c.key == w.key:
                continue
            n3 += 1
            if wp <= set(c.poles) and not dependent(c, w):
                rep.violations.append(("P3", f"{c.name} independent of {w.name}"))
    rep.checked["P3"] = n3

    n4 = 0
    w_cross = [frozenset(w.crossings) for w in ws]
    for b1, b2 in combinations(bs, 2):
        n4 += 1
        if set(b1.poles) == set(b2.poles):
            if frozenset(b1.crossings + b2.crossings) not in w_cross:
                rep.violations.append(("P4", f"{b1.name} {b2.name}"))
    rep.checked["P4"] = n4

    n5 = 0
    for t1, t2 in combinations(ts, 2):
        shared = set(t1.crossings) & set(t2.crossings)
        if shared:
            n5 += 1
            if len(shared) != 1:
                rep.violations.append(("P5", f"{t1.name} {t2.name} share {sorted(shared)}"))
    rep.checked["P5"] = n5

    nc = 0
    for u, p, z, q in separating_curves(g):
        nc += 1
        region = _region(g, walk_from_nodes([u, p, z, q]))
        sides = {region.contains_node(g, v) for v in g.vertices if v not in (u, z)}
        if len(sides) > 1:
            rep.violations.append(("SC", f"C({u},{p},{z},{q}) splits the vertices"))
    rep.checked["SC"] = nc
    return rep


def report_json(configs: Sequence[ForbiddenConfig]) -> list[dict]:
    return [c.to_json() for c in configs]
