"""Graph families: nested triangles, the lower-bound family and a random corpus."""

from __future__ import annotations

import math
import random
import warnings
from dataclasses import dataclass, field

import numpy as np

from .builder import EmbeddingBuilder, embed_from_coordinates, saturate_faces
from .graph import GraphError, OnePlaneGraph, is_three_connected

Point = tuple[float, float]

# gadget shape, as fractions of a face: heights measured from a side towards
# the opposite corner
_LENS_APEX = 0.12
_LENS_WITNESS = (0.42, 0.58, 0.05)
_HEX_APEX = 0.2
_HEX_REACH = 0.15


@dataclass
class NestedTriangleGraph:
    level: int
    graph: OnePlaneGraph
    pos: dict[str, Point]
    t_faces: list[tuple[str, str, str]]
    nt_faces: list[tuple[str, str, str]]
    outer_face: tuple[str, str, str]


@dataclass
class LowerBoundGraph:
    n_poles: int
    graph: OnePlaneGraph
    poles: tuple[str, ...]
    planted: list[tuple[str, tuple[str, ...], tuple[str, ...]]] = field(default_factory=list)
    warning: str | None = None

    @property
    def expected_counts(self) -> tuple[int, int]:
        return 3 * self.n_poles - 6, self.n_poles - 2


def _vname(level: int, k: int) -> str:
    return f"s{level}_{k}"


def _nested_coordinates(i: int) -> tuple[list[str], dict[str, tuple[str, str]], dict[str, Point]]:
    vertices, edges, pos = [], {}, {}
    for j in range(1, i + 1):
        r = 3.0 ** j
        for k in range(3):
            ang = math.radians(90 + 120 * k - 60 * (j - 1))
            v = _vname(j, k)
            vertices.append(v)
            pos[v] = (r * math.cos(ang), r * math.sin(ang))
        for k in range(3):
            a, b = _vname(j, k), _vname(j, (k + 1) % 3)
            edges[f"{a}-{b}"] = (a, b)
        if j > 1:
            for k in range(3):
                u = _vname(j - 1, k)
                for kk in (k, (k + 1) % 3):
                    v = _vname(j, kk)
                    edges[f"{u}-{v}"] = (u, v)
    return vertices, edges, pos


def _face_triples(g: OnePlaneGraph) -> tuple[list[tuple[str, str, str]], dict[int, int]]:
    """Two-colour the faces of an Eulerian triangulation; outer face gets colour 1."""
    colour = {g.outer_face: 1}
    stack = [g.outer_face]
    while stack:
        f = stack.pop()
        for h, _ in g.dual_adjacency[f]:
            if h not in colour:
                colour[h] = 1 - colour[f]
                stack.append(h)
            elif colour[h] == colour[f]:
                raise GraphError("face two-colouring failed")
    triples = [tuple(f.nodes) for f in g.faces]
    return triples, colour


def nested_triangles(i: int) -> NestedTriangleGraph:
    """S(i) with a T-face marking: T-faces are edge-disjoint and cover every edge."""
    if i < 1:
        raise ValueError("nested triangle level must be at least 1")
    vertices, edges, pos = _nested_coordinates(i)
    g = embed_from_coordinates(pos, vertices, edges, {}).build()
    triples, colour = _face_triples(g)
    t_faces = [triples[f.id] for f in g.faces if colour[f.id] == 0]
    nt_faces = [triples[f.id] for f in g.faces if colour[f.id] == 1]
    outer = triples[g.outer_face]
    return NestedTriangleGraph(i, g, pos, t_faces, nt_faces, outer)


def validate_marking(s: NestedTriangleGraph) -> None:
    i = s.level
    if len(s.t_faces) != 3 * i - 2:
        raise GraphError(f"S({i}) has {len(s.t_faces)} T-faces, expected {3 * i - 2}")
    seen = set()
    for f in s.t_faces:
        for k in range(3):
            e = frozenset((f[k], f[(k + 1) % 3]))
            if e in seen:
                raise GraphError(f"two T-faces share edge {sorted(e)}")
            seen.add(e)


# ---------------------------------------------------------------------------
# Lower-bound family
# ---------------------------------------------------------------------------


def _lerp(a: Point, b: Point, t: float) -> Point:
    return (a[0] + (b[0] - a[0]) * t, a[1] + (b[1] - a[1]) * t)


def _toward(side_s: Point, side_t: Point, opp: Point, along: float, height: float) -> Point:
    base = _lerp(side_s, side_t, along)
    mid = _lerp(side_s, side_t, 0.5)
    return (base[0] + (opp[0] - mid[0]) * height, base[1] + (opp[1] - mid[1]) * height)


class _Plan:
    """Coordinates plus combinatorial data collected before embedding."""

    def __init__(self, vertices, edges, pos):
        self.vertices = list(vertices)
        self.edges = dict(edges)
        self.pos = dict(pos)
        self.crossings: dict[str, tuple[str, str]] = {}
        self.bends: dict[tuple[str, str], list[Point]] = {}
        self.planted: list[tuple[str, tuple[str, ...], tuple[str, ...]]] = []

    def vertex(self, name, p):
        self.vertices.append(name)
        self.pos[name] = p
        return name

    def edge(self, a, b):
        eid = f"{a}-{b}"
        self.edges[eid] = (a, b)
        return eid

    def cross(self, name, e1, e2, p):
        self.crossings[name] = (e1, e2)
        self.pos[name] = p


def _plant_lens(plan: _Plan, tag: str, s: str, t: str, o: str) -> tuple[str, str]:
    """B-configuration b(s,t) hugging side s-t inside face (s,t,o).

    Returns the witness that a connector should reach and its edge id.
    """
    P = plan.pos
    apex = _toward(P[s], P[t], P[o], 0.5, _LENS_APEX)
    lo, hi, h = _LENS_WITNESS
    v = plan.vertex(f"{tag}v", _toward(P[s], P[t], P[o], hi, h))
    w = plan.vertex(f"{tag}w", _toward(P[s], P[t], P[o], lo, h))
    e1 = plan.edge(s, v)
    e2 = plan.edge(w, t)
    plan.cross(f"{tag}x", e1, e2, apex)
    pole = plan.edges.get(f"{s}-{t}") and f"{s}-{t}" or f"{t}-{s}"
    plan.planted.append(("B", (s, t), (f"{tag}x",)))
    return w, pole


def _plant_hexagon(plan: _Plan, tag: str, a: str, b: str, c: str) -> None:
    """T-configuration t(a,b,c) in the middle of face (a,b,c)."""
    P = plan.pos
    names = []
    for k, (s, t, o) in enumerate(((a, b, c), (b, c, a), (c, a, b))):
        apex = _toward(P[s], P[t], P[o], 0.5, _HEX_APEX)
        ws = plan.vertex(f"{tag}h{k}a", _lerp(apex, P[s], -_HEX_REACH))
        wt = plan.vertex(f"{tag}h{k}b", _lerp(apex, P[t], -_HEX_REACH))
        e1 = plan.edge(s, ws)
        e2 = plan.edge(wt, t)
        plan.cross(f"{tag}hx{k}", e1, e2, apex)
        names.append(f"{tag}hx{k}")
    plan.planted.append(("T", (a, b, c), tuple(names)))


def lower_bound_graph(n_p: int, relaxed: bool = False) -> LowerBoundGraph:
    """G(n_p): one T- and three B-configurations per T-face of S(n_p/3).

    Every NT-face receives a vertex joined, across each side, to a non-pole
    vertex of that side's B-configuration; crossing-free edges are then
    added until no face admits another.
    """
    if n_p % 3 != 0 or n_p < 3:
        raise ValueError("n_p must be a positive multiple of 3")
    note = None
    if n_p <= 8:
        if not relaxed:
            raise ValueError("the complexity lower bound needs n_p > 8 (pass relaxed=True to build anyway)")
        note = "the complexity lower bound needs n_p > 8"
        warnings.warn(note, stacklevel=2)
    i = n_p // 3
    s = nested_triangles(i)
    validate_marking(s)
    vertices, edges, pos = _nested_coordinates(i)
    plan = _Plan(vertices, edges, pos)

    connector_target: dict[frozenset, tuple[str, str, float]] = {}
    for fi, (a, b, c) in enumerate(sorted(s.t_faces)):
        for k, (x, y, o) in enumerate(((a, b, c), (b, c, a), (c, a, b))):
            w, pole_edge = _plant_lens(plan, f"f{fi}l{k}", x, y, o)
            connector_target[frozenset((x, y))] = (w, pole_edge, x)
        _plant_hexagon(plan, f"f{fi}", a, b, c)

    outer = set(s.outer_face)
    R = max(math.hypot(*pos[v]) for v in outer)
    for fi, face in enumerate(sorted(s.nt_faces)):
        is_outer = set(face) == outer
        if is_outer:
            cpos = _outward(pos[face[0]], pos[face[1]], 3.0 * R)
        else:
            cpos = tuple(np.mean([pos[v] for v in face], axis=0))
        cname = plan.vertex(f"c{fi}", cpos)
        for k in range(3):
            x, y = face[k], face[(k + 1) % 3]
            w, pole_edge, lens_s = connector_target[frozenset((x, y))]
            lens_t = y if lens_s == x else x
            q = _toward(pos[lens_s], pos[lens_t], pos[lens_s], _LENS_WITNESS[0], 0.0)
            e = plan.edge(cname, w)
            qn = f"c{fi}q{k}"
            plan.cross(qn, pole_edge, e, q)
            if is_outer:
                # side 0 is reached directly; sides 1 and 2 around their
                # shared corner with side 0
                near = _outward(q, q, 0.3 * R, towards=_outward(pos[x], pos[y], 1.0))
                if k == 0:
                    route = [near]
                else:
                    corner = pos[face[1]] if k == 1 else pos[face[0]]
                    cn = math.hypot(*corner)
                    around = (corner[0] / cn * 2.0 * R, corner[1] / cn * 2.0 * R)
                    route = [around, _outward(pos[x], pos[y], 2.0 * R), near]
                plan.bends[(cname, qn)] = route
    outer_c = next(f"c{fi}" for fi, face in enumerate(sorted(s.nt_faces)) if set(face) == outer)
    b = embed_from_coordinates(plan.pos, plan.vertices, plan.edges, plan.crossings, plan.bends,
                               outer_at=(outer_c, math.atan2(plan.pos[outer_c][1], plan.pos[outer_c][0])))
    saturate_faces(b, prefix="t")
    g = b.build()
    poles = tuple(sorted(v for face in s.t_faces for v in face))
    return LowerBoundGraph(n_p, g, tuple(sorted(set(poles))), plan.planted, note)


def _outward(a: Point, b: Point, dist: float, towards: Point | None = None) -> Point:
    """Point ``dist`` away from the midpoint of a-b, along its outward radial direction."""
    mx, my = (a[0] + b[0]) / 2, (a[1] + b[1]) / 2
    d = towards if towards is not None else (mx, my)
    n = math.hypot(*d)
    return (mx + d[0] / n * dist, my + d[1] / n * dist)


def planted_matches(lb: LowerBoundGraph, detected) -> dict[tuple, object]:
    """Map each planted configuration key to the detected configuration with that key."""
    by_key = {c.key: c for c in detected}
    out = {}
    for kind, poles, crossings in lb.planted:
        key = (kind, tuple(sorted(poles)), tuple(sorted(crossings)))
        out[key] = by_key.get(key)
    return out


# ---------------------------------------------------------------------------
# Random corpus
# ---------------------------------------------------------------------------


def _random_triangulation(n: int, rng: random.Random):
    """Stacked triangulation: repeated insertion of a point into a random inner face."""
    pos = {"v0": (0.0, 0.0), "v1": (1000.0, 0.0), "v2": (500.0, 866.0)}
    edges = {"v0-v1": ("v0", "v1"), "v1-v2": ("v1", "v2"), "v0-v2": ("v0", "v2")}
    faces = [("v0", "v1", "v2")]
    for i in range(3, n):
        f = faces.pop(rng.randrange(len(faces)))
        wts = [rng.uniform(0.5, 1.5) for _ in range(3)]
        tot = sum(wts)
        p = (sum(pos[v][0] * w for v, w in zip(f, wts)) / tot,
             sum(pos[v][1] * w for v, w in zip(f, wts)) / tot)
        v = f"v{i}"
        pos[v] = p
        for u in f:
            edges[f"{u}-{v}"] = (u, v)
        a, b, c = f
        faces += [(a, b, v), (b, c, v), (c, a, v)]
    return [f"v{i}" for i in range(n)], edges, pos, faces


def _orient(a: Point, b: Point, c: Point) -> float:
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def _intersection(p1: Point, p2: Point, q1: Point, q2: Point) -> Point:
    d = (p2[0] - p1[0]) * (q2[1] - q1[1]) - (p2[1] - p1[1]) * (q2[0] - q1[0])
    t = ((q1[0] - p1[0]) * (q2[1] - q1[1]) - (q1[1] - p1[1]) * (q2[0] - q1[0])) / d
    return _lerp(p1, p2, t)


def _edge_faces(faces) -> dict[frozenset, list[int]]:
    by_edge: dict[frozenset, list[int]] = {}
    for i, f in enumerate(faces):
        for k in range(3):
            by_edge.setdefault(frozenset((f[k], f[(k + 1) % 3])), []).append(i)
    return by_edge


def _edge_id(plan: _Plan, a: str, b: str) -> str:
    return f"{a}-{b}" if f"{a}-{b}" in plan.edges else f"{b}-{a}"


def _corpus_instance(n: int, rng: random.Random, kites: int, lenses: int, hexagons: int,
                     tag: str) -> OnePlaneGraph:
    vertices, edges, pos, faces = _random_triangulation(n, rng)
    plan = _Plan(vertices, edges, pos)
    used: set[int] = set()
    by_edge = _edge_faces(faces)
    adjacent = {frozenset(e) for e in edges.values()}
    inner_edges = [e for e, fs in sorted(by_edge.items(), key=lambda kv: sorted(kv[0])) if len(fs) == 2]
    rng.shuffle(inner_edges)

    def third(fi, e):
        return next(v for v in faces[fi] if v not in e)

    placed_k = 0
    for e in inner_edges:
        if placed_k >= kites:
            break
        f1, f2 = by_edge[e]
        if f1 in used or f2 in used:
            continue
        a, b = sorted(e)
        c, d = third(f1, e), third(f2, e)
        if frozenset((c, d)) in adjacent:
            continue
        P = pos
        # convex quadrangle: c and d on opposite sides of a-b, a and b on opposite sides of c-d
        if _orient(P[a], P[b], P[c]) * _orient(P[a], P[b], P[d]) >= 0:
            continue
        if _orient(P[c], P[d], P[a]) * _orient(P[c], P[d], P[b]) >= 0:
            continue
        used.update((f1, f2))
        cd = plan.edge(c, d)
        adjacent.add(frozenset((c, d)))
        plan.cross(f"{tag}k{placed_k}", _edge_id(plan, a, b), cd, _intersection(P[a], P[b], P[c], P[d]))
        placed_k += 1

    placed_l = 0
    for e in inner_edges:
        if placed_l >= lenses:
            break
        f1, f2 = by_edge[e]
        if f1 in used or f2 in used:
            continue
        used.update((f1, f2))
        s_, t_ = sorted(e)
        o, o2 = third(f1, e), third(f2, e)
        lt = f"{tag}b{placed_l}"
        w, pole = _plant_lens(plan, lt, s_, t_, o)
        q = _toward(pos[s_], pos[t_], pos[s_], _LENS_WITNESS[0], 0.0)
        plan.cross(f"{lt}q", pole, plan.edge(o2, w), q)
        placed_l += 1

    free = [i for i in range(len(faces)) if i not in used]
    rng.shuffle(free)
    for h, fi in enumerate(free[:hexagons]):
        a, b, c = faces[fi]
        _plant_hexagon(plan, f"{tag}t{h}", a, b, c)
    b = embed_from_coordinates(plan.pos, plan.vertices, plan.edges, plan.crossings)
    saturate_faces(b, prefix=f"{tag}e")
    return b.build()


def kite_corpus(n: int, seed: int, count: int = 1, *, kites: int = 0, lenses: int = 0,
                hexagons: int = 0) -> list[OnePlaneGraph]:
    """Random 3-connected 1-plane instances, reproducible from ``seed``.

    Each instance is a stacked triangulation on ``n`` vertices with up to
    ``kites`` crossing pairs inside convex quadrangles, ``lenses`` planted
    B-configurations (each held in place by a connector crossing its pole
    edge) and ``hexagons`` planted T-configurations.  Gadget vertices come on
    top of ``n``.
    """
    if n < 4:
        raise ValueError("corpus instances need at least 4 vertices")
    rng = random.Random(seed)
    return [_corpus_instance(n, rng, kites, lenses, hexagons, f"g{i}") for i in range(count)]
