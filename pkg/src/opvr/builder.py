"""Mutable embedding construction used by generators and surgery."""

from __future__ import annotations

import math
from typing import Iterable, Mapping, Sequence

from .graph import Dart, GraphError, OnePlaneGraph

Point = tuple[float, float]


class EmbeddingBuilder:
    """Rotation-system editor; ``build()`` returns a validated graph."""

    def __init__(self) -> None:
        self.vertices: list[str] = []
        self.edges: dict[str, tuple[str, str]] = {}
        self.crossings: dict[str, tuple[str, str]] = {}
        self.rot: dict[str, list[str]] = {}
        self.outer: Dart | None = None
        self._counter = 0

    @classmethod
    def from_graph(cls, g: OnePlaneGraph) -> EmbeddingBuilder:
        b = cls()
        b.vertices = list(g.vertices)
        b.edges = dict(g.edges)
        b.crossings = dict(g.crossings)
        b.rot = {n: list(r) for n, r in g.rotation.items()}
        b.outer = g.outer
        return b

    def fresh(self, prefix: str) -> str:
        taken = set(self.rot) | set(self.edges)
        while True:
            self._counter += 1
            name = f"{prefix}{self._counter}"
            if name not in taken:
                return name

    def add_vertex(self, v: str) -> str:
        if v in self.rot:
            raise GraphError(f"node {v!r} already exists")
        self.vertices.append(v)
        self.rot[v] = []
        return v

    # -- navigation on the current state -----------------------------------

    def face_next(self, dart: Dart) -> Dart:
        a, b = dart
        rot = self.rot[b]
        return (b, rot[(rot.index(a) - 1) % len(rot)])

    def face_walk(self, dart: Dart) -> list[Dart]:
        walk = [dart]
        d = self.face_next(dart)
        while d != dart:
            walk.append(d)
            d = self.face_next(d)
        return walk

    def all_darts(self) -> list[Dart]:
        return [(n, m) for n in self.rot for m in self.rot[n]]

    def faces(self) -> list[list[Dart]]:
        seen: set[Dart] = set()
        out = []
        for d in self.all_darts():
            if d in seen:
                continue
            w = self.face_walk(d)
            seen.update(w)
            out.append(w)
        return out

    def adjacent(self, u: str, v: str) -> bool:
        """True if an edge (crossed or not) joins real vertices ``u`` and ``v``."""
        for n in self.rot[u]:
            if n == v:
                return True
            if n in self.crossings:
                r = self.rot[n]
                if r[(r.index(u) + 2) % len(r)] == v:
                    return True
        return False

    # -- edits -------------------------------------------------------------

    def insert_before(self, node: str, new: str, before: str | None) -> None:
        """Put ``new`` into ``node``'s rotation just before ``before`` (ccw)."""
        rot = self.rot[node]
        if before is None:
            rot.append(new)
        else:
            rot.insert(rot.index(before), new)

    def add_edge_in_face(self, eid: str, a: str, b: str, into_a: Dart, into_b: Dart) -> None:
        """Add an uncrossed edge ``a-b`` inside the face containing both darts.

        ``into_a`` and ``into_b`` are darts of that face ending at ``a`` and
        ``b``; the new edge is inserted in the face corners following them.
        """
        if into_a[1] != a or into_b[1] != b:
            raise GraphError("corner darts must end at the chord endpoints")
        if eid in self.edges:
            raise GraphError(f"edge {eid!r} exists")
        self.insert_before(a, b, into_a[0])
        self.insert_before(b, a, into_b[0])
        self.edges[eid] = (a, b)

    def replace_neighbor(self, node: str, old: str, new: str) -> None:
        rot = self.rot[node]
        rot[rot.index(old)] = new

    def build(self) -> OnePlaneGraph:
        outer = self.outer
        if outer is None or outer[1] not in self.rot.get(outer[0], ()):
            if self.rot and any(self.rot.values()):
                raise GraphError("builder has no valid outer dart")
        return OnePlaneGraph(list(self.vertices), dict(self.edges), dict(self.crossings),
                             {n: list(r) for n, r in self.rot.items()},
                             outer if outer is not None else ("", ""))


# ---------------------------------------------------------------------------
# Rotation systems from coordinates
# ---------------------------------------------------------------------------


def embed_from_coordinates(
    pos: Mapping[str, Point],
    vertices: Sequence[str],
    edges: Mapping[str, tuple[str, str]],
    crossings: Mapping[str, tuple[str, str]],
    bends: Mapping[Dart, Sequence[Point]] | None = None,
    outer_at: tuple[str, float] | None = None,
) -> EmbeddingBuilder:
    """Derive the ccw rotation of a drawn planarization.

    ``pos`` places vertices and dummies; each planarization fragment is the
    straight segment between its ends unless ``bends[(a, b)]`` lists
    intermediate points from ``a`` to ``b``.  The outer dart is taken at the
    leftmost node, in the corner that faces left, unless ``outer_at`` names a
    node and a direction (radians) pointing into the outer face.  Pass it
    whenever bends reach further left than every node.
    """
    bends = dict(bends or {})
    b = EmbeddingBuilder()
    b.vertices = list(vertices)
    b.edges = dict(edges)
    b.crossings = dict(crossings)
    nbrs: dict[str, list[str]] = {n: [] for n in list(vertices) + list(crossings)}
    for (a, c) in fragments(edges, crossings):
        nbrs[a].append(c)
        nbrs[c].append(a)

    def first_point(a, c):
        if (a, c) in bends and bends[(a, c)]:
            return bends[(a, c)][0]
        if (c, a) in bends and bends[(c, a)]:
            return bends[(c, a)][-1]
        return pos[c]

    def angle(a, c):
        x0, y0 = pos[a]
        x1, y1 = first_point(a, c)
        return math.atan2(y1 - y0, x1 - x0)

    for n, ns in nbrs.items():
        b.rot[n] = sorted(ns, key=lambda c: angle(n, c))
    if outer_at is None:
        left = min((n for n in nbrs if nbrs[n]), key=lambda n: (pos[n][0], pos[n][1]))
        facing = math.pi
    else:
        left, facing = outer_at
    rot = b.rot[left]
    # corner from rot[i] ccw to rot[i+1] belongs to the face left of (left, rot[i])
    best = None
    for i, c in enumerate(rot):
        a0 = angle(left, c)
        a1 = angle(left, rot[(i + 1) % len(rot)])
        span = (a1 - a0) % (2 * math.pi) or 2 * math.pi
        if (facing - a0) % (2 * math.pi) <= span:
            best = c
            break
    b.outer = (left, best)
    return b


def fragments(edges, crossings) -> list[Dart]:
    where = {}
    for d, (e1, e2) in crossings.items():
        where[e1] = d
        where[e2] = d
    out = []
    for e, (u, v) in edges.items():
        d = where.get(e)
        if d is None:
            out.append((u, v))
        else:
            out.append((u, d))
            out.append((d, v))
    return out


def segments_cross(p1: Point, p2: Point, q1: Point, q2: Point) -> bool:
    """Whether two closed segments intersect (touching counts)."""

    def orient(a, b, c):
        v = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
        return 0 if abs(v) < 1e-12 else (1 if v > 0 else -1)

    def on_seg(a, b, c):
        return (min(a[0], b[0]) - 1e-12 <= c[0] <= max(a[0], b[0]) + 1e-12
                and min(a[1], b[1]) - 1e-12 <= c[1] <= max(a[1], b[1]) + 1e-12)

    o1, o2 = orient(p1, p2, q1), orient(p1, p2, q2)
    o3, o4 = orient(q1, q2, p1), orient(q1, q2, p2)
    if o1 != o2 and o3 != o4 and 0 not in (o1, o2, o3, o4):
        return True
    if o1 == 0 and on_seg(p1, p2, q1):
        return True
    if o2 == 0 and on_seg(p1, p2, q2):
        return True
    if o3 == 0 and on_seg(q1, q2, p1):
        return True
    if o4 == 0 and on_seg(q1, q2, p2):
        return True
    return False


def drawing_conflicts(
    pos: Mapping[str, Point],
    edges: Mapping[str, tuple[str, str]],
    crossings: Mapping[str, tuple[str, str]],
    bends: Mapping[Dart, Sequence[Point]] | None = None,
) -> list[tuple[Dart, Dart]]:
    """Pairs of planarization fragments whose drawn polylines meet illegally."""
    bends = dict(bends or {})
    polys = []
    for a, c in fragments(edges, crossings):
        pts = [pos[a]]
        if (a, c) in bends:
            pts += list(bends[(a, c)])
        elif (c, a) in bends:
            pts += list(reversed(bends[(c, a)]))
        pts.append(pos[c])
        polys.append(((a, c), pts))
    bad = []
    for i in range(len(polys)):
        (fa, pa) = polys[i]
        for j in range(i + 1, len(polys)):
            (fb, pb) = polys[j]
            shared = set(fa) & set(fb)
            for s in range(len(pa) - 1):
                for t in range(len(pb) - 1):
                    if not segments_cross(pa[s], pa[s + 1], pb[t], pb[t + 1]):
                        continue
                    # touching at a common end node is the only legal contact
                    if shared:
                        common = pos[next(iter(shared))]
                        ends_a = (s == 0 and pa[0] == common) or (s == len(pa) - 2 and pa[-1] == common)
                        ends_b = (t == 0 and pb[0] == common) or (t == len(pb) - 2 and pb[-1] == common)
                        if ends_a and ends_b and _only_touch(pa[s], pa[s + 1], pb[t], pb[t + 1], common):
                            continue
                    bad.append((fa, fb))
    return bad


def _only_touch(p1, p2, q1, q2, common) -> bool:
    # segments sharing an endpoint must not overlap collinearly
    def direction(a, b):
        dx, dy = b[0] - a[0], b[1] - a[1]
        n = math.hypot(dx, dy)
        return (dx / n, dy / n)

    a = p2 if p1 == common else p1
    b = q2 if q1 == common else q1
    da, db = direction(common, a), direction(common, b)
    return abs(da[0] - db[0]) > 1e-9 or abs(da[1] - db[1]) > 1e-9


# ---------------------------------------------------------------------------
# Face saturation
# ---------------------------------------------------------------------------


def saturate_faces(b: EmbeddingBuilder, prefix: str = "t", skip: Iterable[str] = ()) -> int:
    """Add uncrossed chords until no face admits one; returns chords added.

    Chords cut off ears ``a-x-b`` of a face (``a``, ``b`` real and not yet
    adjacent), preferring ears at crossing dummies.  Faces bounded only by
    dummies and already-adjacent vertices are left alone.
    """
    avoid = set(skip)
    added = 0
    todo = [w[0] for w in b.faces()]
    while todo:
        walk = b.face_walk(todo.pop())
        if len(walk) <= 3:
            continue
        i = _pick_ear(b, walk, avoid)
        if i is None:
            continue
        m = len(walk)
        a, x, c = walk[i][0], walk[i][1], walk[(i + 1) % m][1]
        b.add_edge_in_face(b.fresh(prefix), a, c, walk[(i - 1) % m], (x, c))
        added += 1
        todo.append((a, c))
    return added


def _pick_ear(b: EmbeddingBuilder, walk: list[Dart], avoid: set[str]) -> int | None:
    m = len(walk)
    best = None
    for i in range(m):
        a = walk[i][0]
        x = walk[i][1]
        c = walk[(i + 1) % m][1]
        if a == c or a in b.crossings or c in b.crossings:
            continue
        if a in avoid or c in avoid:
            continue
        if b.adjacent(a, c):
            continue
        rank = 0 if x in b.crossings else 1
        if best is None or rank < best[0]:
            best = (rank, i)
            if rank == 0:
                break
    return None if best is None else best[1]
