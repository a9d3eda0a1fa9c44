"""1-plane graphs stored as their planarization.

A graph is kept as a rotation system over the planarization: real vertices
plus one dummy node per crossing.  ``rotation[n]`` lists the planarization
neighbours of ``n`` in counterclockwise order.  Because crossing edges must
have four distinct endpoints and the underlying graph is simple, the
planarization is simple too, so a dart is just the pair ``(origin, head)``.

Face convention: the face to the left of dart ``(a, b)`` continues with
``(b, c)`` where ``c`` is the counterclockwise predecessor of ``a`` around
``b``.  Bounded faces are therefore walked counterclockwise and the outer
face clockwise.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Any, Iterable, Mapping

Dart = tuple[str, str]


class GraphError(ValueError):
    """Raised when a graph document or embedding is invalid."""


@dataclass(frozen=True)
class FaceWalk:
    id: int
    darts: tuple[Dart, ...]
    outer: bool = False

    @property
    def nodes(self) -> tuple[str, ...]:
        return tuple(d[0] for d in self.darts)

    def __len__(self) -> int:
        return len(self.darts)


@dataclass(frozen=True, eq=False)
class OnePlaneGraph:
    """Validated, immutable 1-plane embedding.

    ``edges`` maps original edge ids to their end vertices, ``crossings``
    maps each dummy to the two original edges crossing there, ``rotation``
    is the counterclockwise planarization rotation and ``outer`` is a dart
    whose left face is the outer face.
    """

    vertices: tuple[str, ...]
    edges: Mapping[str, tuple[str, str]]
    crossings: Mapping[str, tuple[str, str]]
    rotation: Mapping[str, tuple[str, ...]]
    outer: Dart

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", {k: tuple(v) for k, v in self.edges.items()})
        object.__setattr__(self, "crossings", {k: tuple(v) for k, v in self.crossings.items()})
        object.__setattr__(self, "rotation", {k: tuple(v) for k, v in self.rotation.items()})
        object.__setattr__(self, "outer", tuple(self.outer))
        _validate(self)

    # -- basic views -------------------------------------------------------

    @cached_property
    def vertex_set(self) -> frozenset[str]:
        return frozenset(self.vertices)

    @cached_property
    def dummies(self) -> tuple[str, ...]:
        return tuple(sorted(self.crossings))

    @cached_property
    def nodes(self) -> tuple[str, ...]:
        return self.vertices + self.dummies

    def is_dummy(self, node: str) -> bool:
        return node in self.crossings

    @cached_property
    def edge_crossing(self) -> dict[str, str]:
        """Original edge id -> dummy where it is crossed (crossed edges only)."""
        out = {}
        for d, (e1, e2) in self.crossings.items():
            out[e1] = d
            out[e2] = d
        return out

    @cached_property
    def fragment_edge(self) -> dict[Dart, str]:
        """Planarization dart -> original edge it belongs to."""
        out: dict[Dart, str] = {}
        for e, (u, v) in self.edges.items():
            d = self.edge_crossing.get(e)
            if d is None:
                out[(u, v)] = out[(v, u)] = e
            else:
                for a in (u, v):
                    out[(a, d)] = out[(d, a)] = e
        return out

    @cached_property
    def _rot_pos(self) -> dict[str, dict[str, int]]:
        return {n: {m: i for i, m in enumerate(r)} for n, r in self.rotation.items()}

    @cached_property
    def darts(self) -> tuple[Dart, ...]:
        return tuple((n, m) for n in self.nodes for m in self.rotation[n])

    @cached_property
    def adjacency(self) -> dict[str, frozenset[str]]:
        """Underlying simple graph on real vertices (crossings ignored)."""
        adj: dict[str, set[str]] = {v: set() for v in self.vertices}
        for u, v in self.edges.values():
            adj[u].add(v)
            adj[v].add(u)
        return {v: frozenset(s) for v, s in adj.items()}

    def edge_between(self, u: str, v: str) -> str | None:
        return self._edge_index.get(frozenset((u, v)))

    @cached_property
    def _edge_index(self) -> dict[frozenset, str]:
        return {frozenset(uv): e for e, uv in self.edges.items()}

    def other_end(self, edge: str, v: str) -> str:
        a, b = self.edges[edge]
        return b if a == v else a

    def degree(self, node: str) -> int:
        return len(self.rotation[node])

    # -- rotation / face navigation ---------------------------------------

    def next_ccw(self, dart: Dart) -> Dart:
        a, b = dart
        rot = self.rotation[a]
        return (a, rot[(self._rot_pos[a][b] + 1) % len(rot)])

    def prev_ccw(self, dart: Dart) -> Dart:
        a, b = dart
        rot = self.rotation[a]
        return (a, rot[(self._rot_pos[a][b] - 1) % len(rot)])

    def face_next(self, dart: Dart) -> Dart:
        a, b = dart
        return self.prev_ccw((b, a))

    @cached_property
    def _face_data(self) -> tuple[tuple[FaceWalk, ...], dict[Dart, int]]:
        return _trace_faces(self.darts, self.face_next, self.outer)

    @property
    def faces(self) -> tuple[FaceWalk, ...]:
        return self._face_data[0]

    @property
    def face_of(self) -> dict[Dart, int]:
        """Dart -> id of the face on its left."""
        return self._face_data[1]

    @cached_property
    def outer_face(self) -> int:
        return self.face_of[self.outer]

    @cached_property
    def node_faces(self) -> dict[str, frozenset[int]]:
        """Faces incident to each planarization node."""
        fo = self.face_of
        return {n: frozenset(fo[(n, m)] for m in self.rotation[n]) for n in self.nodes}

    @cached_property
    def dual_adjacency(self) -> dict[int, tuple[tuple[int, Dart], ...]]:
        """Face -> (neighbouring face, dart on this face's boundary) pairs."""
        fo = self.face_of
        out: dict[int, list[tuple[int, Dart]]] = {f.id: [] for f in self.faces}
        for d in self.darts:
            out[fo[d]].append((fo[(d[1], d[0])], d))
        return {k: tuple(v) for k, v in out.items()}

    def __repr__(self) -> str:
        return (f"OnePlaneGraph(n={len(self.vertices)}, m={len(self.edges)}, "
                f"crossings={len(self.crossings)})")


def _trace_faces(darts, face_next, outer) -> tuple[tuple[FaceWalk, ...], dict[Dart, int]]:
    face_of: dict[Dart, int] = {}
    walks = []
    for start in darts:
        if start in face_of:
            continue
        fid = len(walks)
        walk = []
        d = start
        while d not in face_of:
            face_of[d] = fid
            walk.append(d)
            d = face_next(d)
        if d != start:
            raise GraphError(f"face walk from dart {start} is not a cycle")
        walks.append(walk)
    outer_id = face_of.get(outer)
    faces = tuple(FaceWalk(i, tuple(w), i == outer_id) for i, w in enumerate(walks))
    return faces, face_of


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------


def _validate(g: OnePlaneGraph) -> None:
    vset = set(g.vertices)
    if len(vset) != len(g.vertices):
        raise GraphError("duplicate vertex id")
    seen_pairs: dict[frozenset, str] = {}
    for e, (u, v) in g.edges.items():
        if u not in vset or v not in vset:
            raise GraphError(f"edge {e!r} has an unknown end vertex")
        if u == v:
            raise GraphError(f"edge {e!r} is a self-loop")
        key = frozenset((u, v))
        if key in seen_pairs:
            raise GraphError(f"edge {e!r} is parallel to edge {seen_pairs[key]!r}")
        seen_pairs[key] = e

    crossed: dict[str, str] = {}
    for d, pair in g.crossings.items():
        if d in vset:
            raise GraphError(f"dummy {d!r} clashes with a vertex id")
        if len(pair) != 2 or pair[0] == pair[1]:
            raise GraphError(f"dummy {d!r} must name two distinct edges")
        for e in pair:
            if e not in g.edges:
                raise GraphError(f"dummy {d!r} references unknown edge {e!r}")
            if e in crossed:
                raise GraphError(f"edge {e!r} crossed twice (at {crossed[e]!r} and {d!r})")
            crossed[e] = d
        ends = set(g.edges[pair[0]]) | set(g.edges[pair[1]])
        if len(ends) != 4:
            raise GraphError(f"dummy {d!r}: crossing edges share an end vertex")

    expected: dict[str, set[str]] = {n: set() for n in list(g.vertices) + list(g.crossings)}
    for e, (u, v) in g.edges.items():
        d = crossed.get(e)
        if d is None:
            expected[u].add(v)
            expected[v].add(u)
        else:
            expected[u].add(d)
            expected[v].add(d)
            expected[d].update((u, v))
    for n, want in expected.items():
        rot = g.rotation.get(n)
        if rot is None:
            raise GraphError(f"node {n!r} has no rotation")
        if len(rot) != len(set(rot)) or set(rot) != want:
            raise GraphError(f"rotation at {n!r} does not match its incident fragments")
    extra = set(g.rotation) - set(expected)
    if extra:
        raise GraphError(f"rotation given for unknown node {sorted(extra)[0]!r}")

    for d, (e1, e2) in g.crossings.items():
        rot = g.rotation[d]
        owner = [e1 if x in g.edges[e1] else e2 for x in rot]
        if len(rot) != 4 or any(owner[i] == owner[(i + 1) % 4] for i in range(4)):
            raise GraphError(f"dummy {d!r}: rotation does not alternate between its edges")

    n_nodes = len(g.vertices) + len(g.crossings)
    n_frag = sum(len(r) for r in g.rotation.values()) // 2
    if n_frag == 0:
        if n_nodes != 1:
            raise GraphError("graph without edges must have exactly one vertex")
        return
    if g.outer not in set(g.darts):
        raise GraphError(f"outer face dart {g.outer} is not a dart")
    n_faces = len(g.faces)
    if n_nodes - n_frag + n_faces != 2:
        raise GraphError(
            f"Euler check failed: V-E+F = {n_nodes}-{n_frag}+{n_faces} != 2 "
            "(rotation system is not a connected plane embedding)")


# ---------------------------------------------------------------------------
# JSON document format
# ---------------------------------------------------------------------------


def parse(document: str | Mapping[str, Any]) -> OnePlaneGraph:
    """Build a validated graph from the JSON graph format."""
    if isinstance(document, str):
        try:
            doc = json.loads(document)
        except json.JSONDecodeError as exc:
            raise GraphError(f"malformed document: {exc}") from exc
    else:
        doc = document
    try:
        vertices = [str(v) for v in doc["vertices"]]
        edges = {}
        for item in doc["edges"]:
            eid = str(item["id"])
            if eid in edges:
                raise GraphError(f"duplicate edge id {eid!r}")
            a, b = item["ends"]
            edges[eid] = (str(a), str(b))
        crossings = {}
        for item in doc.get("crossings", []):
            did = str(item["dummy"])
            if did in crossings:
                raise GraphError(f"duplicate dummy id {did!r}")
            e1, e2 = item["edges"]
            crossings[did] = (str(e1), str(e2))
        rotation = {}
        for node, refs in doc["rotation"].items():
            rotation[str(node)] = [_resolve_ref(node, r, edges, crossings) for r in refs]
        outer = doc["outer_face"]
        at, oe = str(outer["at"]), outer["edge"]
    except GraphError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphError(f"malformed document: {exc!r}") from exc
    if oe is None and not edges:
        return OnePlaneGraph(vertices, edges, crossings, rotation, (at, at))
    oe = str(oe)
    if oe not in edges:
        raise GraphError(f"outer_face references unknown edge {oe!r}")
    head = _fragment_head(at, oe, edges, crossings)
    return OnePlaneGraph(vertices, edges, crossings, rotation, (at, head))


def _crossing_of(edge, crossings):
    for d, pair in crossings.items():
        if edge in pair:
            return d
    return None


def _fragment_head(node, edge, edges, crossings) -> str:
    if edge not in edges:
        raise GraphError(f"unknown edge {edge!r} at node {node!r}")
    u, v = edges[edge]
    d = _crossing_of(edge, crossings)
    if node in crossings:
        if node != d:
            raise GraphError(f"edge {edge!r} does not pass through dummy {node!r}")
        raise GraphError(f"dart at dummy {node!r} along {edge!r} is ambiguous")
    if node not in (u, v):
        raise GraphError(f"edge {edge!r} is not incident to {node!r}")
    if d is not None:
        return d
    return v if node == u else u


def _resolve_ref(node, ref, edges, crossings) -> str:
    edge, toward = str(ref["edge"]), str(ref["toward"])
    if edge not in edges:
        raise GraphError(f"rotation at {node!r} references unknown edge {edge!r}")
    u, v = edges[edge]
    d = _crossing_of(edge, crossings)
    node = str(node)
    if node in crossings:
        if d != node or toward not in (u, v):
            raise GraphError(f"rotation at dummy {node!r}: bad dart {edge!r}->{toward!r}")
        return toward
    if node not in (u, v):
        raise GraphError(f"rotation at {node!r}: edge {edge!r} is not incident")
    head = d if d is not None else (v if node == u else u)
    # the far endpoint of a crossed edge is accepted as a shorthand for the dummy
    if toward not in (head, v if node == u else u):
        raise GraphError(f"rotation at {node!r}: bad dart {edge!r}->{toward!r}")
    return head


def to_dict(g: OnePlaneGraph) -> dict[str, Any]:
    rotation = {
        n: [{"edge": g.fragment_edge[(n, m)], "toward": m} for m in g.rotation[n]]
        for n in sorted(g.rotation)
    }
    return {
        "vertices": sorted(g.vertices),
        "edges": [{"id": e, "ends": list(g.edges[e])} for e in sorted(g.edges)],
        "crossings": [{"dummy": d, "edges": list(g.crossings[d])} for d in sorted(g.crossings)],
        "rotation": rotation,
        # an edgeless graph has no outer dart; its single vertex is named alone
        "outer_face": {"at": g.outer[0],
                       "edge": g.fragment_edge[g.outer] if g.edges else None},
    }


def serialize(g: OnePlaneGraph) -> str:
    return json.dumps(to_dict(g), sort_keys=True, indent=1)


def load(path) -> OnePlaneGraph:
    with open(path) as fh:
        return parse(fh.read())


def dump(g: OnePlaneGraph, path) -> None:
    with open(path, "w") as fh:
        fh.write(serialize(g))
        fh.write("\n")


# ---------------------------------------------------------------------------
# Queries
# ---------------------------------------------------------------------------


def faces(g: OnePlaneGraph) -> tuple[FaceWalk, ...]:
    return g.faces


@dataclass(frozen=True)
class PlaneView:
    """The planarization seen as an ordinary plane graph."""

    nodes: tuple[str, ...]
    dummies: frozenset[str]
    edges: tuple[tuple[str, str], ...]
    rotation: Mapping[str, tuple[str, ...]]
    outer: Dart


def planarize_view(g: OnePlaneGraph) -> PlaneView:
    edges = tuple(sorted((a, b) for a, b in g.darts if a < b))
    return PlaneView(g.nodes, frozenset(g.crossings), edges, g.rotation, g.outer)


def is_three_connected(g: OnePlaneGraph) -> bool:
    """3-connectivity of the underlying simple graph (crossings ignored).

    Graphs with fewer than four vertices count as 3-connected exactly when
    they are complete.
    """
    n = len(g.vertices)
    if n < 4:
        return all(len(g.adjacency[v]) == n - 1 for v in g.vertices)
    index = {v: i for i, v in enumerate(g.vertices)}
    adj = [[index[w] for w in g.adjacency[v]] for v in g.vertices]
    if any(len(a) < 3 for a in adj):
        return False
    if not _connected_without(adj, -1):
        return False
    return all(not _has_articulation(adj, r) for r in range(n))


def _connected_without(adj: list[list[int]], removed: int) -> bool:
    n = len(adj)
    start = 0 if removed != 0 else 1
    seen = [False] * n
    if removed >= 0:
        seen[removed] = True
    seen[start] = True
    stack = [start]
    count = 1
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if not seen[w]:
                seen[w] = True
                count += 1
                stack.append(w)
    return count == n - (1 if removed >= 0 else 0)


def _has_articulation(adj: list[list[int]], removed: int) -> bool:
    """True iff the graph minus ``removed`` is disconnected or has a cut vertex."""
    n = len(adj)
    root = 0 if removed != 0 else 1
    disc = [-1] * n
    low = [0] * n
    disc[removed] = n  # marks it visited; never used as a tree vertex
    timer = 0
    disc[root] = low[root] = timer
    timer += 1
    root_children = 0
    stack = [(root, -1, iter(adj[root]))]
    while stack:
        v, parent, it = stack[-1]
        advanced = False
        for w in it:
            if w == removed or w == parent:
                continue
            if disc[w] == -1:
                disc[w] = low[w] = timer
                timer += 1
                stack.append((w, v, iter(adj[w])))
                advanced = True
                break
            if disc[w] < low[v]:
                low[v] = disc[w]
        if advanced:
            continue
        stack.pop()
        if parent == -1:
            continue
        if low[v] < low[parent]:
            low[parent] = low[v]
        if parent == root:
            root_children += 1
        elif low[v] >= disc[parent]:
            return True
    if timer != n - 1:
        return True
    return root_children > 1


def is_three_connected_bruteforce(g: OnePlaneGraph) -> bool:
    """Pair-removal check; quadratic in the vertex count, used as an oracle."""
    vs = list(g.vertices)
    n = len(vs)
    if n < 4:
        return all(len(g.adjacency[v]) == n - 1 for v in vs)
    for i in range(n):
        for j in range(i, n):
            gone = {vs[i], vs[j]}
            rest = [v for v in vs if v not in gone]
            seen = {rest[0]}
            queue = deque([rest[0]])
            while queue:
                v = queue.popleft()
                for w in g.adjacency[v]:
                    if w not in gone and w not in seen:
                        seen.add(w)
                        queue.append(w)
            if len(seen) != len(rest):
                return False
    return True


def induced_components(g: OnePlaneGraph, removed: Iterable[str]) -> list[set[str]]:
    gone = set(removed)
    comps = []
    seen: set[str] = set()
    for s in g.vertices:
        if s in gone or s in seen:
            continue
        comp = {s}
        seen.add(s)
        stack = [s]
        while stack:
            v = stack.pop()
            for w in g.adjacency[v]:
                if w not in gone and w not in seen:
                    seen.add(w)
                    comp.add(w)
                    stack.append(w)
        comps.append(comp)
    return comps
