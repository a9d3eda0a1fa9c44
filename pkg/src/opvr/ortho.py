"""Orthogonal representations of vertex-expanded 1-plane graphs.

Every real vertex becomes a cycle of ports, one per incident fragment, in
rotation order.  The cycle bounds the vertex face, whose drawing is the
vertex polygon.  Ports sit on polygon sides (180 degrees inside the
polygon, a perpendicular visibility outside), dummies are straight
crossings, so every angle is fixed and only the cycle edges carry bends.
A bend that turns left along the ccw cycle is a convex polygon corner, one
that turns right is a reflex corner.

Bends are found with a flow between faces: a unit from the vertex face to
a neighbour face is a convex corner, a unit back is a reflex corner, and
the reflex units of each vertex pass through a capacity-k arc.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from .flow import FlowNetwork
from .graph import Dart, OnePlaneGraph

log = logging.getLogger(__name__)


class ComplexityError(RuntimeError):
    pass


@dataclass
class ExpandedPlaneGraph:
    """Planarization with every real vertex replaced by its port cycle."""

    source: OnePlaneGraph
    rot: dict[str, list[str]]
    cycles: dict[str, list[str]]  # vertex -> ports, ccw
    port_owner: dict[str, str]
    port_edge: dict[str, str | None]  # port -> original edge id (None for fillers)
    outer_dart: Dart
    faces: list[list[Dart]] = field(default_factory=list)
    face_of: dict[Dart, int] = field(default_factory=dict)
    outer_face: int = -1
    vertex_face: dict[str, int] = field(default_factory=dict)

    def face_next(self, d: Dart) -> Dart:
        a, b = d
        r = self.rot[b]
        return (b, r[(r.index(a) - 1) % len(r)])

    def is_port(self, n: str) -> bool:
        return n in self.port_owner

    def angle(self, d: Dart) -> int:
        """Angle (in right angles) of the corner from ``d`` ccw to the next dart at d's origin."""
        x, y = d
        if x in self.port_owner:
            ports = self.cycles[self.port_owner[x]]
            i = ports.index(x)
            if y == ports[(i + 1) % len(ports)]:
                return 2
            if self.port_edge[x] is None:
                return 2
            return 1
        return 1  # crossing dummy

    def cycle_darts(self, v: str) -> list[Dart]:
        ps = self.cycles[v]
        return [(ps[i], ps[(i + 1) % len(ps)]) for i in range(len(ps))]

    @property
    def n_nodes(self) -> int:
        return len(self.rot)

    @property
    def n_edges(self) -> int:
        return sum(len(r) for r in self.rot.values()) // 2


def port_name(v: str, i: int) -> str:
    return f"{v}#{i}"


def expand(g: OnePlaneGraph) -> ExpandedPlaneGraph:
    rot: dict[str, list[str]] = {}
    cycles: dict[str, list[str]] = {}
    owner: dict[str, str] = {}
    pedge: dict[str, str | None] = {}
    toward: dict[Dart, str] = {}  # planarization dart (v, n) -> port of v facing n
    for v in g.vertices:
        nbrs = list(g.rotation[v])
        ports = []
        for i, n in enumerate(nbrs):
            p = port_name(v, i)
            ports.append(p)
            owner[p] = v
            pedge[p] = g.fragment_edge[(v, n)]
            toward[(v, n)] = p
        # fillers keep every cycle at length three or more
        for j in range(max(0, 3 - len(nbrs))):
            p = f"{v}#f{j}"
            ports.append(p)
            owner[p] = v
            pedge[p] = None
        cycles[v] = ports

    def end(a: str, b: str) -> str:
        return toward[(a, b)] if a in g.vertex_set else a

    for v, ports in cycles.items():
        m = len(ports)
        for i, p in enumerate(ports):
            nxt, prv = ports[(i + 1) % m], ports[(i - 1) % m]
            if pedge[p] is None:
                rot[p] = [nxt, prv]
            else:
                n = g.rotation[v][i]
                rot[p] = [end(n, v), nxt, prv]
    for d in g.dummies:
        rot[d] = [end(n, d) for n in g.rotation[d]]

    a, b = g.outer
    if a == b:  # lone vertex: the outer face wraps its filler cycle
        ports = cycles[a]
        outer = (ports[1], ports[0])
    else:
        outer = (end(a, b), end(b, a))
    exp = ExpandedPlaneGraph(g, rot, cycles, owner, pedge, outer)
    _trace(exp)
    return exp


def _trace(exp: ExpandedPlaneGraph) -> None:
    seen: dict[Dart, int] = {}
    faces = []
    for x, r in exp.rot.items():
        for y in r:
            if (x, y) in seen:
                continue
            walk = []
            d = (x, y)
            while d not in seen:
                seen[d] = len(faces)
                walk.append(d)
                d = exp.face_next(d)
            faces.append(walk)
    exp.faces, exp.face_of = faces, seen
    exp.outer_face = seen[exp.outer_dart]
    exp.vertex_face = {v: seen[exp.cycle_darts(v)[0]] for v in exp.cycles}
    v_, e_, f_ = len(exp.rot), exp.n_edges, len(faces)
    if v_ - e_ + f_ != 2:
        raise ComplexityError(f"expanded graph fails Euler: {v_}-{e_}+{f_}")


# ---------------------------------------------------------------------------
# Representation and the bend flow
# ---------------------------------------------------------------------------


@dataclass
class OrthoRep:
    """Angles are implied by the expansion; ``bends`` maps each ccw cycle dart
    to its bend string ('L' convex corner, 'R' reflex corner, in walking order)."""

    exp: ExpandedPlaneGraph
    k: int
    bends: dict[Dart, str]

    def reflex(self) -> dict[str, int]:
        out = {}
        for v in self.exp.cycles:
            out[v] = sum(self.bends.get(d, "").count("R") for d in self.exp.cycle_darts(v))
        return out

    @property
    def max_reflex(self) -> int:
        return max(self.reflex().values(), default=0)

    @property
    def total_bends(self) -> int:
        return sum(len(s) for s in self.bends.values())

    def dart_turns(self, d: Dart) -> list[int]:
        """Bend turns met walking ``d`` (+1 left, -1 right)."""
        if d in self.bends:
            return [1 if c == "L" else -1 for c in self.bends[d]]
        r = (d[1], d[0])
        if r in self.bends:
            return [-1 if c == "L" else 1 for c in reversed(self.bends[r])]
        return []

    def check(self) -> list[str]:
        """Angle sums, straight dummies and face turn laws; returns violations."""
        exp = self.exp
        bad = []
        for x, r in exp.rot.items():
            total = sum(exp.angle((x, y)) for y in r)
            if total != 4:
                bad.append(f"angle sum {total} at {x}")
            if x not in exp.port_owner and any(exp.angle((x, y)) != 1 for y in r):
                bad.append(f"dummy {x} is not straight")
        for fid, walk in enumerate(exp.faces):
            turn = 0
            for d in walk:
                turn += sum(self.dart_turns(d))
                nxt = exp.face_next(d)
                turn += 2 - exp.angle(nxt)
            want = -4 if fid == exp.outer_face else 4
            if turn != want:
                bad.append(f"face {fid} turns {turn}, expected {want}")
        for d in self.bends:
            a, b = d
            if exp.port_owner.get(a) is None or exp.port_owner.get(a) != exp.port_owner.get(b):
                bad.append(f"bends on non-cycle edge {d}")
        return bad

    def to_json(self) -> dict:
        return {"k": self.k, "reflex": dict(sorted(self.reflex().items())),
                "bends": {f"{a}->{b}": s for (a, b), s in sorted(self.bends.items()) if s}}


@dataclass
class _Network:
    net: FlowNetwork
    src: int
    snk: int
    need: int
    convex: dict[Dart, int]
    reflex: dict[Dart, int]


def _face_demand(exp: ExpandedPlaneGraph, fid: int) -> int:
    """Net reflex-in-face bends a face must receive (negative: must send)."""
    walk = exp.faces[fid]
    corners = sum(exp.angle(exp.face_next(d)) for d in walk)
    size = len(walk)
    law = 2 * size - 4 if fid != exp.outer_face else 2 * size + 4
    return law - corners


def _build_network(exp: ExpandedPlaneGraph, k: int, costs: bool) -> _Network:
    net = FlowNetwork(2)
    src, snk = 0, 1
    fnode = list(net.add_nodes(len(exp.faces)))
    need = 0
    for fid in range(len(exp.faces)):
        dem = _face_demand(exp, fid)
        if dem > 0:
            net.add_arc(fnode[fid], snk, dem)
        elif dem < 0:
            net.add_arc(src, fnode[fid], -dem)
            need += -dem
    convex, reflex = {}, {}
    c = 1 if costs else 0
    for v in exp.cycles:
        fv = exp.vertex_face[v]
        rv = net.add_node()
        net.add_arc(rv, fnode[fv], k)
        for d in exp.cycle_darts(v):
            g = exp.face_of[(d[1], d[0])]
            convex[d] = net.add_arc(fnode[fv], fnode[g], 4 * len(exp.faces[g]) + 4, c)
            reflex[d] = net.add_arc(fnode[g], rv, k, c)
    return _Network(net, src, snk, need, convex, reflex)


def feasible(exp: ExpandedPlaneGraph, k: int, optimize: bool = True) -> OrthoRep | None:
    """An orthogonal representation with at most ``k`` reflex corners per polygon, or None."""
    if k < 0:
        raise ValueError("reflex budget must be non-negative")
    nw = _build_network(exp, k, costs=optimize)
    if optimize:
        got, _ = nw.net.min_cost_flow(nw.src, nw.snk)
    else:
        got = nw.net.max_flow(nw.src, nw.snk)
    if got != nw.need:
        return None
    bends = {}
    for d in nw.convex:
        lft = nw.net.flow(nw.convex[d])
        rgt = nw.net.flow(nw.reflex[d])
        cancel = min(lft, rgt)
        lft -= cancel
        rgt -= cancel
        if lft or rgt:
            bends[d] = "R" * rgt + "L" * lft
    rep = OrthoRep(exp, k, bends)
    return rep


def min_complexity(g: OnePlaneGraph, max_k: int | None = None,
                   try_all_outer_faces: bool = False) -> tuple[int, OrthoRep]:
    """Smallest reflex budget admitting a representation, scanning k = 0, 1, ..."""
    if try_all_outer_faces:
        return _min_over_outer_faces(g, max_k)
    exp = expand(g)
    cap = max_k if max_k is not None else max(2 * len(g.vertices), 6)
    for k in range(cap + 1):
        if feasible(exp, k, optimize=False) is not None:
            rep = feasible(exp, k, optimize=True)
            assert rep is not None
            log.info("minimum vertex complexity %d", k)
            return k, rep
        log.debug("k=%d infeasible", k)
    raise ComplexityError(f"no representation with at most {cap} reflex corners per vertex")


def _min_over_outer_faces(g: OnePlaneGraph, max_k: int | None) -> tuple[int, OrthoRep]:
    best = None
    for f in g.faces:
        h = OnePlaneGraph(g.vertices, g.edges, g.crossings, g.rotation, f.darts[0])
        try:
            # later faces only need to beat the best so far
            k, rep = min_complexity(h, max_k)
        except ComplexityError:
            continue
        best = (k, rep)
        if k == 0:
            break
        max_k = k - 1
    if best is None:
        raise ComplexityError(f"no representation with at most {max_k} reflex corners per vertex")
    return best
