"""Compaction: orthogonal representation -> integer OPVR coordinates.

Bends become degree-2 nodes, every dart gets a compass direction, the
outer face is closed off by a frame rectangle, reflex corners of every
face are cut by straight extensions until all faces are rectangles, and
longest paths over the horizontal and vertical segment classes give the
coordinates.
"""

from __future__ import annotations

import json
from collections import defaultdict, deque
from dataclasses import dataclass, field

from .graph import OnePlaneGraph
from .ortho import OrthoRep, min_complexity

E, N, W, S = 0, 1, 2, 3
_STEP = {E: (1, 0), N: (0, 1), W: (-1, 0), S: (0, -1)}


class CompactionError(RuntimeError):
    pass


class _Grid:
    """Plane graph whose rotations are given by compass slots."""

    def __init__(self) -> None:
        self.slot: dict[str, list[str | None]] = {}
        self.counter = 0

    def node(self, name: str | None = None) -> str:
        if name is None:
            self.counter += 1
            name = f"~{self.counter}"
        if name in self.slot:
            raise CompactionError(f"duplicate node {name}")
        self.slot[name] = [None, None, None, None]
        return name

    def link(self, a: str, b: str, d: int) -> None:
        if self.slot[a][d] is not None or self.slot[b][(d + 2) % 4] is not None:
            raise CompactionError(f"direction clash linking {a} -> {b}")
        self.slot[a][d] = b
        self.slot[b][(d + 2) % 4] = a

    def unlink(self, a: str, d: int) -> str:
        b = self.slot[a][d]
        self.slot[a][d] = None
        self.slot[b][(d + 2) % 4] = None
        return b

    def direction(self, a: str, b: str) -> int:
        return self.slot[a].index(b)

    def face_next(self, a: str, b: str) -> tuple[str, str]:
        """Next dart with the face on the left: the first cw neighbour after the reversal."""
        back = (self.direction(a, b) + 2) % 4
        s = self.slot[b]
        for t in (1, 2, 3, 4):
            c = s[(back - t) % 4]
            if c is not None:
                return b, c
        raise CompactionError("isolated node in a face walk")

    def walk(self, a: str, b: str) -> list[tuple[str, str]]:
        out = [(a, b)]
        d = self.face_next(a, b)
        while d != (a, b):
            out.append(d)
            d = self.face_next(*d)
        return out

    def turn(self, d1: tuple[str, str], d2: tuple[str, str]) -> int:
        diff = (self.direction(*d2) - self.direction(*d1)) % 4
        return {0: 0, 1: 1, 3: -1, 2: -2}[diff]


@dataclass
class OpvrDrawing:
    """Integer OPVR: a polygon per vertex, a segment per edge."""

    polygons: dict[str, list[tuple[int, int]]]
    visibilities: dict[str, tuple[tuple[int, int], tuple[int, int]]]
    grid: tuple[int, int]
    complexity: int
    crossings: dict[str, tuple[int, int]] = field(default_factory=dict)

    def reflex_counts(self) -> dict[str, int]:
        return {v: _reflex(p) for v, p in self.polygons.items()}

    def to_json(self) -> dict:
        return {
            "polygons": {v: [list(p) for p in pts] for v, pts in sorted(self.polygons.items())},
            "visibilities": [{"edge": e, "from": list(a), "to": list(b)}
                             for e, (a, b) in sorted(self.visibilities.items())],
            "crossings": {c: list(p) for c, p in sorted(self.crossings.items())},
            "grid": list(self.grid),
            "complexity": self.complexity,
        }

    @classmethod
    def from_json(cls, doc: dict) -> "OpvrDrawing":
        polys = {v: [tuple(p) for p in pts] for v, pts in doc["polygons"].items()}
        vis = {d["edge"]: (tuple(d["from"]), tuple(d["to"])) for d in doc["visibilities"]}
        cr = {c: tuple(p) for c, p in doc.get("crossings", {}).items()}
        return cls(polys, vis, tuple(doc["grid"]), int(doc["complexity"]), cr)

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=1)


def _reflex(poly: list[tuple[int, int]]) -> int:
    n = len(poly)
    out = 0
    for i in range(n):
        (ax, ay), (bx, by), (cx, cy) = poly[i - 1], poly[i], poly[(i + 1) % n]
        if (bx - ax) * (cy - by) - (by - ay) * (cx - bx) < 0:
            out += 1
    return out


# ---------------------------------------------------------------------------


def _orient(rep: OrthoRep, grid: _Grid) -> None:
    """Build the bend-subdivided graph with compass directions."""
    exp = rep.exp
    chains: dict[tuple[str, str], list[tuple[str, int]]] = {}
    # each dart of the expanded graph becomes a chain of (node, turn after it)
    for x, r in exp.rot.items():
        grid.node(x)
    for (a, b), s in rep.bends.items():
        chains[(a, b)] = [(f"{a}~{i}", 1 if c == "L" else -1) for i, c in enumerate(s)]
        for name, _ in chains[(a, b)]:
            grid.node(name)

    def path(a: str, b: str) -> list[tuple[str, int]]:
        if (a, b) in chains:
            return chains[(a, b)]
        if (b, a) in chains:
            return [(n, -t) for n, t in reversed(chains[(b, a)])]
        return []

    # BFS over expanded nodes; direction of dart (x, next_ccw) = dir + angle
    start = next(iter(exp.rot))
    out_dir: dict[tuple[str, str], int] = {(start, exp.rot[start][0]): E}
    queue = deque([start])
    done = set()
    while queue:
        x = queue.popleft()
        if x in done:
            continue
        done.add(x)
        r = exp.rot[x]
        base = next(i for i, y in enumerate(r) if (x, y) in out_dir)
        d = out_dir[(x, r[base])]
        for j in range(len(r)):
            y = r[(base + j) % len(r)]
            prev = out_dir.setdefault((x, y), d)
            if prev != d:
                raise CompactionError(f"inconsistent angles at {x}")
            d = (d + exp.angle((x, y))) % 4
        if d != out_dir[(x, r[base])]:
            raise CompactionError(f"angles at {x} do not sum to 360 degrees")
        for y in r:
            dd = out_dir[(x, y)]
            for _, t in path(x, y):
                dd = (dd + t) % 4
            arrive = (dd + 2) % 4
            if (y, x) in out_dir:
                if out_dir[(y, x)] != arrive:
                    raise CompactionError(f"edge {x}-{y} is not orthogonally consistent")
            else:
                out_dir[(y, x)] = arrive
                queue.append(y)
    for x, r in exp.rot.items():
        for y in r:
            if x > y:
                continue
            cur, dd = x, out_dir[(x, y)]
            for n, t in path(x, y):
                grid.link(cur, n, dd)
                cur, dd = n, (dd + t) % 4
            grid.link(cur, y, dd)


def _frame(rep: OrthoRep, grid: _Grid) -> list[str]:
    exp = rep.exp
    a, b = exp.outer_dart
    walk = grid.walk(a, b)
    for i, d in enumerate(walk):
        nxt = walk[(i + 1) % len(walk)]
        if grid.turn(d, nxt) < 0:
            corner = d[1]
            free = grid.direction(*d)  # straight on past the reflex turn
            break
    else:
        raise CompactionError("outer face has no reflex corner")
    tl, tr, br, bl = (grid.node(f"frame:{c}") for c in ("tl", "tr", "br", "bl"))
    grid.link(bl, br, E)
    grid.link(br, tr, N)
    grid.link(tr, tl, W)
    grid.link(tl, bl, S)
    hook = grid.node("frame:hook")
    side = {E: (br, tr, N), N: (tr, tl, W), W: (tl, bl, S), S: (bl, br, E)}[free]
    p, q, d = side
    grid.unlink(p, d)
    grid.link(p, hook, d)
    grid.link(hook, q, d)
    grid.link(corner, hook, free)
    return [tl, tr, br, bl, hook]


def _rectangulate(grid: _Grid, inner_start: list[tuple[str, int]]) -> int:
    """Cut reflex corners of every listed face until all faces are rectangles."""
    todo = list(inner_start)
    cuts = 0
    while todo:
        n0, dir0 = todo.pop()
        walk = grid.walk(n0, grid.slot[n0][dir0])
        m = len(walk)
        turns = [grid.turn(walk[i], walk[(i + 1) % m]) for i in range(m)]
        if sum(turns) != 4:
            raise CompactionError(f"face turns sum to {sum(turns)}")
        i = next((j for j, t in enumerate(turns) if t < 0), None)
        if i is None:
            continue
        acc = 0
        for step in range(m):
            acc += turns[(i + step) % m]
            if acc == 1:
                l_ = (i + step + 1) % m
                break
        else:
            raise CompactionError("no front edge for a reflex corner")
        b = walk[i][1]
        dirn = grid.direction(*walk[i])
        p, q = walk[l_]
        dpq = grid.direction(p, q)
        x = grid.node()
        grid.unlink(p, dpq)
        grid.link(p, x, dpq)
        grid.link(x, q, dpq)
        grid.link(b, x, dirn)
        cuts += 1
        todo.append((b, dirn))
        todo.append((x, (dirn + 2) % 4))
    return cuts


def _coordinates(grid: _Grid) -> dict[str, tuple[int, int]]:
    out: dict[str, list[int]] = {n: [0, 0] for n in grid.slot}
    for axis, fwd, side in ((0, E, N), (1, N, E)):
        # nodes joined by edges perpendicular to the axis share that coordinate
        parent = {n: n for n in grid.slot}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for n, s in grid.slot.items():
            for d in (side, (side + 2) % 4):
                if s[d] is not None:
                    parent[find(n)] = find(s[d])
        succ = defaultdict(set)
        indeg = defaultdict(int)
        for n, s in grid.slot.items():
            if s[fwd] is not None:
                a, b = find(n), find(s[fwd])
                if b not in succ[a]:
                    succ[a].add(b)
                    indeg[b] += 1
        roots = {find(n) for n in grid.slot}
        val = {r: 0 for r in roots}
        queue = deque(r for r in roots if indeg[r] == 0)
        seen = 0
        while queue:
            r = queue.popleft()
            seen += 1
            for t in succ[r]:
                val[t] = max(val[t], val[r] + 1)
                indeg[t] -= 1
                if indeg[t] == 0:
                    queue.append(t)
        if seen != len(roots):
            raise CompactionError("cyclic compaction constraints")
        for n in grid.slot:
            out[n][axis] = val[find(n)]
    return {n: (c[0], c[1]) for n, c in out.items()}


def compact(g: OnePlaneGraph, rep: OrthoRep | None = None) -> OpvrDrawing:
    if not g.edges:
        if len(g.vertices) != 1:
            raise CompactionError("edgeless input must be a single vertex")
        return OpvrDrawing({g.vertices[0]: [(0, 0), (1, 0), (1, 1), (0, 1)]}, {}, (1, 1), 0)
    if rep is None:
        _, rep = min_complexity(g)
    exp = rep.exp
    grid = _Grid()
    _orient(rep, grid)
    frame = _frame(rep, grid)
    starts = []
    seen = set()
    for n in list(grid.slot):
        for m in grid.slot[n]:
            if m is None or (n, m) in seen:
                continue
            w = grid.walk(n, m)
            seen.update(w)
            turns = sum(grid.turn(w[i], w[(i + 1) % len(w)]) for i in range(len(w)))
            if turns == 4:
                starts.append((n, grid.direction(n, m)))
            elif turns != -4:
                raise CompactionError(f"face turns sum to {turns}")
    _rectangulate(grid, starts)
    pos = _coordinates(grid)

    polys = {}
    for v, ports in exp.cycles.items():
        pts = []
        for a, b in exp.cycle_darts(v):
            for i, _ in enumerate(rep.bends.get((a, b), "")):
                pts.append(pos[f"{a}~{i}"])
        polys[v] = pts
    vis = {}
    for p, e in exp.port_edge.items():
        if e is None:
            continue
        a, b = g.edges[e]
        if exp.port_owner[p] == a:
            vis.setdefault(e, [None, None])[0] = pos[p]
        else:
            vis.setdefault(e, [None, None])[1] = pos[p]
    # translate so the drawing starts at the origin
    xs = [x for pts in polys.values() for x, _ in pts]
    ys = [y for pts in polys.values() for _, y in pts]
    ox, oy = min(xs), min(ys)

    def sh(p):
        return (p[0] - ox, p[1] - oy)

    polys = {v: [sh(p) for p in pts] for v, pts in polys.items()}
    vis = {e: (sh(a), sh(b)) for e, (a, b) in vis.items()}
    crossings = {c: sh(pos[c]) for c in g.crossings}
    width = max(xs) - ox
    height = max(ys) - oy
    return OpvrDrawing(polys, vis, (width, height), rep.max_reflex, crossings)

