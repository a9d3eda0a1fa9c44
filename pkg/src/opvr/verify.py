"""Independent geometric verification of OPVR drawings.

Nothing here looks at the orthogonal representation that produced a
drawing: all checks run on integer coordinates against the input graph.
"""

from __future__ import annotations

import bisect
from collections import defaultdict
from dataclasses import dataclass, field
from math import ceil

from .compact import OpvrDrawing
from .configs import ForbiddenConfig, detect_all
from .graph import OnePlaneGraph

Point = tuple[int, int]


@dataclass
class VerificationReport:
    ok: bool
    violations: list[str]
    reflex: dict[str, int]
    complexity: int
    claimed: int
    grid: tuple[int, int]
    n_planarized: int
    stats: dict = field(default_factory=dict)

    @property
    def grid_ratio(self) -> float:
        return max(self.grid) / max(1, self.n_planarized)

    def to_json(self) -> dict:
        return {"ok": self.ok, "violations": self.violations[:50],
                "violation_count": len(self.violations), "complexity": self.complexity,
                "claimed_complexity": self.claimed, "grid": list(self.grid),
                "grid_ratio": round(self.grid_ratio, 3), "stats": self.stats}


# -- polygon helpers ---------------------------------------------------------


def signed_area2(poly: list[Point]) -> int:
    return sum(poly[i - 1][0] * poly[i][1] - poly[i][0] * poly[i - 1][1] for i in range(len(poly)))


def cross(o: Point, a: Point, b: Point) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def reflex_corners(poly: list[Point]) -> list[Point]:
    """Reflex corners of a ccw polygon."""
    n = len(poly)
    return [poly[i] for i in range(n) if cross(poly[i - 1], poly[i], poly[(i + 1) % n]) < 0]


def point_in_polygon(p: Point, poly: list[Point]) -> bool:
    """Strict interior test by ray casting (boundary points count as outside)."""
    x, y = p
    inside = False
    n = len(poly)
    for i in range(n):
        (x1, y1), (x2, y2) = poly[i - 1], poly[i]
        if x1 == x2 == x and min(y1, y2) <= y <= max(y1, y2):
            return False
        if y1 == y2 == y and min(x1, x2) <= x <= max(x1, x2):
            return False
        if (y1 > y) != (y2 > y):
            xc = x1 + (y - y1) * (x2 - x1) / (y2 - y1)
            if xc > x:
                inside = not inside
    return inside


def _on_segment(p: Point, a: Point, b: Point) -> bool:
    return (min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])
            and cross(a, b, p) == 0)


def _perimeter_position(poly: list[Point], p: Point) -> tuple[int, int] | None:
    n = len(poly)
    for i in range(n):
        a, b = poly[i], poly[(i + 1) % n]
        if _on_segment(p, a, b):
            return (i, abs(p[0] - a[0]) + abs(p[1] - a[1]))
    return None


# -- segment sweep -----------------------------------------------------------


@dataclass(frozen=True)
class _Seg:
    a: Point
    b: Point
    owner: str  # polygon vertex or edge id
    kind: str  # "side" or "vis"
    index: int = 0  # side index within its polygon

    @property
    def horizontal(self) -> bool:
        return self.a[1] == self.b[1]


def _contacts(segs: list[_Seg]) -> list[tuple[_Seg, _Seg, Point]]:
    """Every touching pair of axis-parallel segments, with a contact point."""
    hs = [s for s in segs if s.horizontal]
    vs = [s for s in segs if not s.horizontal]
    out = []
    # collinear overlaps
    for group, coord, lo in ((hs, 1, 0), (vs, 0, 1)):
        lines = defaultdict(list)
        for s in group:
            lines[s.a[coord]].append((min(s.a[lo], s.b[lo]), max(s.a[lo], s.b[lo]), s))
        for c, items in lines.items():
            items.sort(key=lambda t: t[0])
            open_: list = []
            for l1, l2, s in items:
                open_ = [(e2, t) for e2, t in open_ if e2 >= l1]
                for _, t in open_:
                    p = [0, 0]
                    p[coord], p[lo] = c, l1
                    out.append((t, s, (p[0], p[1])))
                open_.append((l2, s))
    # horizontal against vertical by a sweep over x
    events = []
    for i, s in enumerate(hs):
        x1, x2 = sorted((s.a[0], s.b[0]))
        events.append((x1, 0, i))
        events.append((x2, 2, i))
    for j, s in enumerate(vs):
        events.append((s.a[0], 1, j))
    events.sort()
    active: list[tuple[int, int]] = []
    for x, typ, i in events:
        if typ == 0:
            bisect.insort(active, (hs[i].a[1], i))
        elif typ == 2:
            del active[bisect.bisect_left(active, (hs[i].a[1], i))]
        else:
            v = vs[i]
            y1, y2 = sorted((v.a[1], v.b[1]))
            k = bisect.bisect_left(active, (y1, -1))
            while k < len(active) and active[k][0] <= y2:
                out.append((hs[active[k][1]], v, (x, active[k][0])))
                k += 1
    return out


# -- main check ---------------------------------------------------------------


def verify(g: OnePlaneGraph, d: OpvrDrawing) -> VerificationReport:
    bad: list[str] = []
    polys = d.polygons
    for v in g.vertices:
        if v not in polys:
            bad.append(f"vertex {v} has no polygon")
    for e in g.edges:
        if e not in d.visibilities:
            bad.append(f"edge {e} has no visibility")

    segs: list[_Seg] = []
    reflex = {}
    for v, poly in polys.items():
        n = len(poly)
        if n < 4 or n % 2:
            bad.append(f"polygon {v} has {n} corners")
        if any(not isinstance(c, int) for p in poly for c in p):
            bad.append(f"polygon {v} has non-integer coordinates")
        if signed_area2(poly) <= 0:
            bad.append(f"polygon {v} is not counterclockwise")
        for i in range(n):
            a, b, c = poly[i], poly[(i + 1) % n], poly[(i + 2) % n]
            if a == b or (a[0] != b[0] and a[1] != b[1]):
                bad.append(f"polygon {v} side {i} is not axis-parallel")
            elif cross(a, b, c) == 0:
                bad.append(f"polygon {v} has a straight corner at {b}")
            segs.append(_Seg(a, b, v, "side", i))
        reflex[v] = len(reflex_corners(poly))

    ends: dict[str, tuple[str, str]] = {}
    for e, (a, b) in d.visibilities.items():
        if e not in g.edges:
            bad.append(f"visibility for unknown edge {e}")
            continue
        if a == b or (a[0] != b[0] and a[1] != b[1]):
            bad.append(f"visibility {e} is not a proper axis-parallel segment")
            continue
        ends[e] = g.edges[e]
        segs.append(_Seg(a, b, e, "vis"))
        for end, far, owner in ((a, b, g.edges[e][0]), (b, a, g.edges[e][1])):
            bad += _attachment_problems(e, owner, end, far, polys.get(owner))

    crossing_pairs = {frozenset(pair): c for c, pair in g.crossings.items()}
    met = set()
    for s, t, p in _contacts(segs):
        msg = _classify(s, t, p, polys, ends, crossing_pairs, met, d)
        if msg:
            bad.append(msg)
    for pair, c in crossing_pairs.items():
        if c not in met:
            bad.append(f"crossing {c} is not realised")

    bad += _nesting(polys)
    bad += _rotation_problems(g, d)

    comp = max(reflex.values(), default=0)
    if comp > d.complexity:
        bad.append(f"drawing claims complexity {d.complexity} but has a polygon with {comp} reflex corners")
    xs = [x for pts in polys.values() for x, _ in pts]
    ys = [y for pts in polys.values() for _, y in pts]
    grid = (max(xs) - min(xs), max(ys) - min(ys)) if xs else (0, 0)
    if xs and (min(xs) < 0 or min(ys) < 0):
        bad.append("negative coordinates")
    stats = {"polygons": len(polys), "visibilities": len(d.visibilities),
             "segments": len(segs), "reflex_total": sum(reflex.values())}
    return VerificationReport(not bad, bad, reflex, comp, d.complexity, grid,
                              len(g.vertices) + len(g.crossings), stats)


def _attachment_problems(e, owner, end, far, poly) -> list[str]:
    if poly is None:
        return []
    n = len(poly)
    for i in range(n):
        a, b = poly[i], poly[(i + 1) % n]
        if _on_segment(end, a, b):
            if end in (a, b):
                return [f"visibility {e} attaches to a corner of {owner}"]
            # ccw polygon: outward normal is the side direction turned right
            sx, sy = (b[0] > a[0]) - (b[0] < a[0]), (b[1] > a[1]) - (b[1] < a[1])
            vx, vy = (far[0] > end[0]) - (far[0] < end[0]), (far[1] > end[1]) - (far[1] < end[1])
            if (vx, vy) != (sy, -sx):
                return [f"visibility {e} does not leave {owner} perpendicularly outward"]
            return []
    return [f"visibility {e} does not end on polygon {owner}"]


def _classify(s, t, p, polys, ends, crossing_pairs, met, d) -> str | None:
    if s.kind == "side" and t.kind == "side":
        if s.owner != t.owner:
            return f"polygons {s.owner} and {t.owner} touch at {p}"
        n = len(polys[s.owner])
        if (s.index - t.index) % n in (1, n - 1) and p in (s.a, s.b) and p in (t.a, t.b):
            return None
        return f"polygon {s.owner} is not simple near {p}"
    if s.kind == "vis" and t.kind == "vis":
        c = crossing_pairs.get(frozenset((s.owner, t.owner)))
        if c is None:
            return f"visibilities {s.owner} and {t.owner} meet at {p} without a crossing"
        if s.horizontal == t.horizontal or p in (s.a, s.b, t.a, t.b):
            return f"crossing {c} is not a proper perpendicular crossing"
        if c in met:
            return f"crossing {c} realised twice"
        met.add(c)
        if d.crossings and c in d.crossings and tuple(d.crossings[c]) != p:
            return f"crossing {c} drawn at {p}, recorded at {d.crossings[c]}"
        return None
    vis, side = (s, t) if s.kind == "vis" else (t, s)
    a, b = ends[vis.owner]
    if side.owner == a and p == vis.a:
        return None
    if side.owner == b and p == vis.b:
        return None
    return f"visibility {vis.owner} touches polygon {side.owner} at {p}"


def _nesting(polys: dict[str, list[Point]]) -> list[str]:
    boxes = []
    for v, poly in polys.items():
        xs = [x for x, _ in poly]
        ys = [y for _, y in poly]
        boxes.append((min(xs), max(xs), min(ys), max(ys), v))
    boxes.sort()
    starts = [b[0] for b in boxes]
    out = []
    for v, poly in polys.items():
        px, py = poly[0]
        hi = bisect.bisect_right(starts, px)
        for x1, x2, y1, y2, w in boxes[:hi]:
            if w == v or not (x1 <= px <= x2 and y1 <= py <= y2):
                continue
            if point_in_polygon((px, py), polys[w]):
                out.append(f"polygon {v} lies inside polygon {w}")
    return out


def _rotation_problems(g: OnePlaneGraph, d: OpvrDrawing) -> list[str]:
    out = []
    for v in g.vertices:
        poly = d.polygons.get(v)
        if poly is None:
            continue
        want = [g.fragment_edge[(v, n)] for n in g.rotation[v]]
        got = []
        for e in want:
            seg = d.visibilities.get(e)
            if seg is None:
                break
            end = seg[0] if g.edges[e][0] == v else seg[1]
            pos = _perimeter_position(poly, end)
            if pos is None:
                break
            got.append((pos, e))
        else:
            order = [e for _, e in sorted(got)]
            if order and not _cyclic_equal(order, want):
                out.append(f"attachments around {v} are {order}, rotation is {want}")
    return out


def _cyclic_equal(a: list, b: list) -> bool:
    if len(a) != len(b):
        return False
    if not a:
        return True
    try:
        i = b.index(a[0])
    except ValueError:
        return False
    return a == b[i:] + b[:i]


# ---------------------------------------------------------------------------
# Boundary turn audit
# ---------------------------------------------------------------------------


@dataclass
class BoundaryAudit:
    config: str
    reflex_turns: int  # signed polygon corner turns along the enclosing arcs
    attachments: int
    crossing_turns: int
    closed: bool
    clockwise: bool
    short_arc_reflex: list[tuple[str, Point]]
    short_arc_excess: int  # reflex minus convex corners on the arcs facing the interior

    @property
    def holds(self) -> bool:
        return self.closed and self.clockwise and \
            self.reflex_turns == self.crossing_turns + self.attachments + 4

    def to_json(self) -> dict:
        return {"config": self.config, "r": self.reflex_turns, "a": self.attachments,
                "k": self.crossing_turns, "holds": self.holds,
                "short_arc_reflex": len(self.short_arc_reflex)}


def _crossing_point(d: OpvrDrawing, g: OnePlaneGraph, c: str) -> Point:
    e1, e2 = g.crossings[c]
    (a, b), (p, q) = d.visibilities[e1], d.visibilities[e2]
    if a[0] == b[0]:
        return (a[0], p[1])
    return (p[0], a[1])


def _arc(poly: list[Point], start: Point, stop: Point, clockwise: bool) -> list[Point]:
    """Corners met walking the boundary of a ccw polygon from ``start`` to ``stop``."""
    n = len(poly)
    i, _ = _perimeter_position(poly, start)
    j, _ = _perimeter_position(poly, stop)
    if not clockwise:
        out = []
        if i == j and _before(poly, i, start, stop):
            return out
        k = (i + 1) % n
        while True:
            out.append(poly[k])
            if k == j:
                return out
            k = (k + 1) % n
    rev = poly[::-1]
    return _arc(rev, start, stop, False)


def _before(poly, i, p, q) -> bool:
    a = poly[i]
    return abs(p[0] - a[0]) + abs(p[1] - a[1]) <= abs(q[0] - a[0]) + abs(q[1] - a[1])


def boundary_audit(g: OnePlaneGraph, d: OpvrDrawing, config: ForbiddenConfig) -> BoundaryAudit:
    """Turn count of the configuration's boundary traced clockwise in the drawing.

    The trace follows the visibilities through the crossings and, at each
    pole, the polygon arc that keeps the polygon inside the traced region.
    """
    walk = list(config.boundary)
    if g.face_of[walk[0]] in config.interior_faces:
        walk = [(b, a) for a, b in reversed(walk)]
    nodes = [a for a, _ in walk]
    m = len(nodes)

    def attach(v: str, other: str) -> Point:
        e = g.fragment_edge[(v, other)]
        seg = d.visibilities[e]
        return seg[0] if g.edges[e][0] == v else seg[1]

    pts: list[tuple[Point, str]] = []
    short: list[tuple[str, Point]] = []
    short_turns = []
    for i, x in enumerate(nodes):
        prv, nxt = nodes[i - 1], nodes[(i + 1) % m]
        if x in g.crossings:
            pts.append((_crossing_point(d, g, x), "crossing"))
            continue
        a1, a2 = attach(x, prv), attach(x, nxt)
        poly = d.polygons[x]
        pts.append((a1, "attach"))
        pts += [(c, "corner") for c in _arc(poly, a1, a2, clockwise=True)]
        pts.append((a2, "attach"))
        inner = _arc(poly, a1, a2, clockwise=False)
        refl = set(reflex_corners(poly))
        short += [(x, c) for c in inner if c in refl]
        short_turns.append(sum(1 if c in refl else -1 for c in inner))

    r, a, k, closed = tally_turns(pts)
    clockwise = signed_area2([p for p, _ in pts]) < 0
    return BoundaryAudit(config.name, r, a, k, closed, clockwise, short, sum(short_turns))


def tally_turns(pts: list[tuple[Point, str]]) -> tuple[int, int, int, bool]:
    """Turns along a closed axis-parallel trace of tagged points.

    Tags are "corner", "attach" or "crossing".  Returns (r, a, k, closed):
    signed corner turns (right positive), left turns at attachments, left
    turns at crossings, and whether every step is axis-parallel with the
    attachments and crossings turning left.
    """
    r = a = k = 0
    n = len(pts)
    closed = True
    for i in range(n):
        (p0, _), (p1, kind), (p2, _) = pts[i - 1], pts[i], pts[(i + 1) % n]
        if p0 == p1 or p1 == p2 or (p0[0] != p1[0] and p0[1] != p1[1]):
            closed = False
            continue
        turn = -cross(p0, p1, p2)  # right turn positive
        t = (turn > 0) - (turn < 0)
        if kind == "corner":
            r += t
        elif kind == "attach":
            a += 1 if t < 0 else 0
            if t >= 0:
                closed = False
        elif t != 0:
            k += 1 if t < 0 else 0
            if t > 0:
                closed = False
    return r, a, k, closed


# ---------------------------------------------------------------------------
# Lower-bound audit
# ---------------------------------------------------------------------------


@dataclass
class LowerBoundAudit:
    n_poles: int
    planted: int
    found: int
    distinct_reflex: int
    max_pole_reflex: int
    claimed: int
    missing: list[str]
    failed: list[str]

    @property
    def required_corners(self) -> int:
        return 4 * self.n_poles - 8

    @property
    def required_max(self) -> int:
        return ceil(self.required_corners / self.n_poles) if self.n_poles else 0

    @property
    def ok(self) -> bool:
        return (not self.missing and not self.failed
                and self.distinct_reflex >= self.required_corners
                and self.max_pole_reflex >= self.required_max
                and self.claimed >= self.max_pole_reflex)

    def to_json(self) -> dict:
        return {"n_poles": self.n_poles, "planted": self.planted, "found": self.found,
                "distinct_reflex": self.distinct_reflex, "required": self.required_corners,
                "max_pole_reflex": self.max_pole_reflex, "required_max": self.required_max,
                "claimed": self.claimed, "ok": self.ok, "missing": self.missing,
                "failed": self.failed[:20]}


def lower_bound_audit(lb, d: OpvrDrawing) -> LowerBoundAudit:
    """Check that the planted configurations force enough reflex corners.

    Every planted configuration needs a reflex corner on one of its poles,
    on the polygon arc facing its interior; the corners found must be
    distinct and the busiest pole must reach the averaging bound.
    """
    from .generators import planted_matches  # local: generators imports heavy helpers

    g = lb.graph
    matches = planted_matches(lb, detect_all(g))
    corners: set[tuple[str, Point]] = set()
    missing, failed = [], []
    found = 0
    for key, cfg in matches.items():
        if cfg is None:
            missing.append(str(key))
            continue
        found += 1
        au = boundary_audit(g, d, cfg)
        if not au.holds or not au.short_arc_reflex:
            failed.append(cfg.name)
        corners.update(au.short_arc_reflex)
    per_pole = defaultdict(int)
    for v, poly in d.polygons.items():
        if v in lb.poles:
            per_pole[v] = len(reflex_corners(poly))
    return LowerBoundAudit(lb.n_poles, len(lb.planted), found, len(corners),
                           max(per_pole.values(), default=0), d.complexity, missing, failed)
