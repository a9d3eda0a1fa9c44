import copy
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st
from shapely.geometry import LineString, Polygon

from opvr import fixtures
from opvr.compact import compact
from opvr.configs import detect_all
from opvr.generators import kite_corpus, lower_bound_graph
from opvr.ortho import min_complexity
from opvr.verify import (boundary_audit, lower_bound_audit, point_in_polygon, reflex_corners,
                         tally_turns, verify)


def draw(g):
    return compact(g, min_complexity(g)[1])


def shapely_problems(g, d):
    """Overlap-type defects found with an independent geometry library."""
    out = []
    polys = {v: Polygon(p) for v, p in d.polygons.items()}
    for v, p in polys.items():
        if not p.is_valid:
            out.append(f"invalid {v}")
    for (v, p), (w, q) in combinations(sorted(polys.items()), 2):
        if p.intersects(q):
            out.append(f"polygons {v} {w}")
    lines = {e: LineString(seg) for e, seg in d.visibilities.items()}
    for e, line in lines.items():
        for v, p in polys.items():
            if v in g.edges[e]:
                if not line.touches(p):
                    out.append(f"visibility {e} enters {v}")
            elif line.intersects(p):
                out.append(f"visibility {e} meets {v}")
    pairs = {frozenset(pair) for pair in g.crossings.values()}
    for (e, a), (f, b) in combinations(sorted(lines.items()), 2):
        if frozenset((e, f)) in pairs:
            if not a.crosses(b):
                out.append(f"{e} {f} do not cross")
        elif a.intersects(b):
            out.append(f"{e} {f} meet")
    return out


DRAWN = sorted(set(fixtures.ALL) - {"single_vertex"})


@pytest.mark.parametrize("name", DRAWN)
def test_clean_drawings_agree_with_shapely(name):
    g = fixtures.ALL[name]()
    d = draw(g)
    assert verify(g, d).ok
    assert shapely_problems(g, d) == []


def test_k4_passes_with_no_reflex_corners():
    g = fixtures.k4_plane()
    r = verify(g, draw(g))
    assert r.ok and r.complexity == 0


def test_single_t_drawing_has_one_reflex_corner():
    g = fixtures.triangle_t()
    r = verify(g, draw(g))
    assert r.ok and r.complexity == 1


def test_polygon_over_foreign_visibility_fails():
    g = fixtures.k4_plane()
    d = copy.deepcopy(draw(g))
    (x1, y1), (x2, y2) = d.visibilities["uv"]
    mx, my = (x1 + x2) // 2, (y1 + y2) // 2
    # move x's polygon onto the middle of the visibility of (u, v)
    d.polygons["x"] = [(mx - 1, my - 1), (mx + 1, my - 1), (mx + 1, my + 1), (mx - 1, my + 1)]
    r = verify(g, d)
    assert not r.ok
    assert any("uv" in v and "x" in v for v in r.violations)
    assert any("uv" in p and "x" in p for p in shapely_problems(g, d))


def test_understated_complexity_fails():
    g = fixtures.triangle_t()
    d = draw(g)
    d.complexity = 0
    r = verify(g, d)
    assert not r.ok and any("claims complexity" in v for v in r.violations)


def test_missing_visibility_fails():
    g = fixtures.k4_plane()
    d = draw(g)
    del d.visibilities["ux"]
    assert any("ux" in v for v in verify(g, d).violations)


def test_swapped_rotation_fails():
    g = fixtures.k4_plane()
    d = draw(g)
    h = copy.deepcopy(g)
    rot = dict(h.rotation)
    rot["x"] = list(reversed(rot["x"]))
    object.__setattr__(h, "rotation", rot)
    assert any(v.startswith("attachments around x") for v in verify(h, d).violations)


def test_report_is_pure():
    g = fixtures.w_pair(True)
    d = draw(g)
    assert verify(g, d).to_json() == verify(g, d).to_json()


def test_polygon_helpers():
    square = [(0, 0), (2, 0), (2, 2), (0, 2)]
    ell = [(0, 0), (4, 0), (4, 2), (2, 2), (2, 4), (0, 4)]
    assert reflex_corners(square) == [] and reflex_corners(ell) == [(2, 2)]
    assert point_in_polygon((1, 1), square)
    assert not point_in_polygon((2, 1), square)
    assert not point_in_polygon((3, 3), ell)


def test_rectangle_trace_turns_four_times():
    rect = [((0, 0), "corner"), ((0, 3), "corner"), ((5, 3), "corner"), ((5, 0), "corner")]
    r, a, k, closed = tally_turns(rect)
    assert (r, a, k, closed) == (4, 0, 0, True)
    assert r == k + a + 4


@pytest.mark.parametrize("name", DRAWN)
def test_boundary_identity_on_fixtures(name):
    g = fixtures.ALL[name]()
    d = draw(g)
    for c in detect_all(g):
        au = boundary_audit(g, d, c)
        assert au.holds, au.to_json()
        check_shape(c.kind, au)


def check_shape(kind, au):
    if kind == "B":
        assert au.crossing_turns == 1 and au.attachments >= 4 and au.reflex_turns >= 9
    elif kind == "T":
        assert au.crossing_turns == 3 and au.attachments >= 6 and au.reflex_turns >= 13
    else:
        assert au.crossing_turns == 2


@pytest.mark.parametrize("n_p", [9, 12])
def test_lower_bound_audit(n_p):
    lb = lower_bound_graph(n_p)
    d = draw(lb.graph)
    au = lower_bound_audit(lb, d)
    assert au.ok, au.to_json()
    assert au.distinct_reflex >= 4 * n_p - 8 and au.max_pole_reflex >= 4
    for c in detect_all(lb.graph):
        check_shape(c.kind, boundary_audit(lb.graph, d, c))


def test_lower_bound_audit_rejects_claim_of_three():
    lb = lower_bound_graph(9)
    d = draw(lb.graph)
    d.complexity = 3
    assert not lower_bound_audit(lb, d).ok
    assert not verify(lb.graph, d).ok


@settings(max_examples=15)
@given(n=st.integers(4, 30), seed=st.integers(0, 10_000), kites=st.integers(0, 4),
       lenses=st.integers(0, 2), hexagons=st.integers(0, 2))
def test_verifier_agrees_with_shapely(n, seed, kites, lenses, hexagons):
    g = kite_corpus(n, seed, kites=kites, lenses=lenses, hexagons=hexagons)[0]
    d = draw(g)
    assert verify(g, d).ok and shapely_problems(g, d) == []
    for c in detect_all(g):
        au = boundary_audit(g, d, c)
        assert au.holds
        check_shape(c.kind, au)
