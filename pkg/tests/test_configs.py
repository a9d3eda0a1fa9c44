from collections import deque

import pytest
from hypothesis import given, settings, strategies as st

from opvr import fixtures
from opvr.configs import (all_poles, check_properties, dependent, detect_all, is_separating_t,
                          region_split, walk_from_nodes)
from opvr.generators import kite_corpus, lower_bound_graph, planted_matches


def flood_inside(g, curve):
    """Faces not reachable from the outer face without crossing the curve."""
    cut = {frozenset(d) for d in curve}
    seen = {g.outer_face}
    todo = deque(seen)
    while todo:
        f = todo.popleft()
        for d in g.faces[f].darts:
            if frozenset(d) in cut:
                continue
            h = g.face_of[(d[1], d[0])]
            if h not in seen:
                seen.add(h)
                todo.append(h)
    return frozenset(f.id for f in g.faces) - seen


def by_kind(configs, kind):
    return [c for c in configs if c.kind == kind]


def test_outer_triangle_encloses_every_inner_face():
    g = kite_corpus(9, 3)[0]
    inside, outside = region_split(g, walk_from_nodes(["v0", "v1", "v2"]))
    assert outside == {g.outer_face}
    assert len(inside) == len(g.faces) - 1


def test_single_b_interior_holds_its_witnesses():
    g = fixtures.single_b()
    (b,) = detect_all(g)
    assert b.kind == "B" and set(b.poles) == {"u", "z"} and b.crossings == ("p",)
    for v in ("v", "w"):
        assert g.node_faces[v] <= b.interior_faces


def test_crossing_lens_without_vertices():
    g = fixtures.k4_crossed()
    curve = walk_from_nodes(["u", "p", "z"])
    inside, _ = region_split(g, curve)
    assert inside == flood_inside(g, curve)
    assert not any(g.node_faces[v] <= inside for v in g.vertices)
    assert detect_all(g) == []


def test_triangle_holds_one_t():
    configs = detect_all(fixtures.triangle_t())
    assert [(c.kind, set(c.poles)) for c in configs] == [("T", {"u", "v", "w"})]


def test_plane_graph_has_no_configurations():
    assert detect_all(fixtures.k4_plane()) == []
    assert detect_all(kite_corpus(30, 5)[0]) == []


def test_kites_alone_are_harmless():
    g = kite_corpus(20, 11, kites=3)[0]
    assert len(g.crossings) == 3
    assert detect_all(g) == []


def test_planted_lens_is_the_only_configuration():
    g = kite_corpus(20, 11, lenses=1)[0]
    configs = detect_all(g)
    assert len(configs) == 1 and configs[0].kind == "B"


def test_dependence():
    configs = detect_all(fixtures.t_with_dependent_b())
    (t,) = by_kind(configs, "T")
    b_ux = next(c for c in by_kind(configs, "B") if set(c.poles) == {"u", "x"})
    assert set(t.poles) == {"u", "x", "z"}
    assert dependent(t, b_ux) and dependent(b_ux, t)
    assert dependent(t, t)


def test_planted_configurations_in_different_faces_are_independent():
    lb = lower_bound_graph(9)
    hits = list(planted_matches(lb, detect_all(lb.graph)).values())
    bs = [c for c in hits if c.kind == "B"]
    for i, x in enumerate(bs):
        for y in bs[i + 1:]:
            assert not dependent(x, y)
            assert not (set(x.crossings) & set(y.crossings))


def test_separating_t():
    lb = lower_bound_graph(9)
    configs = detect_all(lb.graph)
    poles = all_poles(configs)
    planted_t = [c for c in planted_matches(lb, configs).values() if c.kind == "T"]
    assert planted_t and not any(is_separating_t(lb.graph, t, poles) for t in planted_t)

    g = fixtures.b_inside_t()
    configs = detect_all(g)
    (t,) = by_kind(configs, "T")
    assert is_separating_t(g, t, all_poles(configs))
    assert {"m0", "m1"} <= {v for v in g.vertices if g.node_faces[v] <= t.interior_faces}

    g = fixtures.triangle_t()
    (t,) = detect_all(g)
    assert not is_separating_t(g, t, all_poles([t]))
    with pytest.raises(ValueError):
        is_separating_t(g, detect_all(fixtures.single_b())[0], [])


def test_w_pair():
    configs = detect_all(fixtures.w_pair())
    ws = by_kind(configs, "W")
    assert len(ws) == 1
    assert set(ws[0].poles) == {"u", "z"} and set(ws[0].crossings) == {"p", "q"}
    assert set(ws[0].witnesses) == {"a", "b", "c", "d"}


@pytest.mark.parametrize("make", [lambda: lower_bound_graph(9).graph, fixtures.w_pair,
                                  fixtures.k4_plane, lambda: fixtures.w_pair(True),
                                  fixtures.t_with_dependent_b])
def test_structural_properties(make):
    rep = check_properties(make())
    assert rep.passed, rep.violations


def check_config_invariants(g, c):
    assert len(c.poles) == {"B": 2, "W": 2, "T": 3}[c.kind]
    assert len(c.crossings) == {"B": 1, "W": 2, "T": 3}[c.kind]
    nodes = [a for a, _ in c.boundary]
    assert len(nodes) == len(set(nodes)), "boundary is not simple"
    for (a, b), (x, _) in zip(c.boundary, c.boundary[1:] + c.boundary[:1]):
        assert b == x and (a, b) in g.face_of
    assert g.outer_face not in c.interior_faces
    for v in c.witnesses:
        assert g.node_faces[v] <= c.interior_faces


@pytest.mark.parametrize("name", sorted(fixtures.ALL))
def test_fixture_invariants(name):
    g = fixtures.ALL[name]()
    for c in detect_all(g):
        check_config_invariants(g, c)
        assert c.interior_faces == flood_inside(g, c.boundary)


@settings(max_examples=25)
@given(n=st.integers(6, 40), seed=st.integers(0, 10_000), kites=st.integers(0, 4),
       lenses=st.integers(0, 3), hexagons=st.integers(0, 2))
def test_detected_configurations_are_well_formed(n, seed, kites, lenses, hexagons):
    g = kite_corpus(n, seed, kites=kites, lenses=lenses, hexagons=hexagons)[0]
    configs = detect_all(g)
    assert len(configs) >= lenses + hexagons
    for c in configs:
        check_config_invariants(g, c)
        assert c.interior_faces == flood_inside(g, c.boundary)
    assert check_properties(g, configs).passed
