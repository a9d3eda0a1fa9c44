import pytest
from hypothesis import given, settings, strategies as st

from opvr.configs import detect_all
from opvr.generators import (kite_corpus, lower_bound_graph, nested_triangles, planted_matches,
                             validate_marking)
from opvr.graph import is_three_connected, serialize
from opvr.ortho import min_complexity


def test_level_one_is_a_triangle():
    s = nested_triangles(1)
    assert len(s.graph.vertices) == 3 and len(s.t_faces) == 1


@pytest.mark.parametrize("i, n, m, t", [(2, 6, 12, 4), (3, 9, 21, 7), (5, 15, 39, 13)])
def test_nested_triangle_sizes(i, n, m, t):
    s = nested_triangles(i)
    assert (len(s.graph.vertices), len(s.graph.edges), len(s.t_faces)) == (n, m, t)
    assert len(s.graph.edges) == 3 * n - 6  # maximal planar
    validate_marking(s)
    sides = [frozenset(pair) for f in s.t_faces for pair in zip(f, f[1:] + f[:1])]
    assert len(sides) == len(set(sides)) == len(s.graph.edges)


def test_nested_triangles_rejects_level_zero():
    with pytest.raises(ValueError):
        nested_triangles(0)


@pytest.mark.parametrize("n_p", [9, 12])
def test_lower_bound_graph_plants_every_configuration(n_p):
    lb = lower_bound_graph(n_p)
    assert lb.expected_counts == (3 * n_p - 6, n_p - 2)
    assert len(lb.planted) == 4 * n_p - 8
    hits = planted_matches(lb, detect_all(lb.graph))
    assert all(c is not None for c in hits.values())
    assert is_three_connected(lb.graph)


def test_lower_bound_guard():
    with pytest.raises(ValueError, match="n_p > 8"):
        lower_bound_graph(6)
    with pytest.warns(UserWarning, match="n_p > 8"):
        lb = lower_bound_graph(6, relaxed=True)
    assert lb.warning
    with pytest.raises(ValueError):
        lower_bound_graph(10)


def test_k4_base_case():
    g = kite_corpus(4, 0)[0]
    assert len(g.vertices) == 4 and len(g.edges) == 6
    assert detect_all(g) == []


def test_kites_give_a_rectangle_drawing():
    g = kite_corpus(25, 42, kites=3)[0]
    assert len(g.crossings) == 3 and detect_all(g) == []
    assert min_complexity(g)[0] == 0


def test_generation_is_reproducible():
    a = kite_corpus(40, 9, count=2, kites=4, lenses=2, hexagons=1)
    b = kite_corpus(40, 9, count=2, kites=4, lenses=2, hexagons=1)
    assert [serialize(x) for x in a] == [serialize(x) for x in b]
    assert serialize(a[0]) != serialize(a[1])
    assert serialize(lower_bound_graph(9).graph) == serialize(lower_bound_graph(9).graph)


@settings(max_examples=20)
@given(n=st.integers(4, 60), seed=st.integers(0, 10_000), kites=st.integers(0, 6),
       lenses=st.integers(0, 3), hexagons=st.integers(0, 2))
def test_corpus_instances_are_three_connected(n, seed, kites, lenses, hexagons):
    (g,) = kite_corpus(n, seed, kites=kites, lenses=lenses, hexagons=hexagons)
    assert is_three_connected(g)
    # a lens brings a connector crossing; gadgets that find no room are skipped
    assert len(g.crossings) <= kites + 2 * lenses + 3 * hexagons
