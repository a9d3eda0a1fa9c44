import json
import sys
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

from opvr import fixtures
from opvr.compact import OpvrDrawing, compact
from opvr.generators import kite_corpus, lower_bound_graph
from opvr.ortho import min_complexity
from opvr.render import SvgOptions, to_svg
from opvr.verify import verify

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "scripts"))
import regen_golden  # noqa: E402

GOLDEN = Path(__file__).resolve().parent / "golden"


def draw(g):
    k, rep = min_complexity(g)
    return k, rep, compact(g, rep)


def test_single_vertex_is_a_unit_square():
    d = compact(fixtures.single_vertex())
    assert d.polygons == {"v": [(0, 0), (1, 0), (1, 1), (0, 1)]}
    assert d.grid == (1, 1) and d.complexity == 0
    assert verify(fixtures.single_vertex(), d).ok


def test_k4_drawing_is_clean():
    g = fixtures.k4_plane()
    k, _, d = draw(g)
    rep = verify(g, d)
    assert k == 0 and rep.ok, rep.violations
    assert all(len(p) == 4 for p in d.polygons.values())
    assert rep.grid_ratio <= 40


def test_lower_bound_drawing_matches_representation():
    g = lower_bound_graph(9).graph
    k, rep, d = draw(g)
    report = verify(g, d)
    assert report.ok, report.violations[:5]
    assert d.reflex_counts() == rep.reflex()
    assert report.complexity == k == d.complexity


def test_json_round_trip():
    _, _, d = draw(fixtures.w_pair(True))
    doc = json.loads(d.dumps())
    assert set(doc) >= {"polygons", "visibilities", "grid", "complexity"}
    assert all(set(v) == {"edge", "from", "to"} for v in doc["visibilities"])
    again = OpvrDrawing.from_json(doc)
    assert again == d


def test_drawing_is_deterministic():
    g = lower_bound_graph(9).graph
    assert draw(g)[2].dumps() == draw(g)[2].dumps()


@pytest.mark.parametrize("name", sorted(regen_golden.CASES))
def test_svg_snapshot(name):
    assert regen_golden.render(name) == (GOLDEN / f"{name}.svg").read_text()


def test_svg_options():
    d = compact(fixtures.single_vertex())
    plain = to_svg(d, SvgOptions(labels=False, scale=10))
    assert "<text" not in plain and 'width="30"' in plain


@pytest.mark.parametrize("name", sorted(set(fixtures.ALL) - {"single_vertex"}))
def test_fixture_drawings(name):
    g = fixtures.ALL[name]()
    k, rep, d = draw(g)
    report = verify(g, d)
    assert report.ok, report.violations[:5]
    assert d.reflex_counts() == rep.reflex()


@settings(max_examples=15)
@given(n=st.integers(4, 40), seed=st.integers(0, 10_000), kites=st.integers(0, 5),
       lenses=st.integers(0, 3), hexagons=st.integers(0, 2))
def test_compaction_properties(n, seed, kites, lenses, hexagons):
    g = kite_corpus(n, seed, kites=kites, lenses=lenses, hexagons=hexagons)[0]
    k, rep, d = draw(g)
    report = verify(g, d)
    assert report.ok, report.violations[:5]
    assert d.reflex_counts() == rep.reflex()
    assert max(d.reflex_counts().values()) == k
    assert min(x for p in d.polygons.values() for x, _ in p) == 0
    assert report.grid_ratio <= 40
