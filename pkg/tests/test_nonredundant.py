import pytest
from hypothesis import given, settings, strategies as st

from opvr import fixtures
from opvr.configs import ForbiddenConfig, detect_all
from opvr.generators import kite_corpus, lower_bound_graph, planted_matches
from opvr.nonredundant import (Entry, MatchingError, NonRedundantSet, build_aux_graph, build_F,
                               check_lemma3, compute_assignment, has_separating_t,
                               hall_check_bruteforce)


def fake(kind, poles, crossings=()):
    return ForbiddenConfig(kind, tuple(poles), tuple(crossings), (), frozenset())


def fake_set(pole_lists):
    entries = [Entry(fake("B" if len(p) == 2 else "T", p, (f"x{i}",)))
               for i, p in enumerate(pole_lists)]
    return NonRedundantSet(entries, frozenset(q for p in pole_lists for q in p), 0, 0, 0)


def reduce(g):
    configs = detect_all(g)
    F = build_F(g, configs)
    return configs, F, build_aux_graph(g, F)


def test_dependent_t_is_left_out():
    configs, F, _ = reduce(fixtures.t_with_dependent_b())
    names = {e.name for e in F.entries}
    assert any(e.kind == "B" and set(e.poles) == {"u", "x"} for e in F.entries)
    assert not any(e.kind == "T" for e in F.entries)
    assert len(F.dropped_t) == 1 and F.dropped_t[0].name not in names


def test_lower_bound_graph_counts():
    # the construction is supposed to yield the extremal set with 21 B and 7 T
    _, F, _ = reduce(lower_bound_graph(9).graph)
    assert (F.beta, F.tau, F.omega, len(F)) == (21, 7, 0, 28)


def test_plane_graph_has_empty_set():
    configs, F, aux = reduce(fixtures.k4_plane())
    assert len(F) == 0 and aux.m == 0
    rep = check_lemma3(F, aux, False)
    assert rep.holds and rep.aux_ok


def test_single_b_aux_graph():
    _, F, aux = reduce(fixtures.single_b())
    assert (aux.n, aux.m) == (2, 1)
    rep = check_lemma3(F, aux, False)
    assert not rep.applicable and "degenerate" in rep.note


def test_w_copies():
    _, F, aux = reduce(fixtures.w_pair())
    assert F.omega == 2 and len(F) == 2
    A = compute_assignment(F)
    assert {A.pole_of(e) for e in F.entries} == {"u", "z"}

    _, F, aux = reduce(fixtures.w_pair(True))
    assert (F.beta, F.omega, len(F)) == (1, 1, 2)
    assert aux.shared == 1
    assert aux.m == F.beta + 3 * F.tau + 2 * F.omega - aux.shared


def test_assignment_on_lower_bound_graph():
    _, F, _ = reduce(lower_bound_graph(9).graph)
    A = compute_assignment(F)
    assert len(A.pairs) == len(F) and A.max_load <= 5
    for e, p in A.pairs:
        assert p in e.poles


def test_small_assignments():
    A = compute_assignment(fake_set([("u", "z")]))
    assert A.max_load == 1
    star = fake_set([("u", f"z{i}") for i in range(5)])
    assert compute_assignment(star).max_load <= 5
    assert hall_check_bruteforce(star)


def test_hall_checker():
    assert hall_check_bruteforce([])
    assert not hall_check_bruteforce(fake_set([("u",)] * 6))
    assert hall_check_bruteforce(fake_set([("u",)] * 5))
    with pytest.raises(ValueError):
        hall_check_bruteforce(fake_set([("u", "v")] * 21))


def test_hall_on_one_face_of_lower_bound_graph():
    lb = lower_bound_graph(9)
    hits = planted_matches(lb, detect_all(lb.graph)).values()
    # the T planted in one face together with the three lenses around it
    group = [Entry(c) for c in hits if c.crossings[0].startswith("f0")]
    assert sorted(e.kind for e in group) == ["B", "B", "B", "T"]
    assert hall_check_bruteforce(group)


@settings(max_examples=60)
@given(st.lists(st.lists(st.sampled_from("abcdef"), min_size=1, max_size=3, unique=True),
                max_size=16))
def test_flow_agrees_with_hall(pole_lists):
    F = fake_set([tuple(p) for p in pole_lists])
    hall = hall_check_bruteforce(F)
    try:
        A = compute_assignment(F)
    except MatchingError:
        assert not hall
        return
    assert hall
    assert A.max_load <= 5
    assert all(p in e.poles for e, p in A.pairs)
    assert sorted(e.name for e, _ in A.pairs) == sorted(e.name for e in F.entries)


@settings(max_examples=20)
@given(n=st.integers(6, 40), seed=st.integers(0, 10_000), lenses=st.integers(0, 4),
       hexagons=st.integers(0, 3))
def test_set_invariants(n, seed, lenses, hexagons):
    g = kite_corpus(n, seed, kites=2, lenses=lenses, hexagons=hexagons)[0]
    configs, F, aux = reduce(g)
    bs = [c for c in configs if c.kind == "B"]
    b_cross = {p for b in bs for p in b.crossings}
    keys = {e.config.key for e in F.entries}
    assert all(b.key in keys for b in bs)
    for t in (c for c in configs if c.kind == "T"):
        assert (t.key in keys) == (not b_cross & set(t.crossings))
    ws = [c for c in configs if c.kind == "W"]
    if ws:
        (w,) = ws
        assert F.omega == max(0, 2 - sum(bool(set(b.crossings) & set(w.crossings)) for b in bs))
    else:
        assert F.omega == 0
    assert len(F) == F.beta + F.tau + F.omega
    assert aux.m == aux.contributions - aux.shared
    assert all(v <= 2 for v in aux.multiplicity().values())
    rep = check_lemma3(F, aux, has_separating_t(g, configs))
    assert rep.holds and rep.aux_ok and rep.characterization_ok
