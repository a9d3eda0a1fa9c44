"""Shared builders for the unit tests."""

from opvr.graph import OnePlaneGraph


def drop_edges(g: OnePlaneGraph, drop) -> OnePlaneGraph:
    """Remove uncrossed edges; the result may be disconnected (and then invalid)."""
    drop = set(drop)
    crossed = {e for pair in g.crossings.values() for e in pair}
    assert not drop & crossed
    edges = {e: ends for e, ends in g.edges.items() if e not in drop}
    gone = {frozenset(g.edges[e]) for e in drop}
    rotation = {n: [m for m in r if frozenset((n, m)) not in gone] for n, r in g.rotation.items()}
    outer = g.outer
    if frozenset(outer) in gone:
        outer = next((n, r[0]) for n, r in sorted(rotation.items()) if r)
    return OnePlaneGraph(g.vertices, edges, g.crossings, rotation, outer)


def to_networkx(g: OnePlaneGraph):
    import networkx as nx

    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges.values())
    return h


def plane_triangle_doc() -> dict:
    return {
        "vertices": ["a", "b", "c"],
        "edges": [{"id": "ab", "ends": ["a", "b"]}, {"id": "bc", "ends": ["b", "c"]},
                  {"id": "ca", "ends": ["c", "a"]}],
        "crossings": [],
        "rotation": {
            "a": [{"edge": "ab", "toward": "b"}, {"edge": "ca", "toward": "c"}],
            "b": [{"edge": "bc", "toward": "c"}, {"edge": "ab", "toward": "a"}],
            "c": [{"edge": "ca", "toward": "a"}, {"edge": "bc", "toward": "b"}],
        },
        "outer_face": {"at": "a", "edge": "ab"},
    }


def single_crossing_doc() -> dict:
    """Edges (u,v) and (w,z) crossing at p, plus the edge (u,z)."""
    return {
        "vertices": ["u", "v", "w", "z"],
        "edges": [{"id": "uv", "ends": ["u", "v"]}, {"id": "wz", "ends": ["w", "z"]},
                  {"id": "uz", "ends": ["u", "z"]}],
        "crossings": [{"dummy": "p", "edges": ["uv", "wz"]}],
        "rotation": {
            "u": [{"edge": "uz", "toward": "z"}, {"edge": "uv", "toward": "p"}],
            "v": [{"edge": "uv", "toward": "p"}],
            "w": [{"edge": "wz", "toward": "p"}],
            "z": [{"edge": "wz", "toward": "p"}, {"edge": "uz", "toward": "u"}],
            "p": [{"edge": "uv", "toward": "u"}, {"edge": "wz", "toward": "z"},
                  {"edge": "uv", "toward": "v"}, {"edge": "wz", "toward": "w"}],
        },
        "outer_face": {"at": "u", "edge": "uz"},
    }
