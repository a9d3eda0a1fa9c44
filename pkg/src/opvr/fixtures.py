"""Small hand-drawn graphs with known configuration content.

Each builder places points, names crossings where drawn edges meet and
derives the rotation system from the picture.
"""

from __future__ import annotations

import math

from .builder import embed_from_coordinates, saturate_faces
from .generators import _Plan, _plant_hexagon, _plant_lens
from .graph import OnePlaneGraph


def single_vertex() -> OnePlaneGraph:
    return OnePlaneGraph(("v",), {}, {}, {"v": ()}, ("v", "v"))


def k4_plane() -> OnePlaneGraph:
    pos = {"u": (0, 0), "v": (6, 0), "w": (3, 5), "x": (3, 2)}
    edges = {f"{a}{b}": (a, b) for a, b in ("uv", "vw", "wu", "ux", "vx", "wx")}
    return embed_from_coordinates(pos, list("uvwx"), edges, {}).build()


def k4_crossed() -> OnePlaneGraph:
    """K4 as a square with crossing diagonals; the crossing lens holds no vertex."""
    pos = {"u": (0, 0), "v": (4, 0), "w": (4, 4), "z": (0, 4), "p": (2, 2)}
    edges = {"uv": ("u", "v"), "vw": ("v", "w"), "wz": ("w", "z"), "zu": ("z", "u"),
             "uw": ("u", "w"), "vz": ("v", "z")}
    return embed_from_coordinates(pos, list("uvwz"), edges, {"p": ("uw", "vz")}).build()


def single_b() -> OnePlaneGraph:
    """b(u,z): (u,v) crosses (w,z) at p, the pole edge (u,z) arches over v and w."""
    pos = {"u": (0, 0), "z": (6, 0), "w": (2, 3), "v": (4, 3), "p": (3, 2.25)}
    edges = {"uv": ("u", "v"), "wz": ("w", "z"), "uz": ("u", "z")}
    bends = {("u", "z"): [(-1, 6), (7, 6)]}
    b = embed_from_coordinates(pos, list("uvwz"), edges, {"p": ("uv", "wz")}, bends,
                               outer_at=("u", -math.pi / 2))
    return b.build()


def triangle_t() -> OnePlaneGraph:
    """Triangle u, v, w holding one T-configuration t(u,v,w) and nothing else."""
    plan = _Plan(["u", "v", "w"], {"u-v": ("u", "v"), "v-w": ("v", "w"), "u-w": ("u", "w")},
                 {"u": (0.0, 0.0), "v": (12.0, 0.0), "w": (6.0, 10.0)})
    _plant_hexagon(plan, "t", "u", "v", "w")
    b = embed_from_coordinates(plan.pos, plan.vertices, plan.edges, plan.crossings)
    saturate_faces(b, prefix="e")
    return b.build()


def _octahedron_plan() -> _Plan:
    pos = {"o1": (0.0, 0.0), "o2": (24.0, 0.0), "o3": (12.0, 20.0),
           "u": (7.0, 4.0), "x": (17.0, 4.0), "z": (12.0, 12.0)}
    pairs = [("o1", "o2"), ("o2", "o3"), ("o1", "o3"), ("u", "x"), ("x", "z"), ("u", "z"),
             ("o1", "u"), ("o2", "u"), ("o2", "x"), ("o3", "x"), ("o3", "z"), ("o1", "z")]
    return _Plan(list(pos), {f"{a}-{b}": (a, b) for a, b in pairs}, pos)


def t_with_dependent_b() -> OnePlaneGraph:
    """Triangle u, x, z with lenses hugging each side from outside.

    Each lens is a B-configuration; the curve through the three lens
    crossings is a T-configuration t(u,x,z) sharing a crossing with b(u,x).
    """
    plan = _octahedron_plan()
    for s, t, o in (("u", "x", "o2"), ("x", "z", "o3"), ("u", "z", "o1")):
        _plant_lens(plan, f"l{s}{t}", s, t, o)
    b = embed_from_coordinates(plan.pos, plan.vertices, plan.edges, plan.crossings)
    saturate_faces(b, prefix="e")
    return b.build()


def b_inside_t() -> OnePlaneGraph:
    """t(u,v,w) whose interior holds a small triangle carrying b(m0,m1)."""
    plan = _Plan(["u", "v", "w"], {"u-v": ("u", "v"), "v-w": ("v", "w"), "u-w": ("u", "w")},
                 {"u": (0.0, 0.0), "v": (24.0, 0.0), "w": (12.0, 20.0)})
    _plant_hexagon(plan, "t", "u", "v", "w")
    for name, p in (("m0", (10.0, 6.0)), ("m1", (14.0, 6.0)), ("m2", (12.0, 9.0))):
        plan.vertex(name, p)
    for a, c in (("m0", "m1"), ("m1", "m2"), ("m0", "m2"), ("m0", "th0b"), ("m1", "th0a")):
        plan.edge(a, c)
    _plant_lens(plan, "lm", "m0", "m1", "m2")
    b = embed_from_coordinates(plan.pos, plan.vertices, plan.edges, plan.crossings)
    saturate_faces(b, prefix="e")
    return b.build()


def w_pair(pole_edge: bool = False) -> OnePlaneGraph:
    """w(u,z): crossings p above and q below the four inner vertices.

    With ``pole_edge`` the edge (u,z) wraps around underneath, which makes
    b(u,z) at p a B-configuration dependent on the W.
    """
    pos = {"u": (0, 0), "z": (10, 0), "p": (5, 3), "q": (5, -3),
           "a": (6, 1), "b": (4, 1), "c": (4, -1), "d": (6, -1)}
    edges = {"ua": ("u", "a"), "zb": ("z", "b"), "ud": ("u", "d"), "zc": ("z", "c"),
             "ab": ("a", "b"), "cd": ("c", "d"), "bc": ("b", "c"), "ad": ("a", "d"),
             "ac": ("a", "c"), "ub": ("u", "b"), "uc": ("u", "c"), "za": ("z", "a"),
             "zd": ("z", "d")}
    bends = {}
    if pole_edge:
        edges["uz"] = ("u", "z")
        bends[("u", "z")] = [(-1, -6), (11, -6)]
    b = embed_from_coordinates(pos, list("uzabcd"), edges, {"p": ("ua", "zb"), "q": ("ud", "zc")},
                               bends, outer_at=("u", math.pi))
    return b.build()


ALL = {
    "single_vertex": single_vertex,
    "k4_plane": k4_plane,
    "k4_crossed": k4_crossed,
    "single_b": single_b,
    "triangle_t": triangle_t,
    "t_with_dependent_b": t_with_dependent_b,
    "b_inside_t": b_inside_t,
    "w_pair": w_pair,
    "w_pair_with_b": lambda: w_pair(True),
}
