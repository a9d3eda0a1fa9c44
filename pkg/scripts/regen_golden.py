"""Rewrite the pinned SVG snapshots in tests/golden.

Only run this after an intentional change to compaction or rendering, and
review the diff of the regenerated files.
"""

from pathlib import Path

from opvr import fixtures
from opvr.compact import compact
from opvr.generators import lower_bound_graph
from opvr.ortho import min_complexity
from opvr.render import to_svg

GOLDEN = Path(__file__).resolve().parent.parent / "tests" / "golden"

CASES = {
    "single_vertex": fixtures.single_vertex,
    "k4_plane": fixtures.k4_plane,
    "lowerbound9": lambda: lower_bound_graph(9).graph,
}


def render(name: str) -> str:
    g = CASES[name]()
    rep = min_complexity(g)[1] if g.edges else None
    return to_svg(compact(g, rep))


def main() -> None:
    GOLDEN.mkdir(exist_ok=True)
    for name in CASES:
        (GOLDEN / f"{name}.svg").write_text(render(name))
        print("wrote", GOLDEN / f"{name}.svg")


if __name__ == "__main__":
    main()
