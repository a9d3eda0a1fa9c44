"""Table of |F|, 4n_p-8 and k* over the lower-bound family.

    python scripts/sweep_lowerbound.py 9 12 15
"""

import sys
import time

from opvr.configs import detect_all
from opvr.generators import lower_bound_graph, planted_matches
from opvr.pipeline import run_pipeline
from opvr.verify import lower_bound_audit


def main(args: list[str]) -> None:
    values = [int(a) for a in args] or [9, 12, 15]
    print(f"{'n_p':>4} {'B':>4} {'T':>4} {'|F|':>4} {'4n_p-8':>7} {'planted':>8} {'k*':>3} "
          f"{'corners':>8} {'verified':>8} {'secs':>6}")
    for n_p in values:
        t = time.perf_counter()
        lb = lower_bound_graph(n_p)
        found = detect_all(lb.graph)
        hits = sum(c is not None for c in planted_matches(lb, found).values())
        run = run_pipeline(lb.graph)
        audit = lower_bound_audit(lb, run.drawing)
        print(f"{n_p:>4} {sum(c.kind == 'B' for c in found):>4} {sum(c.kind == 'T' for c in found):>4} "
              f"{len(run.F):>4} {4 * n_p - 8:>7} {hits:>8} {run.k_star:>3} "
              f"{audit.distinct_reflex:>8} {str(run.verified):>8} {time.perf_counter() - t:>6.1f}")


if __name__ == "__main__":
    main(sys.argv[1:])
