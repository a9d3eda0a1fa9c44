"""Wall-clock run of the full pipeline on a 2000-vertex corpus instance.

    python scripts/timing_n2000.py [n] [seed]
"""

import json
import sys
import time

from opvr.generators import kite_corpus
from opvr.pipeline import run_pipeline


def main(args: list[str]) -> None:
    n = int(args[0]) if args else 2000
    seed = int(args[1]) if len(args) > 1 else 7
    t = time.perf_counter()
    g = kite_corpus(n, seed, kites=n // 10, lenses=n // 30, hexagons=n // 60)[0]
    gen = time.perf_counter() - t
    run = run_pipeline(g)
    summary = run.summary()
    summary["timing"]["generate"] = round(gen, 3)
    summary["total_seconds"] = round(time.perf_counter() - t, 1)
    print(json.dumps(summary, indent=1))


if __name__ == "__main__":
    main(sys.argv[1:])
