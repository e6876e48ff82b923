"""Compare branch and bound against exhaustive search on random graphs.

    python scripts/bench_sparing.py --graphs 200 --max-n 18 --seed 0
"""

import argparse
import random
import statistics
import time

from weakiasi.graph import random_graph
from weakiasi.sparing import sparing_branch_and_bound, sparing_exhaustive


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--graphs", type=int, default=200)
    parser.add_argument("--max-n", type=int, default=18)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    by_n: dict[int, list[tuple[int, int, float, float]]] = {}
    mismatches = 0
    for _ in range(args.graphs):
        g = random_graph(rng.randint(4, args.max_n), rng.uniform(0.1, 0.7), rng)
        t0 = time.perf_counter()
        ex = sparing_exhaustive(g)
        t1 = time.perf_counter()
        bb = sparing_branch_and_bound(g)
        t2 = time.perf_counter()
        mismatches += ex.value != bb.value
        by_n.setdefault(g.order, []).append((ex.nodes_explored, bb.nodes_explored, t1 - t0, t2 - t1))

    print(f"{'n':>3} {'graphs':>6} {'exh nodes':>10} {'b&b nodes':>10} {'exh ms':>8} {'b&b ms':>8}")
    for n in sorted(by_n):
        rows = by_n[n]
        med = [statistics.median(col) for col in zip(*rows)]
        print(f"{n:>3} {len(rows):>6} {med[0]:>10.0f} {med[1]:>10.0f} {1000 * med[2]:>8.2f} {1000 * med[3]:>8.2f}")
    print(f"value mismatches: {mismatches}")


if __name__ == "__main__":
    main()
