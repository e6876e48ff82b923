"""Print every theorem table plus the complete-graph count comparison.

    python scripts/reproduce_theorems.py [--max-complete 9] [--seed 0]
"""

import argparse
from fractions import Fraction

from weakiasi.cli import format_table
from weakiasi.graph import complete
from weakiasi.sparing import sparing_exhaustive
from weakiasi.theorems import FAMILIES, check_family


def complete_graph_counts(max_n: int) -> list[dict]:
    # (n-1)(n-2)/2 is what exhaustive search finds; (n-1)^2/2 is shown for contrast
    rows = []
    for n in range(2, max_n + 1):
        rows.append({
            "n": n,
            "(n-1)(n-2)/2": (n - 1) * (n - 2) // 2,
            "(n-1)^2/2": str(Fraction((n - 1) ** 2, 2)),
            "exhaustive": sparing_exhaustive(complete(n)).value,
        })
    return rows


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-complete", type=int, default=9)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    ok = True
    for fam in FAMILIES:
        rows = check_family(fam, seed=args.seed)
        ok &= all(r["match"] for r in rows)
        print(f"# {fam}")
        print(format_table(rows))
        print()
    print("# complete graphs: candidate closed forms")
    print(format_table(complete_graph_counts(args.max_complete)))
    print()
    print("all checks passed" if ok else "MISMATCH found")


if __name__ == "__main__":
    main()
