"""Labeled graph transforms and the runnable theorem checks.

``contract_labeled`` and ``reduce_cycle_to_triangle`` carry a weak labeling
through edge contraction and repeated elementary topological reduction. The
``check_*`` functions each return table rows comparing a closed form or
claimed property against an independent computation; ``check_family``
dispatches by name for the CLI.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Callable

from .construct import weak_bipartite
from .graph import Graph, Vertex, complete, contract_edge, cycle, random_bipartite, topological_reduce
from .labeling import SetLabeling, classify
from .sparing import mono_indexed_count_parity_check, mono_indexed_counts_on_cycle, sparing_exhaustive
from .sumset import IntSet, cardinality_bounds, sumset

FAMILIES = ("complete", "cycle", "bipartite", "parity", "lemma-bounds")


def contract_labeled(g: Graph, f: SetLabeling, e: tuple) -> tuple[Graph, SetLabeling]:
    """Contract ``e`` and give the merged vertex the induced label of ``e``."""
    u, v = g.canonical_edge(*e)
    h = contract_edge(g, (u, v))
    w = next(x for x in h.vertices if x not in g)
    labels = {x: (sumset(f[u], f[v]) if x == w else f[x]) for x in h.vertices}
    return h, SetLabeling(labels)


@dataclass(frozen=True)
class ReductionStep:
    graph: Graph
    labeling: SetLabeling
    removed: Vertex | None
    rule: str


def reduce_cycle_to_triangle(g: Graph, f: SetLabeling) -> list[ReductionStep]:
    """Apply elementary topological reductions to a weakly labeled cycle until C_3.

    While a mono-indexed edge exists, the later endpoint of the first such
    edge is removed; otherwise the first non-singleton vertex is removed.
    Labels of surviving vertices are kept. Returns every intermediate graph,
    starting with the input.
    """
    steps = [ReductionStep(g, SetLabeling({v: f[v] for v in g.vertices}), None, "start")]
    while g.order > 3:
        report = classify(g, f)
        if report.mono_indexed_edges:
            v = report.mono_indexed_edges[0][1]
            rule = "mono-indexed edge endpoint"
        else:
            v = next(x for x in g.vertices if not f[x].is_singleton)
            rule = "non-singleton vertex"
        g = topological_reduce(g, v)
        f = SetLabeling({x: f[x] for x in g.vertices})
        steps.append(ReductionStep(g, f, v, rule))
    return steps


# theorem tables

def check_complete(max_n: int = 8, min_n: int = 3) -> list[dict]:
    rows = []
    for n in range(min_n, max_n + 1):
        closed = (n - 1) * (n - 2) // 2
        exhaustive = sparing_exhaustive(complete(n)).value
        rows.append({"n": n, "closed_form": closed, "exhaustive": exhaustive, "match": closed == exhaustive})
    return rows


def check_cycle(max_n: int = 14, min_n: int = 3) -> list[dict]:
    rows = []
    for n in range(min_n, max_n + 1):
        exhaustive = sparing_exhaustive(cycle(n)).value
        rows.append({"n": n, "closed_form": n % 2, "exhaustive": exhaustive, "match": n % 2 == exhaustive})
    return rows


def check_bipartite(max_n: int = 14, trials: int = 50, seed: int = 0) -> list[dict]:
    """Random bipartite graphs: exhaustive sparing 0 and constructed labeling weak with no mono edges."""
    rng = random.Random(seed)
    rows = []
    for t in range(trials):
        n = rng.randint(2, max_n)
        m = rng.randint(1, n - 1)
        g = random_bipartite(m, n - m, rng.uniform(0.2, 0.9), rng)
        exhaustive = sparing_exhaustive(g).value
        report = classify(g, weak_bipartite(g))
        ok = exhaustive == 0 and report.is_weak and not report.mono_indexed_edges
        rows.append({
            "trial": t, "n": g.order, "edges": g.size, "closed_form": 0, "exhaustive": exhaustive,
            "constructed_weak": report.is_weak, "constructed_mono": len(report.mono_indexed_edges),
            "match": ok,
        })
    return rows


def check_parity(max_n: int = 16, min_n: int = 3) -> list[dict]:
    rows = []
    for n in range(min_n, min(max_n, 16) + 1):
        counts = sorted(set(mono_indexed_counts_on_cycle(n)))
        verified = mono_indexed_count_parity_check(n)
        rows.append({"n": n, "expected_parity": n % 2, "counts": counts, "match": verified})
    return rows


def subsets_up_to(universe: int, max_size: int) -> list[IntSet]:
    return [IntSet(c) for k in range(1, max_size + 1) for c in combinations(range(universe + 1), k)]


def check_lemma_bounds(max_element: int = 9, max_size: int = 4, samples: int = 10_000, seed: int = 0) -> list[dict]:
    """Sumset size bounds on random pairs, plus the growth bound and singleton corollary exhaustively."""
    rng = random.Random(seed)
    bound_violations = 0
    for _ in range(samples):
        a = IntSet(rng.sample(range(64), rng.randint(1, 8)))
        b = IntSet(rng.sample(range(64), rng.randint(1, 8)))
        lo, hi = cardinality_bounds(a, b)
        if not lo <= len(sumset(a, b)) <= hi:
            bound_violations += 1

    sets = subsets_up_to(max_element, max_size)
    growth_violations = corollary_violations = 0
    for a in sets:
        for b in sets:
            s = len(sumset(a, b))
            if s < len(a) + len(b) - 1:
                growth_violations += 1
            if (s == max(len(a), len(b))) != (min(len(a), len(b)) == 1):
                corollary_violations += 1
    pairs = len(sets) ** 2
    return [
        {"check": "max(|A|,|B|) <= |A+B| <= |A||B|", "pairs": samples, "violations": bound_violations,
         "match": bound_violations == 0},
        {"check": "|A+B| >= |A|+|B|-1", "pairs": pairs, "violations": growth_violations,
         "match": growth_violations == 0},
        {"check": "|A+B| = max iff a singleton", "pairs": pairs, "violations": corollary_violations,
         "match": corollary_violations == 0},
    ]


def check_family(family: str, max_n: int | None = None, seed: int = 0) -> list[dict]:
    runners: dict[str, Callable[[], list[dict]]] = {
        "complete": lambda: check_complete(max_n or 8),
        "cycle": lambda: check_cycle(max_n or 14),
        "bipartite": lambda: check_bipartite(max_n or 14, seed=seed),
        "parity": lambda: check_parity(max_n or 16),
        "lemma-bounds": lambda: check_lemma_bounds(max_n or 9, seed=seed),
    }
    if family not in runners:
        raise ValueError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")
    return runners[family]()

