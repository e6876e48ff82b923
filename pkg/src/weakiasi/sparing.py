"""Sparing number: the fewest mono-indexed edges over all weak labelings.

An edge is weak exactly when one endpoint label is a singleton (a sumset of
two sets of size >= 2 always has more elements than either). So the
non-singleton vertices of a weak labeling form an independent set ``I``,
the mono-indexed edges are the edges avoiding ``I``, and since labels can be
drawn from an unbounded pool every independent set is realizable. The
sparing number is therefore

    min over independent I of |{uv in E : u, v not in I}|

which the solvers below compute exactly, then realize and re-verify a
witness labeling. Ties go to the smallest witness by size, then by vertex
rank, which is the order ``graph.independent_sets`` enumerates in.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable

from .construct import ConstructionScheme, odd_cycle_pair_vertices, weak_from_independent_set
from .graph import (
    Bipartition,
    Graph,
    Vertex,
    _independent_rank_sets,
    bipartition_of,
    cycle,
    cycle_walk,
    is_complete,
)
from .labeling import SetLabeling, classify

log = logging.getLogger(__name__)

EXHAUSTIVE_LIMIT = 24
BRANCH_AND_BOUND_LIMIT = 200

CLOSED_FORM = "closed_form"
EXHAUSTIVE = "exhaustive"
BRANCH_AND_BOUND = "branch_and_bound"


class SearchLimitExceeded(RuntimeError):
    """Raised when a search is refused or cut off.

    ``incumbent`` holds the best (value, witness set) known at that point,
    which is not proven optimal.
    """

    def __init__(self, message: str, limit: int, incumbent: tuple[int, frozenset[Vertex]] | None):
        super().__init__(message)
        self.limit = limit
        self.incumbent = incumbent


@dataclass(frozen=True)
class SparingResult:
    value: int
    witness_set: frozenset[Vertex]
    witness_labeling: SetLabeling
    method: str
    nodes_explored: int

    def to_dict(self, g: Graph) -> dict:
        return {
            "value": self.value,
            "method": self.method,
            "witness_set": g.sort_vertices(self.witness_set),
            "nodes_explored": self.nodes_explored,
        }


def _realize(g: Graph, witness: Iterable[Vertex], value: int, method: str, nodes: int) -> SparingResult:
    witness = frozenset(witness)
    labeling = weak_from_independent_set(g, witness)
    report = classify(g, labeling)
    if not report.is_weak or len(report.mono_indexed_edges) != value:
        raise RuntimeError(
            f"witness labeling failed re-verification: weak={report.is_weak}, "
            f"mono-indexed={len(report.mono_indexed_edges)}, expected {value}"
        )
    return SparingResult(value, witness, labeling, method, nodes)


def _witness_key(ranks: Iterable[int]) -> tuple[int, tuple[int, ...]]:
    ranks = tuple(sorted(ranks))
    return len(ranks), ranks


def sparing_exhaustive(g: Graph, limit: int = EXHAUSTIVE_LIMIT) -> SparingResult:
    """Scan every independent set; refuses graphs above ``limit`` vertices."""
    if g.order > limit:
        raise SearchLimitExceeded(
            f"exhaustive sparing search refused: {g.order} vertices exceeds limit {limit}", limit, None
        )
    degree = [bin(m).count("1") for m in g.adjacency_masks]
    best_value, best_set, nodes = g.size + 1, (), 0
    for ranks in _independent_rank_sets(g):
        nodes += 1
        # an independent set covers sum of its degrees with no double counting
        value = g.size - sum(degree[r] for r in ranks)
        if value < best_value:
            best_value, best_set = value, ranks
    return _realize(g, (g.vertices[r] for r in best_set), best_value, EXHAUSTIVE, nodes)


def sparing_branch_and_bound(
    g: Graph, limit: int = BRANCH_AND_BOUND_LIMIT, node_limit: int | None = None
) -> SparingResult:
    """Depth-first in/out search over vertices, highest degree first.

    The bound is the number of edges already forced mono-indexed (both
    endpoints decided out), which can only grow deeper in the tree, so a
    subtree is cut only when it cannot reach the incumbent value.
    """
    adj = g.adjacency_masks
    n = g.order
    order = sorted(range(n), key=lambda r: (-bin(adj[r]).count("1"), r))
    if n > limit:
        greedy = _greedy_independent(adj, order)
        incumbent = (_outside_count(g, greedy), frozenset(g.vertices[r] for r in greedy))
        raise SearchLimitExceeded(
            f"branch-and-bound sparing search refused: {n} vertices exceeds limit {limit}",
            limit,
            incumbent,
        )

    best = [g.size, _witness_key(())]
    nodes = 0

    def visit(depth: int, in_mask: int, out_mask: int, chosen: list[int], forced: int) -> None:
        nonlocal nodes
        nodes += 1
        if node_limit is not None and nodes > node_limit:
            raise _NodeLimit
        if forced > best[0]:
            return
        if depth == n:
            key = _witness_key(chosen)
            if (forced, key) < (best[0], best[1]):
                best[0], best[1] = forced, key
            return
        v = order[depth]
        bit = 1 << v
        if not adj[v] & in_mask:
            chosen.append(v)
            visit(depth + 1, in_mask | bit, out_mask, chosen, forced)
            chosen.pop()
        visit(depth + 1, in_mask, out_mask | bit, chosen, forced + bin(adj[v] & out_mask).count("1"))

    try:
        visit(0, 0, 0, [], 0)
    except _NodeLimit:
        witness = frozenset(g.vertices[r] for r in best[1][1])
        raise SearchLimitExceeded(
            f"branch-and-bound node limit {node_limit} reached", node_limit, (best[0], witness)
        ) from None
    log.debug("branch and bound: value=%d nodes=%d", best[0], nodes)
    return _realize(g, (g.vertices[r] for r in best[1][1]), best[0], BRANCH_AND_BOUND, nodes)


class _NodeLimit(Exception):
    pass


def _greedy_independent(adj: tuple[int, ...], order: list[int]) -> list[int]:
    chosen, blocked = [], 0
    for v in order:
        if not blocked >> v & 1:
            chosen.append(v)
            blocked |= adj[v] | 1 << v
    return chosen


def _outside_count(g: Graph, ranks: Iterable[int]) -> int:
    inside = {g.vertices[r] for r in ranks}
    return len(g.edges_outside(inside))


def sparing_closed_form(g: Graph) -> SparingResult | None:
    """Known values for bipartite graphs (0), cycles (n mod 2) and K_n.

    For K_n the value is (n-1)(n-2)/2: one vertex carries the only
    non-singleton label. Returns None for graphs outside these families.
    """
    parts = bipartition_of(g)
    if isinstance(parts, Bipartition):
        return _realize(g, parts.part2, 0, CLOSED_FORM, 0)
    walk = cycle_walk(g)
    if walk is not None:
        return _realize(g, odd_cycle_pair_vertices(walk), len(walk) % 2, CLOSED_FORM, 0)
    if is_complete(g):
        n = g.order
        return _realize(g, {g.vertices[0]}, (n - 1) * (n - 2) // 2, CLOSED_FORM, 0)
    return None


def sparing_number(g: Graph, method: str = "auto") -> SparingResult:
    """Dispatch: closed form when recognized, otherwise branch and bound."""
    if method in ("auto", CLOSED_FORM):
        result = sparing_closed_form(g)
        if result is not None:
            return result
        if method == CLOSED_FORM:
            raise ValueError("graph is not bipartite, a cycle or complete; no closed form")
        return sparing_branch_and_bound(g)
    if method == EXHAUSTIVE:
        return sparing_exhaustive(g)
    if method == BRANCH_AND_BOUND:
        return sparing_branch_and_bound(g)
    raise ValueError(f"unknown method {method!r}")


def mono_indexed_count_parity_check(n: int) -> bool:
    """Check that on C_n every independent-set labeling has |E \\ I-edges| = n mod 2.

    Enumerates every independent set of C_n, builds the corresponding weak
    labeling, and compares its mono-indexed edge count with ``n`` mod 2.
    """
    if not 3 <= n <= 16:
        raise ValueError(f"parity check needs 3 <= n <= 16, got {n}")
    g = cycle(n)
    scheme = ConstructionScheme.for_order(n)
    for ranks in _independent_rank_sets(g):
        f = weak_from_independent_set(g, [g.vertices[r] for r in ranks], scheme)
        report = classify(g, f)
        if not report.is_weak or len(report.mono_indexed_edges) % 2 != n % 2:
            return False
    return True


def mono_indexed_counts_on_cycle(n: int) -> list[int]:
    """Mono-indexed edge counts of C_n over all independent sets, in enumeration order."""
    g = cycle(n)
    return [len(g.edges_outside({g.vertices[r] for r in ranks})) for ranks in _independent_rank_sets(g)]
