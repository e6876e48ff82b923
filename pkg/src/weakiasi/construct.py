"""Deterministic builders for weak and weakly k-uniform labelings.

Every builder here splits the vertices into singleton-labelled vertices and
an independent set of vertices carrying two-element labels. Because each
edge then has a singleton endpoint, each edge label has the size of the
larger endpoint label, which is what weakness asks for. Concrete values come
from a ``ConstructionScheme`` chosen so that vertex and edge labels are
pairwise distinct without any search. Callers should still run
``classify`` on the output; the test suite does so for every builder.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graph import Bipartition, Graph, GraphError, Vertex, bipartition_of, complete, cycle, cycle_walk, is_complete
from .labeling import SetLabeling
from .sumset import MAX_ELEMENT, IntSet


class NotBipartiteError(GraphError):
    def __init__(self, message: str, odd_cycle: tuple[Vertex, ...]):
        super().__init__(message)
        self.odd_cycle = odd_cycle


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p**0.5) + 1))


@dataclass(frozen=True)
class ConstructionScheme:
    """Value rules for singleton labels and the offsets of pair labels.

    ``powers``: singleton ``k`` is ``{2**k}``, pair ``j`` is ``{0, M * 4**j}``
    with ``M = 2 * (largest singleton) + 1``. Sums of two distinct powers of
    two are distinct, so singleton-singleton edge labels never collide, and
    a singleton-pair edge label ``{a, a + M * 4**j}`` determines both ``a``
    and ``j``.

    ``sidon``: used once ``powers`` would overflow 63-bit elements. Singletons
    follow the Erdos-Turan Sidon sequence ``2*p*k + (k*k mod p)`` for the
    least prime ``p >= order``, pair offsets are ``M + j``. Same argument,
    polynomial magnitudes.
    """

    kind: str
    order: int

    @classmethod
    def for_order(cls, order: int) -> ConstructionScheme:
        powers = cls("powers", order)
        if powers.largest_element() < MAX_ELEMENT:
            return powers
        return cls("sidon", order)

    @property
    def _prime(self) -> int:
        p = max(self.order, 2)
        while not _is_prime(p):
            p += 1
        return p

    def singleton(self, k: int) -> int:
        if self.kind == "powers":
            return 1 << k
        p = self._prime
        return 2 * p * k + (k * k) % p

    @property
    def pair_base(self) -> int:
        return 2 * self.singleton(max(self.order - 1, 0)) + 1

    def pair_offset(self, j: int) -> int:
        if self.kind == "powers":
            return self.pair_base * 4**j
        return self.pair_base + j

    def largest_element(self) -> int:
        # largest element any edge label can reach
        n = max(self.order, 1)
        return self.singleton(n - 1) + self.pair_offset(n - 1)


def weak_from_independent_set(
    g: Graph, independent: Iterable[Vertex], scheme: ConstructionScheme | None = None
) -> SetLabeling:
    """Weak labeling with pair labels exactly on ``independent``.

    Vertices outside the set receive singleton labels indexed by their rank
    in ``g``; vertices in the set receive ``{0, offset_j}`` indexed by their
    rank within the set. The mono-indexed edges are precisely the edges with
    both endpoints outside the set.
    """
    chosen = set(independent)
    for v in chosen:
        if v not in g:
            raise GraphError(f"unknown vertex {v!r}")
    if not g.is_independent(chosen):
        u, v = next((a, b) for a, b in g.edges if a in chosen and b in chosen)
        raise GraphError(f"vertex set is not independent: {u}-{v} is an edge")
    scheme = scheme or ConstructionScheme.for_order(g.order)
    labels: dict[Vertex, IntSet] = {}
    j = 0
    for k, v in enumerate(g.vertices):
        if v in chosen:
            labels[v] = IntSet((0, scheme.pair_offset(j)))
            j += 1
        else:
            labels[v] = IntSet((scheme.singleton(k),))
    return SetLabeling(labels)


def _require_bipartition(g: Graph, why: str) -> Bipartition:
    parts = bipartition_of(g)
    if not isinstance(parts, Bipartition):
        cyc = " ".join(parts.odd_cycle)
        raise NotBipartiteError(f"graph is not bipartite ({why}); odd cycle: {cyc}", parts.odd_cycle)
    return parts


def weak_bipartite(g: Graph) -> SetLabeling:
    """Weak labeling of a bipartite graph with no mono-indexed edges.

    Both colour classes cover every edge, so the second class (the one not
    containing the BFS roots) takes the pair labels.
    """
    parts = _require_bipartition(g, "weak_bipartite needs a bipartition")
    return weak_from_independent_set(g, parts.part2)


def weak_complete_on(g: Graph) -> SetLabeling:
    if not is_complete(g) or g.order < 2:
        raise GraphError("graph is not a complete graph on at least 2 vertices")
    return weak_from_independent_set(g, {g.vertices[0]})


def weak_complete(n: int) -> SetLabeling:
    """Weak labeling of K_n with one pair-labelled vertex, leaving (n-1)(n-2)/2 mono-indexed edges."""
    if n < 2:
        raise GraphError(f"weak_complete needs n >= 2, got {n}")
    return weak_complete_on(complete(n))


def odd_cycle_pair_vertices(walk: tuple[Vertex, ...]) -> list[Vertex]:
    # every second vertex from the start; first and last stay singletons and
    # the closing edge is the single mono-indexed edge
    return list(walk[1::2])


def weak_odd_cycle_on(g: Graph) -> SetLabeling:
    walk = cycle_walk(g)
    if walk is None or len(walk) % 2 == 0:
        raise GraphError("graph is not an odd cycle")
    return weak_from_independent_set(g, odd_cycle_pair_vertices(walk))


def weak_odd_cycle(n: int) -> SetLabeling:
    """Weak labeling of C_n (n odd) with exactly one mono-indexed edge, ``vn v1``."""
    if n < 3 or n % 2 == 0:
        raise GraphError(f"weak_odd_cycle needs odd n >= 3, got {n}")
    return weak_odd_cycle_on(cycle(n))


def weakly_k_uniform_bipartite(g: Graph, k: int) -> SetLabeling:
    """Labeling where every edge label has exactly ``k`` elements.

    For ``k == 1`` every graph qualifies (all singleton labels). For
    ``k > 1`` the graph must be bipartite: the first class gets ``{i}`` for
    ``i < m`` and the second gets ``m*j + {0..k-1}`` for ``j >= 1``, so an
    edge label's minimum ``i + m*j`` identifies the edge.
    """
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")
    if k == 1:
        return weak_from_independent_set(g, ())
    parts = _require_bipartition(
        g, f"a weakly {k}-uniform IASI with k > 1 exists only on bipartite graphs"
    )
    ones = g.sort_vertices(parts.part1)
    many = g.sort_vertices(parts.part2)
    m = max(len(ones), 1)
    labels: dict[Vertex, IntSet] = {v: IntSet((i,)) for i, v in enumerate(ones)}
    for j, v in enumerate(many, start=1):
        labels[v] = IntSet(range(m * j, m * j + k))
    return SetLabeling({v: labels[v] for v in g.vertices})
