"""Finite simple graphs, generators, bipartiteness and independent sets.

Graphs are immutable. The order of ``Graph.vertices`` is significant: a
vertex's *rank* (its position in that tuple) is what every deterministic
choice in this package keys on, including "smallest vertex" and
lexicographic order of vertex sets.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Union

Vertex = str
Edge = tuple[str, str]

MAX_ENUMERATION_VERTICES = 30


class GraphError(ValueError):
    pass


class EdgeListError(GraphError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class EnumerationLimitError(GraphError):
    def __init__(self, what: str, limit: int, actual: int):
        super().__init__(f"{what} refused: graph has {actual} vertices, limit is {limit}")
        self.limit = limit
        self.actual = actual


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph.

    ``edges`` is normalized so each pair is ordered by vertex rank and the
    tuple is sorted by rank pairs. Loops, repeated edges and edges to
    undeclared vertices raise ``GraphError``.
    """

    vertices: tuple[Vertex, ...]
    edges: tuple[Edge, ...] = ()

    def __init__(self, vertices: Iterable[Vertex | int], edges: Iterable[tuple] = ()):
        verts = tuple(str(v) for v in vertices)
        rank = {v: i for i, v in enumerate(verts)}
        if len(rank) != len(verts):
            seen: set[str] = set()
            dup = next(v for v in verts if v in seen or seen.add(v))
            raise GraphError(f"duplicate vertex {dup!r}")
        normalized: set[tuple[int, int]] = set()
        for e in edges:
            u, v = (str(x) for x in e)
            for x in (u, v):
                if x not in rank:
                    raise GraphError(f"edge {u}-{v} uses unknown vertex {x!r}")
            if u == v:
                raise GraphError(f"loop at vertex {u!r}")
            key = (min(rank[u], rank[v]), max(rank[u], rank[v]))
            if key in normalized:
                raise GraphError(f"duplicate edge {u}-{v}")
            normalized.add(key)
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(
            self, "edges", tuple((verts[i], verts[j]) for i, j in sorted(normalized))
        )

    @property
    def order(self) -> int:
        return len(self.vertices)

    @property
    def size(self) -> int:
        return len(self.edges)

    @cached_property
    def rank(self) -> dict[Vertex, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def _neighbors(self) -> dict[Vertex, frozenset[Vertex]]:
        adj: dict[Vertex, set[Vertex]] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return {v: frozenset(ns) for v, ns in adj.items()}

    @cached_property
    def adjacency_masks(self) -> tuple[int, ...]:
        """Neighbourhood of each vertex as a bitmask over ranks."""
        masks = [0] * self.order
        for u, v in self.edges:
            i, j = self.rank[u], self.rank[v]
            masks[i] |= 1 << j
            masks[j] |= 1 << i
        return tuple(masks)

    def __contains__(self, v: object) -> bool:
        return v in self.rank

    def neighbors(self, v: Vertex) -> list[Vertex]:
        """Neighbours of ``v`` in rank order."""
        self._require(v)
        return sorted(self._neighbors[v], key=self.rank.__getitem__)

    def degree(self, v: Vertex) -> int:
        self._require(v)
        return len(self._neighbors[v])

    def has_edge(self, u: Vertex, v: Vertex) -> bool:
        return u in self._neighbors and v in self._neighbors[u]

    def canonical_edge(self, u: Vertex, v: Vertex) -> Edge:
        """The stored orientation of edge ``uv``; raises if absent."""
        if not self.has_edge(u, v):
            raise GraphError(f"{u}-{v} is not an edge")
        return (u, v) if self.rank[u] < self.rank[v] else (v, u)

    def sort_vertices(self, vs: Iterable[Vertex]) -> list[Vertex]:
        return sorted(vs, key=self.rank.__getitem__)

    def is_independent(self, vs: Iterable[Vertex]) -> bool:
        vs = set(vs)
        for v in vs:
            self._require(v)
        return not any(self._neighbors[v] & vs for v in vs)

    def edges_outside(self, vs: Iterable[Vertex]) -> list[Edge]:
        """Edges with neither endpoint in ``vs``."""
        vs = set(vs)
        return [(u, v) for u, v in self.edges if u not in vs and v not in vs]

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        seen = {self.vertices[0]}
        stack = [self.vertices[0]]
        while stack:
            for w in self._neighbors[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.order

    def is_subgraph_of(self, other: Graph) -> bool:
        return all(v in other for v in self.vertices) and all(
            other.has_edge(u, v) for u, v in self.edges
        )

    def subgraph(self, vertices: Iterable[Vertex], edges: Iterable[tuple] | None = None) -> Graph:
        """Subgraph on ``vertices``; induced unless ``edges`` is given."""
        keep = set(vertices)
        for v in keep:
            self._require(v)
        order = [v for v in self.vertices if v in keep]
        if edges is None:
            es = [(u, v) for u, v in self.edges if u in keep and v in keep]
        else:
            es = [tuple(e) for e in edges]
            for u, v in es:
                if not self.has_edge(u, v):
                    raise GraphError(f"{u}-{v} is not an edge of the parent graph")
        return Graph(order, es)

    def _require(self, v: Vertex) -> None:
        if v not in self.rank:
            raise GraphError(f"unknown vertex {v!r}")

    def to_dict(self) -> dict:
        return {"vertices": list(self.vertices), "edges": [list(e) for e in self.edges]}


# generators

def path(n: int) -> Graph:
    """Path on ``n`` vertices ``v1 - v2 - ... - vn``."""
    if n < 1:
        raise GraphError(f"path needs n >= 1, got {n}")
    vs = [f"v{i}" for i in range(1, n + 1)]
    return Graph(vs, zip(vs, vs[1:]))


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs n >= 3, got {n}")
    vs = [f"v{i}" for i in range(1, n + 1)]
    return Graph(vs, list(zip(vs, vs[1:])) + [(vs[-1], vs[0])])


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"complete graph needs n >= 1, got {n}")
    vs = [f"v{i}" for i in range(1, n + 1)]
    return Graph(vs, combinations(vs, 2))


def complete_bipartite(m: int, n: int) -> Graph:
    """K_{m,n} with parts ``v1..vm`` and ``v(m+1)..v(m+n)``."""
    if m < 1 or n < 1:
        raise GraphError(f"complete bipartite graph needs m, n >= 1, got {m}, {n}")
    left = [f"v{i}" for i in range(1, m + 1)]
    right = [f"v{i}" for i in range(m + 1, m + n + 1)]
    return Graph(left + right, [(u, v) for u in left for v in right])


def from_edge_list(edges: Iterable[tuple], vertices: Iterable = ()) -> Graph:
    """Graph whose vertex set is ``vertices`` plus every edge endpoint, in first-seen order."""
    edges = [tuple(str(x) for x in e) for e in edges]
    order: dict[str, None] = {str(v): None for v in vertices}
    for e in edges:
        if len(e) != 2:
            raise GraphError(f"edge must have two endpoints: {e}")
        order.update(dict.fromkeys(e))
    return Graph(order, edges)


def generate(spec: str) -> Graph:
    """Build a family graph from ``kind:params``, e.g. ``cycle:5`` or ``complete_bipartite:2:3``."""
    kind, *params = spec.replace(",", ":").split(":")
    kind = kind.strip().lower().replace("-", "_")
    try:
        args = [int(p) for p in params]
    except ValueError as exc:
        raise GraphError(f"bad generator parameters in {spec!r}") from exc
    arity = {"path": 1, "cycle": 1, "complete": 1, "complete_bipartite": 2}
    if kind not in arity:
        raise GraphError(f"unknown graph family {kind!r}; expected one of {sorted(arity)}")
    if len(args) != arity[kind]:
        raise GraphError(f"{kind} takes {arity[kind]} parameter(s), got {len(args)}")
    return {"path": path, "cycle": cycle, "complete": complete,
            "complete_bipartite": complete_bipartite}[kind](*args)


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    vs = [f"v{i}" for i in range(1, n + 1)]
    return Graph(vs, [e for e in combinations(vs, 2) if rng.random() < p])


def random_bipartite(m: int, n: int, p: float, rng: random.Random) -> Graph:
    """Random subgraph of K_{m,n}, vertices shuffled so parts are not contiguous."""
    vs = [f"v{i}" for i in range(1, m + n + 1)]
    shuffled = vs[:]
    rng.shuffle(shuffled)
    left, right = shuffled[:m], shuffled[m:]
    return Graph(vs, [(u, v) for u in left for v in right if rng.random() < p])


# edge-list text format

def parse_edge_list(text: str) -> Graph:
    """Parse ``u v`` lines, ``vertex u`` declarations, ``#`` comments and blank lines."""
    order: dict[str, None] = {}
    edges: list[tuple[str, str]] = []
    seen: set[frozenset] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        if toks[0] == "vertex":
            if len(toks) != 2:
                raise EdgeListError(lineno, f"expected 'vertex <id>', got {line!r}")
            order.setdefault(toks[1], None)
            continue
        if len(toks) != 2:
            raise EdgeListError(lineno, f"expected 'u v', got {line!r}")
        u, v = toks
        if u == v:
            raise EdgeListError(lineno, f"loop at vertex {u!r}")
        key = frozenset((u, v))
        if key in seen:
            raise EdgeListError(lineno, f"duplicate edge {u}-{v}")
        seen.add(key)
        order.setdefault(u, None)
        order.setdefault(v, None)
        edges.append((u, v))
    return Graph(order, edges)


def format_edge_list(g: Graph) -> str:
    # every vertex is declared so the vertex order survives a round trip
    lines = [f"vertex {v}" for v in g.vertices]
    lines += [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def read_edge_list(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


# bipartiteness

@dataclass(frozen=True)
class Bipartition:
    part1: frozenset[Vertex]
    part2: frozenset[Vertex]


@dataclass(frozen=True)
class NotBipartite:
    """Marker returned for non-bipartite graphs, carrying an odd cycle."""

    odd_cycle: tuple[Vertex, ...]

    def __bool__(self) -> bool:
        return False


def bipartition_of(g: Graph) -> Union[Bipartition, NotBipartite]:
    """Two-colour ``g`` by BFS from the lowest-rank uncoloured vertex.

    Neighbours are visited in rank order, and each BFS root goes to
    ``part1``. On failure the result holds an odd cycle as a certificate.
    """
    color: dict[Vertex, int] = {}
    parent: dict[Vertex, Vertex | None] = {}
    for root in g.vertices:
        if root in color:
            continue
        color[root] = 0
        parent[root] = None
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in g.neighbors(x):
                if y not in color:
                    color[y] = 1 - color[x]
                    parent[y] = x
                    queue.append(y)
                elif color[y] == color[x]:
                    return NotBipartite(_odd_cycle(parent, x, y))
    return Bipartition(
        frozenset(v for v in g.vertices if color[v] == 0),
        frozenset(v for v in g.vertices if color[v] == 1),
    )


def _odd_cycle(parent: dict, x: Vertex, y: Vertex) -> tuple[Vertex, ...]:
    def to_root(v):
        out = []
        while v is not None:
            out.append(v)
            v = parent[v]
        return out

    px, py = to_root(x), to_root(y)
    on_py = set(py)
    lca = next(v for v in px if v in on_py)
    left = px[: px.index(lca) + 1]
    right = py[: py.index(lca)]
    return tuple(left + right[::-1])


def is_bipartite(g: Graph) -> bool:
    return isinstance(bipartition_of(g), Bipartition)


# independent sets

def _independent_rank_sets(g: Graph) -> Iterator[tuple[int, ...]]:
    """Independent sets as sorted rank tuples, by size then lexicographically."""
    adj = g.adjacency_masks
    n = g.order

    def extend(chosen: list[int], blocked: int, start: int, remaining: int):
        if remaining == 0:
            yield tuple(chosen)
            return
        for r in range(start, n - remaining + 1):
            if blocked >> r & 1:
                continue
            chosen.append(r)
            yield from extend(chosen, blocked | adj[r], r + 1, remaining - 1)
            chosen.pop()

    for size in range(n + 1):
        found = False
        for s in extend([], 0, 0, size):
            found = True
            yield s
        if not found:
            return


def independent_sets(g: Graph, limit: int = MAX_ENUMERATION_VERTICES) -> Iterator[frozenset[Vertex]]:
    """Every independent set of ``g`` exactly once, including the empty set.

    Ordered by size, then lexicographically by vertex rank. Refuses graphs
    with more than ``limit`` vertices.
    """
    if g.order > limit:
        raise EnumerationLimitError("independent set enumeration", limit, g.order)
    vs = g.vertices
    for ranks in _independent_rank_sets(g):
        yield frozenset(vs[r] for r in ranks)


# transforms

def add_edge(g: Graph, u: Vertex, v: Vertex) -> Graph:
    """Return ``g + uv``."""
    g._require(u)
    g._require(v)
    if u == v:
        raise GraphError(f"loop at vertex {u!r}")
    if g.has_edge(u, v):
        raise GraphError(f"{u}-{v} is already an edge")
    return Graph(g.vertices, g.edges + ((u, v),))


def merged_vertex_id(g: Graph, u: Vertex, v: Vertex) -> Vertex:
    base = f"{u}+{v}"
    name, k = base, 2
    while name in g:
        name = f"{base}#{k}"
        k += 1
    return name


def contract_edge(g: Graph, e: tuple) -> Graph:
    """Contract ``e`` into a new vertex ``u+v`` placed where ``u`` was.

    Parallel edges that arise are merged and no loop is created. ``u`` is
    the lower-rank endpoint.
    """
    u, v = g.canonical_edge(*e)
    w = merged_vertex_id(g, u, v)
    verts = [w if x == u else x for x in g.vertices if x != v]
    edges: dict[frozenset, tuple] = {}
    for a, b in g.edges:
        if {a, b} == {u, v}:
            continue
        a = w if a in (u, v) else a
        b = w if b in (u, v) else b
        edges.setdefault(frozenset((a, b)), (a, b))
    return Graph(verts, edges.values())


def topological_reduce(g: Graph, v: Vertex) -> Graph:
    """Delete degree-2 vertex ``v`` and join its two (non-adjacent) neighbours."""
    if g.degree(v) != 2:
        raise GraphError(f"vertex {v!r} has degree {g.degree(v)}, need 2")
    u, w = g.neighbors(v)
    if g.has_edge(u, w):
        raise GraphError(f"neighbours {u!r} and {w!r} of {v!r} are already adjacent")
    rest = g.subgraph([x for x in g.vertices if x != v])
    return Graph(rest.vertices, rest.edges + ((u, w),))


def cycle_walk(g: Graph) -> tuple[Vertex, ...] | None:
    """Vertices of ``g`` in cycle order if ``g`` is a single cycle, else None.

    The walk starts at the lowest-rank vertex and steps first to its
    lower-rank neighbour.
    """
    if g.order < 3 or g.size != g.order or not g.is_connected():
        return None
    if any(g.degree(v) != 2 for v in g.vertices):
        return None
    walk = [g.vertices[0]]
    prev, cur = None, g.vertices[0]
    while True:
        nxt = next(x for x in g.neighbors(cur) if x != prev)
        if nxt == walk[0]:
            break
        walk.append(nxt)
        prev, cur = cur, nxt
    return tuple(walk)


def is_complete(g: Graph) -> bool:
    n = g.order
    return g.size == n * (n - 1) // 2
