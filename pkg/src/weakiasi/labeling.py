"""Set-labelings of graph vertices and their classification.

A labeling assigns an ``IntSet`` to every vertex; the induced edge label of
``uv`` is the sumset of the endpoint labels. ``classify`` reports which of
the additive set-indexer notions (IASI, weak, strong, k-uniform) a labeling
satisfies, with witnesses for the first violation of each.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping

from .graph import Edge, Graph, GraphError, Vertex
from .sumset import IntSet, IntSetError, cardinality_bounds, sumset, symmetric_difference


class LabelingError(ValueError):
    pass


class SetLabeling(Mapping[Vertex, IntSet]):
    """Immutable map from vertex id to ``IntSet``.

    Injectivity is not enforced here so that non-injective labelings can be
    loaded and reported on; see ``is_injective`` and ``classify``.
    """

    __slots__ = ("_labels",)

    def __init__(self, assignments: Mapping[Vertex, IntSet | Iterable[int]]):
        labels = {}
        for v, s in assignments.items():
            labels[str(v)] = s if isinstance(s, IntSet) else IntSet(s)
        self._labels = labels

    def __getitem__(self, v: Vertex) -> IntSet:
        return self._labels[v]

    def __iter__(self) -> Iterator[Vertex]:
        return iter(self._labels)

    def __len__(self) -> int:
        return len(self._labels)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, SetLabeling):
            return self._labels == other._labels
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._labels.items()))

    def __repr__(self) -> str:
        inner = ", ".join(f"{v}: {s}" for v, s in self._labels.items())
        return f"SetLabeling({{{inner}}})"

    def is_injective(self) -> bool:
        return len(set(self._labels.values())) == len(self._labels)

    def to_json(self, order: Iterable[Vertex] | None = None) -> str:
        keys = list(order) if order is not None else list(self._labels)
        return json.dumps({v: self._labels[v].to_list() for v in keys}, separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> SetLabeling:
        """Parse ``{"v1":[1],"v2":[0,2]}``; arrays must be strictly increasing."""
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise LabelingError(f"labeling is not valid JSON: {exc}") from exc
        if not isinstance(data, dict):
            raise LabelingError("labeling JSON must be an object mapping vertex -> array")
        labels = {}
        for v, arr in data.items():
            if not isinstance(arr, list) or not all(
                isinstance(x, int) and not isinstance(x, bool) for x in arr
            ):
                raise LabelingError(f"label of {v!r} must be an array of integers")
            try:
                labels[v] = IntSet.from_increasing(arr)
            except IntSetError as exc:
                raise LabelingError(f"label of {v!r}: {exc}") from exc
        return cls(labels)


def read_labeling(path) -> SetLabeling:
    with open(path, encoding="utf-8") as fh:
        return SetLabeling.from_json(fh.read())


def _require_labels(g: Graph, f: Mapping[Vertex, IntSet], vs: Iterable[Vertex]) -> None:
    for v in vs:
        if v not in f:
            raise LabelingError(f"vertex {v!r} has no label")


def induced_edge_label(f: Mapping[Vertex, IntSet], u: Vertex, v: Vertex) -> IntSet:
    for x in (u, v):
        if x not in f:
            raise LabelingError(f"vertex {x!r} has no label")
    return sumset(f[u], f[v])


@dataclass
class LabelingReport:
    vertex_injective: bool
    edge_injective: bool
    is_iasi: bool
    is_weak: bool
    is_strong: bool
    uniform_k: int | None
    mono_indexed_vertices: frozenset[Vertex]
    mono_indexed_edges: tuple[Edge, ...]
    edge_index_numbers: dict[Edge, int]
    edge_labels: dict[Edge, IntSet] = field(repr=False)
    # first offending witnesses, None when the property holds
    vertex_collision: tuple[Vertex, Vertex] | None = None
    edge_collision: tuple[Edge, Edge] | None = None
    weak_violation: Edge | None = None
    strong_violation: Edge | None = None
    _vertex_order: tuple[Vertex, ...] = field(default=(), repr=False, compare=False)

    def satisfies(self, expect: str, k: int | None = None) -> bool:
        if expect == "iasi":
            return self.is_iasi
        if expect == "weak":
            return self.is_weak
        if expect == "strong":
            return self.is_strong
        if expect == "k-uniform":
            return self.is_iasi and self.uniform_k is not None and (k is None or self.uniform_k == k)
        raise ValueError(f"unknown expectation {expect!r}")

    def to_dict(self) -> dict:
        def edge(e):
            return list(e) if e is not None else None

        return {
            "vertex_injective": self.vertex_injective,
            "edge_injective": self.edge_injective,
            "is_iasi": self.is_iasi,
            "is_weak": self.is_weak,
            "is_strong": self.is_strong,
            "uniform_k": self.uniform_k,
            "mono_indexed_vertices": [v for v in self._vertex_order if v in self.mono_indexed_vertices],
            "mono_indexed_edges": [list(e) for e in self.mono_indexed_edges],
            "edges": [
                {"edge": list(e), "label": str(self.edge_labels[e]), "index": k}
                for e, k in self.edge_index_numbers.items()
            ],
            "vertex_collision": edge(self.vertex_collision),
            "edge_collision": [list(e) for e in self.edge_collision] if self.edge_collision else None,
            "weak_violation": edge(self.weak_violation),
            "strong_violation": edge(self.strong_violation),
        }


def classify(g: Graph, f: Mapping[Vertex, IntSet]) -> LabelingReport:
    """Evaluate every labeling notion for ``f`` on ``g``.

    Edge injectivity compares the induced sumsets themselves, not their
    sizes. Labels on vertices outside ``g`` are ignored. Graphs with no
    edges are vacuously weak and strong and have no uniform ``k``.
    """
    _require_labels(g, f, g.vertices)

    vertex_collision = None
    owner: dict[IntSet, Vertex] = {}
    for v in g.vertices:
        if f[v] in owner and vertex_collision is None:
            vertex_collision = (owner[f[v]], v)
        owner.setdefault(f[v], v)

    edge_labels: dict[Edge, IntSet] = {}
    index: dict[Edge, int] = {}
    edge_owner: dict[IntSet, Edge] = {}
    edge_collision = weak_violation = strong_violation = None
    for e in g.edges:
        u, v = e
        label = sumset(f[u], f[v])
        edge_labels[e] = label
        index[e] = len(label)
        if label in edge_owner and edge_collision is None:
            edge_collision = (edge_owner[label], e)
        edge_owner.setdefault(label, e)
        lo, hi = cardinality_bounds(f[u], f[v])
        if len(label) != lo and weak_violation is None:
            weak_violation = e
        if len(label) != hi and strong_violation is None:
            strong_violation = e

    vertex_injective = vertex_collision is None
    edge_injective = edge_collision is None
    is_iasi = vertex_injective and edge_injective
    distinct = set(index.values())
    return LabelingReport(
        vertex_injective=vertex_injective,
        edge_injective=edge_injective,
        is_iasi=is_iasi,
        is_weak=is_iasi and weak_violation is None,
        is_strong=is_iasi and strong_violation is None,
        uniform_k=distinct.pop() if len(distinct) == 1 else None,
        mono_indexed_vertices=frozenset(v for v in g.vertices if f[v].is_singleton),
        mono_indexed_edges=tuple(e for e in g.edges if index[e] == 1),
        edge_index_numbers=index,
        edge_labels=edge_labels,
        vertex_collision=vertex_collision,
        edge_collision=edge_collision,
        weak_violation=weak_violation,
        strong_violation=strong_violation,
        _vertex_order=g.vertices,
    )


def verify_symmetric_difference_set_indexer(g: Graph, f: Mapping[Vertex, IntSet]) -> bool:
    """True iff ``f`` is injective and ``uv -> f(u) xor f(v)`` is non-empty and injective."""
    _require_labels(g, f, g.vertices)
    if len({f[v] for v in g.vertices}) != g.order:
        return False
    seen: set[frozenset[int]] = set()
    for u, v in g.edges:
        d = symmetric_difference(f[u], f[v])
        if not d or d in seen:
            return False
        seen.add(d)
    return True


def restrict(g: Graph, f: Mapping[Vertex, IntSet], h: Graph) -> SetLabeling:
    """Restriction of ``f`` to the vertices of subgraph ``h``."""
    if not h.is_subgraph_of(g):
        missing = [v for v in h.vertices if v not in g]
        if missing:
            raise GraphError(f"not a subgraph: vertex {missing[0]!r} is not in the parent graph")
        bad = next(e for e in h.edges if not g.has_edge(*e))
        raise GraphError(f"not a subgraph: {bad[0]}-{bad[1]} is not an edge of the parent graph")
    _require_labels(g, f, h.vertices)
    return SetLabeling({v: f[v] for v in h.vertices})
