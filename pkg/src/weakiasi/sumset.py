"""Finite subsets of the non-negative integers and their sumsets."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

MAX_ELEMENT = 2**63
MAX_CARDINALITY = 2**16


class IntSetError(ValueError):
    pass


@dataclass(frozen=True, order=False)
class IntSet:
    """Non-empty finite set of non-negative integers, stored sorted.

    Any iterable of ints is accepted; duplicates are collapsed. Elements must
    lie in ``[0, 2**63)`` and the set may hold at most ``2**16`` elements.
    """

    elements: tuple[int, ...]

    def __init__(self, elements: Iterable[int]):
        items = list(elements)
        for x in items:
            if isinstance(x, bool) or not isinstance(x, int):
                raise IntSetError(f"IntSet elements must be integers, got {x!r}")
            if x < 0:
                raise IntSetError(f"IntSet elements must be non-negative, got {x}")
            if x >= MAX_ELEMENT:
                raise IntSetError(f"IntSet element {x} exceeds 2**63 - 1")
        normalized = tuple(sorted(set(items)))
        if not normalized:
            raise IntSetError("IntSet must be non-empty")
        if len(normalized) > MAX_CARDINALITY:
            raise IntSetError(f"IntSet cardinality {len(normalized)} exceeds 2**16")
        object.__setattr__(self, "elements", normalized)

    def cardinality(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __contains__(self, x: object) -> bool:
        return x in self.elements

    def __add__(self, other: IntSet) -> IntSet:
        if not isinstance(other, IntSet):
            return NotImplemented
        return sumset(self, other)

    @property
    def is_singleton(self) -> bool:
        return len(self.elements) == 1

    def __str__(self) -> str:
        return "{" + ",".join(str(x) for x in self.elements) + "}"

    def __repr__(self) -> str:
        return f"IntSet({str(self)})"

    def to_list(self) -> list[int]:
        return list(self.elements)

    @classmethod
    def parse(cls, text: str) -> IntSet:
        """Parse the canonical ``{a1,a2,...}`` form (strictly increasing, no spaces)."""
        if not (text.startswith("{") and text.endswith("}")):
            raise IntSetError(f"not an IntSet literal: {text!r}")
        body = text[1:-1]
        if not body:
            raise IntSetError("IntSet must be non-empty")
        try:
            values = [int(tok) for tok in body.split(",")]
        except ValueError as exc:
            raise IntSetError(f"not an IntSet literal: {text!r}") from exc
        return cls.from_increasing(values)

    @classmethod
    def from_increasing(cls, values: Iterable[int]) -> IntSet:
        """Build from a sequence that must already be strictly increasing."""
        values = list(values)
        for a, b in zip(values, values[1:]):
            if not isinstance(a, int) or not isinstance(b, int) or a >= b:
                raise IntSetError(f"elements must be strictly increasing: {values}")
        return cls(values)


def sumset(a: IntSet, b: IntSet) -> IntSet:
    """All pairwise sums ``x + y`` with ``x`` in ``a`` and ``y`` in ``b``.

    Raises ``OverflowError`` if the result would leave the IntSet bounds.
    """
    sums = {x + y for x in a.elements for y in b.elements}
    if max(sums) >= MAX_ELEMENT or len(sums) > MAX_CARDINALITY:
        raise OverflowError(f"sumset of {a} and {b} exceeds IntSet bounds")
    return IntSet(sums)


def symmetric_difference(a: IntSet, b: IntSet) -> frozenset[int]:
    """Elements in exactly one of ``a`` and ``b``. May be empty."""
    return frozenset(a.elements).symmetric_difference(b.elements)


def cardinality_bounds(a: IntSet, b: IntSet) -> tuple[int, int]:
    # |A+B| always lies in [max(|A|,|B|), |A|*|B|]
    return max(len(a), len(b)), len(a) * len(b)
