"""Polygon geometry, the triangulation-containment DP and blocker checks.

Vertices of a convex n-gon are labeled 0..n-1 counterclockwise. A set of
diagonals is an :class:`EdgeSet`, a bitset over the diagonal slots taken in
lexicographic order. The containment test is the classic interval DP over the
linear order 0..n-1; each DP row is an int bitset so that a split-point search
is one AND.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from functools import lru_cache
from typing import Union

from .const import LOGGER
from .exceptions import (
    BoundaryEdgeError,
    InvalidEdgeError,
    PolygonSizeError,
    VertexRangeError,
)


@dataclass(frozen=True, order=True)
class Edge:
    """An unordered vertex pair stored as (a, b) with a < b."""

    a: int
    b: int

    def __post_init__(self) -> None:
        """Validate the canonical form."""
        if self.a == self.b:
            raise InvalidEdgeError(f"edge ({self.a},{self.b}) is a loop")
        if not 0 <= self.a < self.b:
            raise InvalidEdgeError(f"edge ({self.a},{self.b}) is not canonical")

    @classmethod
    def of(cls, u: int, v: int) -> Edge:
        """Return the canonical edge joining u and v."""
        if u == v:
            raise InvalidEdgeError(f"edge ({u},{v}) is a loop")
        return cls(min(u, v), max(u, v))

    def order(self, n: int) -> int:
        """Return the cyclic distance between the endpoints."""
        gap = self.b - self.a
        return min(gap, n - gap)

    def is_diagonal(self, n: int) -> bool:
        """Return True when the edge is a chord of order at least 2."""
        return self.b < n and self.order(n) >= 2

    def touches(self, v: int) -> bool:
        """Return True when v is an endpoint."""
        return v in (self.a, self.b)

    def other(self, v: int) -> int:
        """Return the endpoint that is not v."""
        if v == self.a:
            return self.b
        if v == self.b:
            return self.a
        raise InvalidEdgeError(f"vertex {v} is not on edge ({self.a},{self.b})")

    def __iter__(self) -> Iterator[int]:
        yield self.a
        yield self.b

    def __str__(self) -> str:
        return f"({self.a},{self.b})"


EdgeLike = Union[Edge, tuple[int, int], list[int]]


@dataclass(frozen=True)
class Polygon:
    """A convex polygon with n labeled vertices."""

    n: int

    def __post_init__(self) -> None:
        """Validate the vertex count."""
        if self.n < 3:
            raise PolygonSizeError(f"a polygon needs at least 3 vertices, got {self.n}")

    @property
    def diagonal_count(self) -> int:
        """Number of diagonals."""
        return self.n * (self.n - 3) // 2

    def diagonals(self) -> tuple[Edge, ...]:
        """All diagonals in slot order."""
        return slot_table(self.n).edges


@dataclass(frozen=True)
class SlotTable:
    """Per-n lookup tables for the diagonal slot encoding."""

    n: int
    edges: tuple[Edge, ...]
    index: dict[tuple[int, int], int]
    incident: tuple[int, ...]
    vertex_masks: tuple[int, ...]

    @property
    def count(self) -> int:
        """Number of diagonal slots."""
        return len(self.edges)

    @property
    def full(self) -> int:
        """Bitset holding every diagonal."""
        return (1 << len(self.edges)) - 1


@lru_cache(maxsize=None)
def slot_table(n: int) -> SlotTable:
    """Return the slot tables for the n-gon."""
    Polygon(n)
    edges = tuple(
        Edge(a, b)
        for a in range(n)
        for b in range(a + 2, n)
        if not (a == 0 and b == n - 1)
    )
    index = {(edge.a, edge.b): slot for slot, edge in enumerate(edges)}
    incident = [0] * n
    for slot, edge in enumerate(edges):
        incident[edge.a] |= 1 << slot
        incident[edge.b] |= 1 << slot
    vertex_masks = tuple((1 << edge.a) | (1 << edge.b) for edge in edges)
    return SlotTable(n, edges, index, tuple(incident), vertex_masks)


def iter_bits(bits: int) -> Iterator[int]:
    """Yield the indices of set bits, lowest first."""
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


def _pair(item: EdgeLike) -> tuple[int, int]:
    if isinstance(item, Edge):
        return item.a, item.b
    u, v = item
    return int(u), int(v)


def slot_of(n: int, item: EdgeLike) -> int:
    """Return the slot of a diagonal, validating range and order."""
    u, v = _pair(item)
    for vertex in (u, v):
        if not 0 <= vertex < n:
            raise VertexRangeError(f"vertex {vertex} is outside the {n}-gon")
    edge = Edge.of(u, v)
    if edge.order(n) < 2:
        raise BoundaryEdgeError(f"{edge} is a boundary edge of the {n}-gon")
    return slot_table(n).index[(edge.a, edge.b)]


@dataclass(frozen=True)
class EdgeSet:
    """A set of diagonals of the n-gon."""

    n: int
    bits: int = 0

    def __post_init__(self) -> None:
        """Validate the bitset against the slot count."""
        table = slot_table(self.n)
        if self.bits < 0 or self.bits >> table.count:
            raise InvalidEdgeError(f"bitset {self.bits:#x} has bits past the slots")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[EdgeLike]) -> EdgeSet:
        """Build a set from edges or vertex pairs."""
        bits = 0
        for item in edges:
            bits |= 1 << slot_of(n, item)
        return cls(n, bits)

    @classmethod
    def empty(cls, n: int) -> EdgeSet:
        """The empty set of diagonals."""
        return cls(n, 0)

    @classmethod
    def all_diagonals(cls, n: int) -> EdgeSet:
        """The set of every diagonal."""
        return cls(n, slot_table(n).full)

    def __iter__(self) -> Iterator[Edge]:
        edges = slot_table(self.n).edges
        return (edges[slot] for slot in iter_bits(self.bits))

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __bool__(self) -> bool:
        return self.bits != 0

    def __contains__(self, item: object) -> bool:
        try:
            slot = slot_of(self.n, item)  # type: ignore[arg-type]
        except (InvalidEdgeError, TypeError, ValueError):
            return False
        return bool(self.bits >> slot & 1)

    def _same_polygon(self, other: EdgeSet) -> None:
        if other.n != self.n:
            raise PolygonSizeError(f"cannot combine a {self.n}-gon and a {other.n}-gon")

    def __or__(self, other: EdgeSet) -> EdgeSet:
        self._same_polygon(other)
        return EdgeSet(self.n, self.bits | other.bits)

    def __and__(self, other: EdgeSet) -> EdgeSet:
        self._same_polygon(other)
        return EdgeSet(self.n, self.bits & other.bits)

    def __sub__(self, other: EdgeSet) -> EdgeSet:
        self._same_polygon(other)
        return EdgeSet(self.n, self.bits & ~other.bits)

    def __xor__(self, other: EdgeSet) -> EdgeSet:
        self._same_polygon(other)
        return EdgeSet(self.n, self.bits ^ other.bits)

    def issubset(self, other: EdgeSet) -> bool:
        """Return True when every member is in other."""
        self._same_polygon(other)
        return self.bits & ~other.bits == 0

    def with_edges(self, *edges: EdgeLike) -> EdgeSet:
        """Return a copy with the given diagonals added."""
        return self | EdgeSet.from_edges(self.n, edges)

    def without(self, *edges: EdgeLike) -> EdgeSet:
        """Return a copy with the given diagonals removed."""
        return self - EdgeSet.from_edges(self.n, edges)

    def complement(self) -> EdgeSet:
        """Every diagonal not in this set."""
        return EdgeSet(self.n, slot_table(self.n).full & ~self.bits)

    def pairs(self) -> list[tuple[int, int]]:
        """Members as sorted (a, b) tuples."""
        return [(edge.a, edge.b) for edge in self]

    def sort_key(self) -> tuple[tuple[int, int], ...]:
        """Lexicographic key of the sorted member list."""
        return tuple(self.pairs())

    def __str__(self) -> str:
        return "{" + ", ".join(str(edge) for edge in self) + "}"


@dataclass(frozen=True)
class Triangulation:
    """A maximal set of pairwise non-crossing diagonals."""

    diagonals: EdgeSet

    @property
    def n(self) -> int:
        """Polygon size."""
        return self.diagonals.n

    def __iter__(self) -> Iterator[Edge]:
        return iter(self.diagonals)

    def __len__(self) -> int:
        return len(self.diagonals)


def crosses(e1: Edge, e2: Edge) -> bool:
    """Return True when two chords share an interior point."""
    i, j = e1.a, e1.b
    k, l = e2.a, e2.b  # noqa: E741
    return i < k < j < l or k < i < l < j


def is_triangulation(t: EdgeSet) -> bool:
    """Return True when t holds n-3 pairwise non-crossing diagonals."""
    if len(t) != t.n - 3:
        return False
    edges = list(t)
    return not any(
        crosses(first, second)
        for index, first in enumerate(edges)
        for second in edges[index + 1 :]
    )


def _usable_rows(allowed: EdgeSet) -> list[int]:
    """Bit y of row x is set when (x, y), x < y, is a boundary edge or allowed."""
    n = allowed.n
    rows = [1 << (x + 1) if x + 1 < n else 0 for x in range(n)]
    rows[0] |= 1 << (n - 1)
    for edge in allowed:
        rows[edge.a] |= 1 << edge.b
    return rows


def _inside_table(allowed: EdgeSet) -> tuple[list[int], list[int], list[int]]:
    """Run the interval DP.

    ``can[i]`` has bit j when the sub-polygon i..j is triangulable with allowed
    diagonals. ``right[i]`` keeps the j > i that are also usable as a side,
    ``left[j]`` the matching i < j.
    """
    n = allowed.n
    usable = _usable_rows(allowed)
    can = [1 << (i + 1) if i + 1 < n else 0 for i in range(n)]
    right = list(can)
    left = [1 << (j - 1) if j else 0 for j in range(n)]
    for width in range(2, n):
        for i in range(n - width):
            j = i + width
            if right[i] & left[j]:
                can[i] |= 1 << j
                if usable[i] >> j & 1:
                    right[i] |= 1 << j
                    left[j] |= 1 << i
    return can, right, left


def _outside_table(allowed: EdgeSet, right: list[int], left: list[int]) -> list[int]:
    """Bit j of row i is set when the polygon j..n-1,0..i is triangulable."""
    n = allowed.n
    usable = _usable_rows(allowed)
    out = [0] * n
    out[0] = 1 << (n - 1)
    out_right = list(out)
    out_left = [0] * n
    out_left[n - 1] = 1
    for width in range(n - 2, 1, -1):
        for i in range(n - width):
            j = i + width
            if out_right[i] & right[j] or out_left[j] & left[i]:
                out[i] |= 1 << j
                if usable[i] >> j & 1:
                    out_right[i] |= 1 << j
                    out_left[j] |= 1 << i
    return out


def contains_triangulation(allowed: EdgeSet) -> bool:
    """Return True when some triangulation uses only allowed diagonals."""
    can, _, _ = _inside_table(allowed)
    return bool(can[0] >> (allowed.n - 1) & 1)


def witness_triangulation(allowed: EdgeSet) -> Triangulation | None:
    """Return a triangulation inside allowed, or None when none exists."""
    n = allowed.n
    can, right, left = _inside_table(allowed)
    if not can[0] >> (n - 1) & 1:
        return None
    chosen: list[tuple[int, int]] = []
    stack = [(0, n - 1)]
    while stack:
        i, j = stack.pop()
        if j - i < 2:
            continue
        split = right[i] & left[j]
        k = (split & -split).bit_length() - 1
        for x, y in ((i, k), (k, j)):
            if y - x >= 2:
                chosen.append((x, y))
                stack.append((x, y))
    return Triangulation(EdgeSet.from_edges(n, chosen))


def completable_diagonals(allowed: EdgeSet) -> EdgeSet:
    """Diagonals e such that a triangulation through e uses only allowed others."""
    n = allowed.n
    can, right, left = _inside_table(allowed)
    out = _outside_table(allowed, right, left)
    table = slot_table(n)
    bits = 0
    for slot, edge in enumerate(table.edges):
        if can[edge.a] >> edge.b & 1 and out[edge.a] >> edge.b & 1:
            bits |= 1 << slot
    return EdgeSet(n, bits)


def is_blocker(b: EdgeSet) -> bool:
    """Return True when every triangulation shares a diagonal with b."""
    if b.n == 3:
        # A triangle has no diagonals to avoid, so the check is vacuous.
        return True
    return not contains_triangulation(b.complement())


def is_saturated_blocker(b: EdgeSet) -> bool:
    """Return True when b blocks and dropping any one edge stops it blocking."""
    if b.n == 3:
        return not b
    allowed = b.complement()
    can, right, left = _inside_table(allowed)
    if can[0] >> (b.n - 1) & 1:
        return False
    out = _outside_table(allowed, right, left)
    for edge in b:
        if not (can[edge.a] >> edge.b & 1 and out[edge.a] >> edge.b & 1):
            LOGGER.debug("Edge %s of %s is redundant", edge, b)
            return False
    return True


def _check_vertex(n: int, v: int) -> None:
    if not 0 <= v < n:
        raise VertexRangeError(f"vertex {v} is outside the {n}-gon")


def degree(b: EdgeSet, v: int) -> int:
    """Number of members incident to v."""
    _check_vertex(b.n, v)
    return (b.bits & slot_table(b.n).incident[v]).bit_count()


def neighbours(b: EdgeSet, v: int) -> list[int]:
    """Endpoints joined to v, ascending."""
    _check_vertex(b.n, v)
    return sorted(edge.other(v) for edge in b if edge.touches(v))


def ear_cover(n: int, v: int) -> Edge:
    """The order-2 diagonal covering v."""
    _check_vertex(n, v)
    return Edge.of((v - 1) % n, (v + 1) % n)


def is_covered(b: EdgeSet, v: int) -> bool:
    """Return True when the ear-cover of v is in b."""
    return b.n > 3 and ear_cover(b.n, v) in b


def uncovered_vertices(b: EdgeSet) -> list[int]:
    """Vertices whose ear-cover is missing from b."""
    return [v for v in range(b.n) if not is_covered(b, v)]


def relabel(b: EdgeSet, mapping: Iterable[int], n: int | None = None) -> EdgeSet:
    """Map every endpoint through mapping onto an n-gon (default: same n)."""
    images = list(mapping)
    return EdgeSet.from_edges(
        b.n if n is None else n, ((images[e.a], images[e.b]) for e in b)
    )


def rotate(b: EdgeSet, r: int) -> EdgeSet:
    """Shift every vertex label by r modulo n."""
    n = b.n
    return relabel(b, ((v + r) % n for v in range(n)))


def reflect(b: EdgeSet) -> EdgeSet:
    """Mirror the labels through vertex 0."""
    n = b.n
    return relabel(b, ((-v) % n for v in range(n)))


def vertex_deletion(b: EdgeSet, i: int) -> EdgeSet:
    """Restrict b to the (n-1)-gon left after deleting vertex i."""
    n = b.n
    _check_vertex(n, i)
    if n < 4:
        raise PolygonSizeError("deleting a vertex of a triangle leaves no polygon")
    cover = ear_cover(n, i)
    kept = []
    for edge in b:
        if edge.touches(i) or edge == cover:
            continue
        a, c = (x - 1 if x > i else x for x in (edge.a, edge.b))
        if Edge(a, c).order(n - 1) >= 2:
            kept.append((a, c))
    return EdgeSet.from_edges(n - 1, kept)
