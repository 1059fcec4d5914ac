"""Brute-force oracles over small polygons.

Triangulations are enumerated as slot bitmasks and kept in a numpy array, so
"does b meet every triangulation" is one vectorised AND. The arrays are uint64
while the diagonals fit in 64 slots (n <= 12) and fall back to object arrays of
Python ints above that.

Every entry point raises PolygonSizeError for n < 3 before any capacity
guard is consulted, and CapacityError when n is above its guard.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from enum import StrEnum
from functools import lru_cache

import numpy as np

from .config import CapacityLimits, load_limits
from .const import LOGGER
from .core import EdgeSet, Polygon, Triangulation, reflect, rotate, slot_table


class SymmetryGroup(StrEnum):
    """Label symmetries used for deduplication."""

    ROTATION = "rotation"
    DIHEDRAL = "dihedral"


@dataclass(frozen=True)
class CanonicalForm:
    """Orbit representative of an edge set."""

    representative: EdgeSet
    group: SymmetryGroup


def catalan(k: int) -> int:
    """The k-th Catalan number."""
    return math.comb(2 * k, k) // (k + 1)


@lru_cache(maxsize=16)
def triangulation_masks(n: int) -> tuple[int, ...]:
    """Slot bitmasks of every triangulation of the n-gon."""
    index = slot_table(n).index
    memo: dict[tuple[int, int], list[int]] = {}

    def sub(i: int, j: int) -> list[int]:
        if j - i < 2:
            return [0]
        if (i, j) in memo:
            return memo[(i, j)]
        result = []
        for k in range(i + 1, j):
            extra = 0
            if k - i >= 2:
                extra |= 1 << index[(i, k)]
            if j - k >= 2:
                extra |= 1 << index[(k, j)]
            for low in sub(i, k):
                result.extend(low | high | extra for high in sub(k, j))
        memo[(i, j)] = result
        return result

    return tuple(sub(0, n - 1))


@lru_cache(maxsize=16)
def _mask_array(n: int) -> np.ndarray:
    masks = triangulation_masks(n)
    if slot_table(n).count <= 64:
        return np.array(masks, dtype=np.uint64)
    return np.array(masks, dtype=object)


def _scalar(masks: np.ndarray, bits: int) -> int | np.uint64:
    return np.uint64(bits) if masks.dtype == np.uint64 else bits


def _blocks(masks: np.ndarray, bits: int) -> bool:
    return bool(np.all((masks & _scalar(masks, bits)) != 0))


def _saturated(masks: np.ndarray, bits: int) -> bool:
    hits = masks & _scalar(masks, bits)
    if not np.all(hits != 0):
        return False
    one = np.uint64(1) if masks.dtype == np.uint64 else 1
    # a member is essential when some triangulation meets b in that member alone
    single = hits[(hits & (hits - one)) == 0]
    covered = int(np.bitwise_or.reduce(single)) if single.size else 0
    return covered == bits


def enumerate_triangulations(
    n: int, limits: CapacityLimits | None = None
) -> Iterator[Triangulation]:
    """Yield every triangulation of the n-gon once."""
    Polygon(n)
    (limits or load_limits()).check("triangulations", n)
    for mask in triangulation_masks(n):
        yield Triangulation(EdgeSet(n, mask))


def is_blocker_bruteforce(b: EdgeSet, limits: CapacityLimits | None = None) -> bool:
    """Return True when every enumerated triangulation meets b."""
    (limits or load_limits()).check("triangulations", b.n)
    return _blocks(_mask_array(b.n), b.bits)


def is_saturated_bruteforce(b: EdgeSet, limits: CapacityLimits | None = None) -> bool:
    """Saturation decided against the enumerated triangulations."""
    (limits or load_limits()).check("triangulations", b.n)
    return _saturated(_mask_array(b.n), b.bits)


def _plain_search(n: int, sizes: Iterable[int]) -> list[int]:
    masks = _mask_array(n)
    count = slot_table(n).count
    found = []
    for size in sizes:
        for combo in itertools.combinations(range(count), size):
            bits = sum(1 << slot for slot in combo)
            if _saturated(masks, bits):
                found.append(bits)
    return found


def _pruned_search(n: int, low: int, high: int) -> list[int]:
    table = slot_table(n)
    masks = _mask_array(n)
    total = table.count
    vertex_masks = table.vertex_masks
    every_vertex = (1 << n) - 1
    reachable = [0] * (total + 1)
    for slot in reversed(range(total)):
        reachable[slot] = reachable[slot + 1] | vertex_masks[slot]
    found: list[int] = []
    visited = 0

    def visit(slot: int, bits: int, count: int, covered: int) -> None:
        nonlocal visited
        visited += 1
        if count >= n - 2 and _blocks(masks, bits):
            # every extension is a proper superset of a blocker
            if count >= low and covered == every_vertex and _saturated(masks, bits):
                found.append(bits)
            return
        if slot == total or count == high:
            return
        bare = every_vertex & ~covered
        if bare & ~reachable[slot]:
            return
        if count + (bare.bit_count() + 1) // 2 > high:
            return
        visit(slot + 1, bits | 1 << slot, count + 1, covered | vertex_masks[slot])
        visit(slot + 1, bits, count, covered)

    visit(0, 0, 0, 0)
    LOGGER.debug("Pruned search n=%d sizes %d..%d visited %d states", n, low, high, visited)
    return found


def all_saturated_blockers(
    n: int,
    size_filter: int | None = None,
    *,
    prune: bool = True,
    limits: CapacityLimits | None = None,
) -> list[EdgeSet]:
    """Every saturated blocker of the n-gon, optionally of one size."""
    Polygon(n)
    limits = limits or load_limits()
    limits.check("exhaustive" if size_filter is None else "exhaustive_sized", n)
    if n == 3:
        return [EdgeSet.empty(3)] if size_filter in (None, 0) else []
    total = slot_table(n).count
    if prune:
        low = n - 2 if size_filter is None else size_filter
        high = total if size_filter is None else size_filter
        found = _pruned_search(n, low, high) if low <= high else []
    else:
        sizes = range(total + 1) if size_filter is None else [size_filter]
        found = _plain_search(n, sizes)
    result = sorted((EdgeSet(n, bits) for bits in found), key=_listing_key)
    LOGGER.info(
        "Found %d saturated blockers for n=%d (size filter %s)",
        len(result),
        n,
        size_filter,
    )
    return result


def _listing_key(b: EdgeSet) -> tuple[int, tuple[tuple[int, int], ...]]:
    return len(b), b.sort_key()


def saturation_spectrum_exhaustive(
    n: int, limits: CapacityLimits | None = None
) -> set[int]:
    """Sizes of all saturated blockers of the n-gon."""
    return {len(b) for b in all_saturated_blockers(n, limits=limits)}


def images(b: EdgeSet, group: SymmetryGroup = SymmetryGroup.ROTATION) -> Iterator[EdgeSet]:
    """Yield the image of b under every element of the group."""
    mirrored = [b, reflect(b)] if group == SymmetryGroup.DIHEDRAL else [b]
    for base in mirrored:
        for r in range(b.n):
            yield rotate(base, r)


def canonicalize(
    b: EdgeSet, group: SymmetryGroup = SymmetryGroup.ROTATION
) -> CanonicalForm:
    """Return the image with the lexicographically smallest sorted edge list."""
    return CanonicalForm(min(images(b, group), key=EdgeSet.sort_key), SymmetryGroup(group))


def orbit_counts(
    blockers: Iterable[EdgeSet], group: SymmetryGroup = SymmetryGroup.ROTATION
) -> dict[int, int]:
    """Number of orbits per size."""
    orbits = {canonicalize(b, group).representative for b in blockers}
    return dict(sorted(Counter(len(b) for b in orbits).items()))
