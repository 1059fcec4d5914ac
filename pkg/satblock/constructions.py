"""Saturated blockers of prescribed size.

The spectrum is covered by four bands, tried in this order:

* quadrilateral band: two complete bipartite edge sets over a four-way split;
* gap band: a fixed nested shell whose top sub-polygon carries a
  quadrilateral blocker;
* matrioshka band: balanced nested shells, both sub-polygons carrying
  quadrilateral blockers;
* nested band: a thin shell (3 + 3 side vertices) whose sub-polygons are
  realized recursively over everything the bands reach for them.

Each band's reach is computed constructively as integer intervals, so
``max_reachable`` and the dispatcher agree by construction.
"""

from __future__ import annotations

import itertools
import math
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .config import CapacityLimits, load_limits
from .const import (
    BAND_GAP,
    BAND_MATRIOSHKA,
    BAND_NESTED,
    BAND_QUADRILATERAL,
    LOGGER,
    NESTED_SEED,
)
from .core import Edge, EdgeSet, crosses, is_saturated_blocker, relabel, rotate
from .exceptions import (
    BeamCountError,
    BeamTargetError,
    ConflictingBeamsError,
    ConstructionError,
    InvalidPartitionError,
    NetLengthError,
    PolygonTooSmallError,
    SpectrumRangeError,
    SubBlockerError,
)

Interval = tuple[int, int]

GAP_BAND_MIN_N = 21
MATRIOSHKA_BAND_MIN_N = 25
NESTED_SPLIT_SPREAD = 2


def boundary_net(first: int, last: int) -> list[tuple[int, int]]:
    """Ear-covers (first, first+2) .. (last, last+2)."""
    return [(i, i + 2) for i in range(first, last + 1)]


def validate_beams(beams: Sequence[tuple[int, int]]) -> None:
    """Raise ConflictingBeamsError when two beams cross with targets two apart."""
    for (p, i), (q, j) in itertools.combinations(beams, 2):
        if abs(i - j) >= 2 and crosses(Edge.of(p, i), Edge.of(q, j)):
            raise ConflictingBeamsError(
                f"beams ({p},{i}) and ({q},{j}) cross with targets {abs(i - j)} apart"
            )


def build_min_blocker(n: int, m: int, beam_targets: Sequence[int]) -> EdgeSet:
    """Boundary net (0,2)..(m,m+2) plus one beam from each vertex m+3..n-1."""
    if n < 4:
        raise PolygonTooSmallError(f"minimum blockers need n >= 4, got {n}")
    if not 1 <= m <= n - 3:
        raise NetLengthError(f"net length m={m} outside [1, {n - 3}]")
    targets = list(beam_targets)
    if len(targets) != n - 3 - m:
        raise BeamCountError(f"expected {n - 3 - m} beam targets, got {len(targets)}")
    for target in targets:
        if not 1 <= target <= m + 1:
            raise BeamTargetError(f"beam target {target} outside [1, {m + 1}]")
    beams = [(m + 3 + j, target) for j, target in enumerate(targets)]
    validate_beams(beams)
    return EdgeSet.from_edges(n, [*boundary_net(0, m), *beams])


def enumerate_min_blockers(
    n: int, limits: CapacityLimits | None = None
) -> Iterator[EdgeSet]:
    """Yield every labeled minimum-size saturated blocker once, by bitset order."""
    (limits or load_limits()).check("min_blockers", n)
    seen: set[int] = set()
    for m in range(1, n - 2):
        for targets in itertools.product(range(1, m + 2), repeat=n - 3 - m):
            try:
                base = build_min_blocker(n, m, targets)
            except ConflictingBeamsError:
                continue
            seen.update(rotate(base, r).bits for r in range(n))
    LOGGER.debug("Enumerated %d minimum blockers for n=%d", len(seen), n)
    for bits in sorted(seen):
        yield EdgeSet(n, bits)


@dataclass(frozen=True)
class QuadPartition:
    """Consecutive runs V_R = 0..a-1, V_B = a..b-1, V_L = b..c-1, V_T = c..n-1."""

    n: int
    a: int
    b: int
    c: int

    def __post_init__(self) -> None:
        """Validate the cut points."""
        if not 0 < self.a < self.b < self.c < self.n:
            raise InvalidPartitionError(
                f"cuts must satisfy 0 < a < b < c < n, got "
                f"a={self.a} b={self.b} c={self.c} n={self.n}"
            )

    @classmethod
    def from_sizes(cls, right: int, bottom: int, left: int, top: int) -> QuadPartition:
        """Build a partition from the four run lengths."""
        return cls(
            right + bottom + left + top, right, right + bottom, right + bottom + left
        )

    @property
    def right(self) -> int:
        """|V_R|."""
        return self.a

    @property
    def bottom(self) -> int:
        """|V_B|."""
        return self.b - self.a

    @property
    def left(self) -> int:
        """|V_L|."""
        return self.c - self.b

    @property
    def top(self) -> int:
        """|V_T|."""
        return self.n - self.c

    def top_mapping(self) -> list[int]:
        """Top sub-polygon labels: 0, then c-1, c, ..., n-1."""
        return [0, *range(self.c - 1, self.n)]

    def bottom_mapping(self) -> list[int]:
        """Bottom sub-polygon labels: a-1, a, ..., b."""
        return list(range(self.a - 1, self.b + 1))


def build_quadrilateral(p: QuadPartition) -> EdgeSet:
    """All V_R x V_L edges together with all V_T x V_B edges."""
    edges = [(i, j) for i in range(p.a) for j in range(p.b, p.c)]
    edges += [(i, j) for i in range(p.a, p.b) for j in range(p.c, p.n)]
    return EdgeSet.from_edges(p.n, edges)


def build_matrioshka(
    p: QuadPartition, bt: EdgeSet, bb: EdgeSet, *, verify: bool = True
) -> EdgeSet:
    """Quadrilateral blocker with its two shell edges traded for sub-blockers."""
    if p.left < 3 or p.right < 3 or p.top < 2 or p.bottom < 2:
        raise InvalidPartitionError(
            "nested shells need |V_L|, |V_R| >= 3 and |V_T|, |V_B| >= 2, got "
            f"|V_R|={p.right} |V_B|={p.bottom} |V_L|={p.left} |V_T|={p.top}"
        )
    for name, sub, size in (("top", bt, p.top + 2), ("bottom", bb, p.bottom + 2)):
        if sub.n != size:
            raise SubBlockerError(f"{name} sub-blocker lives on {sub.n} vertices, not {size}")
        if verify and not is_saturated_blocker(sub):
            raise SubBlockerError(f"{name} sub-blocker {sub} is not a saturated blocker")
    shell = build_quadrilateral(p).without((0, p.c - 1), (p.a - 1, p.b))
    return shell | relabel(bt, p.top_mapping(), p.n) | relabel(bb, p.bottom_mapping(), p.n)


# Quadrilateral band


def quadrilateral_bounds(n: int, k: int) -> Interval:
    """Sizes reached with |V_T| = k and |V_R| = k + 1."""
    return k * n - k + 1 - 2 * k * k, k * n + n - 3 * k - 2 - 2 * k * k


def quadrilateral_overlap(n: int, k: int) -> int:
    """How far the k-th interval reaches past the start of the next."""
    return quadrilateral_bounds(n, k)[1] - quadrilateral_bounds(n, k + 1)[0]


def _quadrilateral_ks(n: int) -> range:
    return range(1, (n - 3) // 2 + 1)


@lru_cache(maxsize=None)
def quadrilateral_max(n: int) -> int:
    """Largest size of the quadrilateral band."""
    if n < 5:
        raise PolygonTooSmallError(f"the quadrilateral band needs n >= 5, got {n}")
    return max(quadrilateral_bounds(n, k)[1] for k in _quadrilateral_ks(n))


def quadrilateral_partition(n: int, t: int) -> QuadPartition:
    """Partition for size t using the smallest fitting k."""
    for k in _quadrilateral_ks(n):
        low, high = quadrilateral_bounds(n, k)
        if low <= t <= high:
            left = t - k * (n - 2 * k - 1)
            LOGGER.debug("Quadrilateral n=%d t=%d: k=%d |V_L|=%d", n, t, k, left)
            return QuadPartition.from_sizes(k + 1, n - 2 * k - 1 - left, left, k)
    raise SpectrumRangeError(f"no quadrilateral split of the {n}-gon has size {t}")


def realize_quadrilateral_band(n: int, t: int) -> EdgeSet:
    """Quadrilateral blocker of size t."""
    high = quadrilateral_max(n)
    if not n - 2 <= t <= high:
        raise SpectrumRangeError(f"t={t} outside the quadrilateral band [{n - 2}, {high}]")
    result = build_quadrilateral(quadrilateral_partition(n, t))
    if len(result) != t:
        raise ConstructionError(f"quadrilateral split produced {len(result)} edges, not {t}")
    return result


# Nested shells


@dataclass(frozen=True)
class BandPlan:
    """A nested shell and the interval of sizes it reaches."""

    band: str
    low: int
    high: int
    partition: QuadPartition
    fixed: int

    def covers(self, t: int) -> bool:
        """Return True when t is inside the plan's interval."""
        return self.low <= t <= self.high


def split_alternating(
    total: int, top: Interval, bottom: Interval
) -> tuple[int, int]:
    """Share total between two sides by adding one at a time, top first."""
    extra = total - top[0] - bottom[0]
    size_top = top[0] + (extra + 1) // 2
    size_bottom = bottom[0] + extra // 2
    if size_top > top[1]:
        size_bottom += size_top - top[1]
        size_top = top[1]
    if size_bottom > bottom[1]:
        size_top += size_bottom - bottom[1]
        size_bottom = bottom[1]
    if not (top[0] <= size_top <= top[1] and bottom[0] <= size_bottom <= bottom[1]):
        raise SpectrumRangeError(f"cannot split {total} over {top} and {bottom}")
    return size_top, size_bottom


def gap_band_plan(n: int) -> BandPlan:
    """The fixed shell |V_B| = n//4 - 2, |V_L| = 3, |V_R| = n//4."""
    if n < GAP_BAND_MIN_N:
        raise PolygonTooSmallError(
            f"the gap band needs n >= {GAP_BAND_MIN_N}, got {n}"
        )
    quarter = n // 4
    p = QuadPartition.from_sizes(quarter, quarter - 2, 3, n - 2 * quarter - 1)
    fixed = p.top * p.bottom + p.left * p.right - 2 + p.bottom
    return BandPlan(BAND_GAP, fixed + p.top, fixed + quadrilateral_max(p.top + 2), p, fixed)


def realize_gap_band(n: int, t: int) -> EdgeSet:
    """Gap-band blocker: minimum bottom sub-blocker, quadrilateral top."""
    plan = gap_band_plan(n)
    if not plan.covers(t):
        raise SpectrumRangeError(
            f"t={t} outside the gap band [{plan.low}, {plan.high}] for n={n}"
        )
    p = plan.partition
    bt = realize_quadrilateral_band(p.top + 2, t - plan.fixed)
    bb = build_min_blocker(p.bottom + 2, p.bottom - 1, [])
    return build_matrioshka(p, bt, bb, verify=False)


def matrioshka_band_plans(n: int) -> list[BandPlan]:
    """Balanced shells |V_T| = n//4 + k, |V_L| = |V_R| = ceil(n/4) - k."""
    if n < MATRIOSHKA_BAND_MIN_N:
        raise PolygonTooSmallError(
            f"the matrioshka band needs n >= {MATRIOSHKA_BAND_MIN_N}, got {n}"
        )
    floor_quarter, ceil_quarter = n // 4, -(-n // 4)
    plans = []
    for k in itertools.count():
        side, top = ceil_quarter - k, floor_quarter + k
        bottom = n - top - 2 * side
        if side < 3 or bottom < 2:
            break
        p = QuadPartition.from_sizes(side, bottom, side, top)
        fixed = top * bottom + side * side - 2
        high = fixed + quadrilateral_max(top + 2) + quadrilateral_max(bottom + 2)
        plans.append(BandPlan(BAND_MATRIOSHKA, fixed + top + bottom, high, p, fixed))
    return plans


def matrioshka_overlap(n: int, k: int) -> int:
    """How far shell k reaches past the start of shell k + 1."""
    plans = matrioshka_band_plans(n)
    return plans[k].high - plans[k + 1].low


def realize_matrioshka_band(n: int, t: int) -> EdgeSet:
    """Balanced nested blocker of size t using the first shell that fits."""
    plans = matrioshka_band_plans(n)
    for k, plan in enumerate(plans):
        if not plan.covers(t):
            continue
        p = plan.partition
        size_top, size_bottom = split_alternating(
            t - plan.fixed,
            (p.top, quadrilateral_max(p.top + 2)),
            (p.bottom, quadrilateral_max(p.bottom + 2)),
        )
        LOGGER.debug(
            "Matrioshka n=%d t=%d: k=%d sub sizes %d/%d", n, t, k, size_top, size_bottom
        )
        bt = realize_quadrilateral_band(p.top + 2, size_top)
        bb = realize_quadrilateral_band(p.bottom + 2, size_bottom)
        return build_matrioshka(p, bt, bb, verify=False)
    raise SpectrumRangeError(
        f"t={t} outside the matrioshka band "
        f"[{plans[0].low}, {max(plan.high for plan in plans)}] for n={n}"
    )


def nested_shells(n: int) -> tuple[QuadPartition, ...]:
    """Shells with |V_L| = |V_R| = 3, from the balanced top/bottom split down.

    The top side shrinks by up to NESTED_SPLIT_SPREAD vertices. Shifted splits
    fill the holes the balanced split leaves between sub-polygon intervals.
    """
    middle = (n - 6) // 2
    if middle < 3:
        raise PolygonTooSmallError(f"the nested band needs n >= 12, got {n}")
    lowest = max(3, middle - NESTED_SPLIT_SPREAD)
    return tuple(
        QuadPartition.from_sizes(3, n - 6 - top, 3, top)
        for top in range(middle, lowest - 1, -1)
    )


def _nested_spans(p: QuadPartition) -> list[tuple[Interval, Interval]]:
    return [
        (top, bottom)
        for top in spectrum_intervals(p.top + 2)
        for bottom in spectrum_intervals(p.bottom + 2)
    ]


def realize_nested_band(n: int, t: int) -> EdgeSet:
    """Thin-shell blocker whose sub-polygons are realized recursively."""
    for p in nested_shells(n):
        target = t - p.top * p.bottom - 7
        for top, bottom in _nested_spans(p):
            if top[0] + bottom[0] <= target <= top[1] + bottom[1]:
                size_top, size_bottom = split_alternating(target, top, bottom)
                LOGGER.debug(
                    "Nested n=%d t=%d: top %d, sub sizes %d/%d",
                    n,
                    t,
                    p.top,
                    size_top,
                    size_bottom,
                )
                bt = _realize(p.top + 2, size_top)
                bb = _realize(p.bottom + 2, size_bottom)
                return build_matrioshka(p, bt, bb, verify=False)
    raise SpectrumRangeError(f"t={t} is not reachable by the nested band for n={n}")


# Spectrum bookkeeping


def _merge(intervals: Sequence[Interval]) -> tuple[Interval, ...]:
    merged: list[Interval] = []
    for low, high in sorted(intervals):
        if merged and low <= merged[-1][1] + 1:
            merged[-1] = (merged[-1][0], max(merged[-1][1], high))
        else:
            merged.append((low, high))
    return tuple(merged)


def _within(intervals: Sequence[Interval], t: int) -> bool:
    return any(low <= t <= high for low, high in intervals)


@lru_cache(maxsize=None)
def band_intervals(n: int) -> dict[str, tuple[Interval, ...]]:
    """Sizes each enabled band reaches for the n-gon."""
    if n < 5:
        raise PolygonTooSmallError(f"the spectrum bands need n >= 5, got {n}")
    bands: dict[str, tuple[Interval, ...]] = {
        BAND_QUADRILATERAL: ((n - 2, quadrilateral_max(n)),)
    }
    if n >= GAP_BAND_MIN_N:
        plan = gap_band_plan(n)
        bands[BAND_GAP] = ((plan.low, plan.high),)
    if n >= MATRIOSHKA_BAND_MIN_N:
        bands[BAND_MATRIOSHKA] = _merge(
            [(plan.low, plan.high) for plan in matrioshka_band_plans(n)]
        )
    if (n - 6) // 2 >= 3:
        bands[BAND_NESTED] = _merge(
            [
                (
                    p.top * p.bottom + 7 + top[0] + bottom[0],
                    p.top * p.bottom + 7 + top[1] + bottom[1],
                )
                for p in nested_shells(n)
                for top, bottom in _nested_spans(p)
            ]
        )
    return bands


@lru_cache(maxsize=None)
def spectrum_intervals(n: int) -> tuple[Interval, ...]:
    """Every size the bands reach for the n-gon, as merged intervals."""
    return _merge([span for spans in band_intervals(n).values() for span in spans])


@lru_cache(maxsize=None)
def max_reachable(n: int) -> int:
    """Largest t such that every size in [n-2, t] is realizable."""
    return spectrum_intervals(n)[0][1]


def spectrum_band(n: int, t: int) -> str:
    """Name of the band the dispatcher uses for (n, t)."""
    bands = band_intervals(n)
    if _within(bands[BAND_QUADRILATERAL], t):
        return BAND_QUADRILATERAL
    matrioshka_claims = _within(bands.get(BAND_MATRIOSHKA, ()), t) and t >= math.ceil(
        Fraction(n * n, 8) + Fraction(n, 2) - 2
    )
    if _within(bands.get(BAND_GAP, ()), t) and not matrioshka_claims:
        return BAND_GAP
    if _within(bands.get(BAND_MATRIOSHKA, ()), t):
        return BAND_MATRIOSHKA
    if _within(bands.get(BAND_NESTED, ()), t):
        return BAND_NESTED
    raise SpectrumRangeError(f"t={t} is not reachable for n={n}")


_REALIZERS = {
    BAND_QUADRILATERAL: realize_quadrilateral_band,
    BAND_GAP: realize_gap_band,
    BAND_MATRIOSHKA: realize_matrioshka_band,
    BAND_NESTED: realize_nested_band,
}


def _realize(n: int, t: int) -> EdgeSet:
    return _REALIZERS[spectrum_band(n, t)](n, t)


def build_spectrum_blocker(n: int, t: int, *, verify: bool = True) -> EdgeSet:
    """Saturated blocker of the n-gon with exactly t edges."""
    if n < 5:
        raise PolygonTooSmallError(f"the spectrum bands need n >= 5, got {n}")
    reach = max_reachable(n)
    if not n - 2 <= t <= reach:
        raise SpectrumRangeError(
            f"t={t} outside [{n - 2}, max_reachable({n})={reach}]"
        )
    band = spectrum_band(n, t)
    LOGGER.debug("Spectrum n=%d t=%d via %s", n, t, band)
    result = _REALIZERS[band](n, t)
    if len(result) != t:
        raise ConstructionError(f"{band} produced {len(result)} edges for t={t}")
    if verify and not is_saturated_blocker(result):
        raise ConstructionError(f"{band} produced an unsaturated set for n={n} t={t}")
    return result


def closed_band_range(band: str, n: int) -> Interval:
    """Integer range stated in closed form for a band (floor/ceil of the bounds)."""
    quadrilateral_top = Fraction(n * n, 8) + Fraction(n, 4) - Fraction(11, 8)
    matrioshka_bottom = Fraction(n * n, 8) + Fraction(n, 2) - 2
    if band == BAND_QUADRILATERAL:
        return n - 2, math.floor(quadrilateral_top)
    if band == BAND_GAP:
        return math.ceil(quadrilateral_top), math.floor(matrioshka_bottom)
    if band == BAND_MATRIOSHKA:
        top = Fraction(5 * n * n, 16) - 3 * n + Fraction(205, 16)
        return math.ceil(matrioshka_bottom), math.floor(top)
    if band == BAND_NESTED:
        return math.ceil(Fraction(n * n, 4) - 2 * n + 10), max_reachable(n)
    raise ValueError(f"unknown band {band!r}")


def gap_margin(n: int) -> Fraction:
    """Slack between the quadrilateral top and the gap band's reach."""
    return Fraction(n * n, 32) - Fraction(n, 2) - 1


def deficit_ratio(n: int) -> float:
    """(n^2/2 - max_reachable(n)) / (n log2 n)."""
    return (n * n / 2 - max_reachable(n)) / (n * math.log2(n))


# Size polynomial of the nested band


@dataclass(frozen=True)
class RecursionCoefficients:
    """Coefficients of a_i n^2 + b_i n + c_i after i nesting steps."""

    i: int
    a: Fraction
    b: Fraction
    c: Fraction

    def bound(self, n: int) -> Fraction:
        """Evaluate the size polynomial at n."""
        return self.a * n * n + self.b * n + self.c


def recursion_coefficients(i: int) -> RecursionCoefficients:
    """Coefficients by iterating the step recursion from the seed."""
    if i < 0:
        raise ConstructionError(f"step index must be >= 0, got {i}")
    a, b, c = (Fraction(value) for value in NESTED_SEED)
    for _ in range(i):
        a, b, c = Fraction(1, 4) + a / 2, -2 * a + b - 3, 2 * a - 2 * b + 2 * c + 16
    return RecursionCoefficients(i, a, b, c)


def closed_form_coefficients(i: int) -> RecursionCoefficients:
    """Coefficients from their closed forms."""
    if i < 0:
        raise ConstructionError(f"step index must be >= 0, got {i}")
    tail = Fraction(3, 2 ** (i + 3))
    return RecursionCoefficients(
        i,
        Fraction(1, 2) - Fraction(3, 2 ** (i + 5)),
        -4 * i - tail - Fraction(25, 4),
        Fraction(689, 8) * 2**i - 8 * i - Fraction(75, 2) - tail,
    )


def nested_step_bound(i: int, n: int) -> int:
    """Integer size bound after i nesting steps."""
    return math.floor(recursion_coefficients(i).bound(n))
