"""Recognizers and builders for the minimum and near-minimum blocker shapes.

A minimum blocker (n - 2 edges) is, up to rotation, a boundary net of
ear-covers (0,2)..(m,m+2) plus one beam from each vertex past the net. A
saturated blocker with n - 1 edges replaces part of such a blocker with one of
three special subgraphs: a seagull, a butterfly or a bouquet. All templates are
matched in a rotated frame where the net starts at vertex 0; results carry the
rotation that maps the frame back onto the input.
"""

from __future__ import annotations

from collections.abc import Container, Iterator, Sequence
from dataclasses import asdict, dataclass
from enum import StrEnum
from typing import Any

from .const import LOGGER
from .constructions import boundary_net, build_min_blocker, validate_beams
from .core import (
    Edge,
    EdgeLike,
    EdgeSet,
    crosses,
    degree,
    is_saturated_blocker,
    relabel,
    rotate,
    uncovered_vertices,
)
from .exceptions import (
    BeamCountError,
    BeamTargetError,
    BouquetRangeError,
    ClassificationError,
    ConstructionError,
    DuplicateEdgeError,
    IncidenceError,
    NetLengthError,
    PivotRangeError,
    PolygonTooSmallError,
    VertexRangeError,
)


def _adjacency(b: EdgeSet) -> list[list[int]]:
    adjacent: list[list[int]] = [[] for _ in range(b.n)]
    for edge in b:
        adjacent[edge.a].append(edge.b)
        adjacent[edge.b].append(edge.a)
    return adjacent


def _single_targets(adjacent: list[list[int]], vertices: range) -> list[int] | None:
    """Beam target of each vertex, or None when some vertex is not a single beam."""
    targets = []
    for v in vertices:
        if len(adjacent[v]) != 1:
            return None
        targets.append(adjacent[v][0])
    return targets


def _beams(
    first: int, targets: Sequence[int], allowed: Container[int], domain: str
) -> list[tuple[int, int]]:
    beams = []
    for offset, target in enumerate(targets):
        if target not in allowed:
            raise BeamTargetError(f"beam target {target} outside {domain}")
        beams.append((first + offset, target))
    return beams


def _net_present(frame: EdgeSet, first: int, last: int) -> bool:
    return all((i, i + 2) in frame for i in range(first, last + 1))


# Minimum blockers


@dataclass(frozen=True)
class MinBlockerShape:
    """Parameters of a minimum blocker: b = rotate(build_min_blocker(n, m, targets), rotation)."""

    rotation: int
    m: int
    beam_targets: tuple[int, ...]

    def build(self, n: int) -> EdgeSet:
        """Rebuild the blocker in the input labeling."""
        return rotate(build_min_blocker(n, self.m, self.beam_targets), self.rotation)


def _iter_min_shapes(b: EdgeSet) -> Iterator[MinBlockerShape]:
    n = b.n
    if n < 4 or len(b) != n - 2:
        return
    for rotation in range(n):
        frame = rotate(b, -rotation)
        if (0, 2) not in frame or (1, 3) not in frame:
            continue
        adjacent = _adjacency(frame)
        longest = 1
        while longest < n - 3 and (longest + 1, longest + 3) in frame:
            longest += 1
        # longest net first: a beam (m+3, m+1) is also the next ear-cover
        for m in range(longest, 0, -1):
            targets = _single_targets(adjacent, range(m + 3, n))
            if targets is None:
                continue
            try:
                candidate = build_min_blocker(n, m, targets)
            except ConstructionError:
                continue
            if candidate.bits == frame.bits:
                yield MinBlockerShape(rotation, m, tuple(targets))


def min_blocker_shapes(b: EdgeSet) -> list[MinBlockerShape]:
    """Every rotation and parameterisation under which b is a minimum blocker."""
    return list(_iter_min_shapes(b))


def recognize_min_blocker(b: EdgeSet) -> MinBlockerShape | None:
    """The first matching shape by rotation, taking the longest net."""
    shape = next(_iter_min_shapes(b), None)
    if shape is not None:
        LOGGER.debug("Recognized %s as minimum blocker %s", b, shape)
    return shape


# Near-minimum templates


def seagull_edges(ell: int) -> list[tuple[int, int]]:
    """The seagull subgraph pivoting at ell."""
    return [(ell - 2, ell), (ell - 2, ell + 1), (ell - 1, ell + 2), (ell, ell + 2)]


def butterfly_edges(ell: int) -> list[tuple[int, int]]:
    """The butterfly subgraph pivoting at ell."""
    return [
        (ell - 2, ell),
        (ell - 2, ell + 1),
        (ell - 1, ell + 2),
        (ell, ell + 3),
        (ell + 1, ell + 3),
    ]


def bouquet_edges(ell: int, k: int, t: int) -> list[tuple[int, int]]:
    """The bouquet: its vase around ell and the beams from inside the vase."""
    vase = [(ell - 1, ell + 1), (k, ell - 1), (k + t, ell + 1), (k, k + t)]
    return vase + [(k + j, ell) for j in range(1, t)]


def build_seagull(n: int, ell: int, m: int, beam_targets: Sequence[int]) -> EdgeSet:
    """Seagull at ell, the net with the ear-covers of ell-1..ell+1 reshaped, and beams."""
    if not 4 <= m <= n - 3:
        raise NetLengthError(f"seagull net length m={m} outside [4, {n - 3}]")
    if not 2 < ell < m:
        raise PivotRangeError(f"seagull pivot ell={ell} outside (2, {m})")
    if len(beam_targets) != n - 3 - m:
        raise BeamCountError(f"expected {n - 3 - m} beam targets, got {len(beam_targets)}")
    allowed = set(range(1, ell)) | set(range(ell + 1, m + 2))
    beams = _beams(m + 3, beam_targets, allowed, f"[1, {m + 1}] without {ell}")
    validate_beams(beams)
    net = boundary_net(0, ell - 3) + boundary_net(ell + 1, m)
    return EdgeSet.from_edges(n, [*seagull_edges(ell), *net, *beams])


def build_butterfly(n: int, ell: int, m: int, beam_targets: Sequence[int]) -> EdgeSet:
    """Butterfly at ell with the incomplete net around it and beams."""
    if not 5 <= m <= n - 3:
        raise NetLengthError(f"butterfly net length m={m} outside [5, {n - 3}]")
    if not 2 < ell < m - 1:
        raise PivotRangeError(f"butterfly pivot ell={ell} outside (2, {m - 1})")
    if len(beam_targets) != n - 3 - m:
        raise BeamCountError(f"expected {n - 3 - m} beam targets, got {len(beam_targets)}")
    allowed = set(range(1, ell)) | set(range(ell + 2, m + 2))
    beams = _beams(m + 3, beam_targets, allowed, f"[1, {m + 1}] without {ell}, {ell + 1}")
    validate_beams(beams)
    net = boundary_net(0, ell - 3) + boundary_net(ell + 2, m)
    return EdgeSet.from_edges(n, [*butterfly_edges(ell), *net, *beams])


def build_bouquet(
    n: int,
    ell: int,
    m: int,
    k: int,
    t: int,
    beam_targets_left: Sequence[int] = (),
    beam_targets_right: Sequence[int] = (),
) -> EdgeSet:
    """Bouquet at (ell, k, t) with the full net and beams on both sides of the vase."""
    if n < 6:
        raise PolygonTooSmallError(f"bouquets need n >= 6, got {n}")
    if m < 0:
        raise NetLengthError(f"bouquet net length m={m} is negative")
    if not 0 < ell <= m + 1:
        raise PivotRangeError(f"bouquet pivot ell={ell} outside [1, {m + 1}]")
    if k < m + 3 or t < 2 or k + t > n - 1:
        raise BouquetRangeError(
            f"bouquet needs {m + 3} <= k, t >= 2 and k + t <= {n - 1}, got k={k} t={t}"
        )
    left, right = list(beam_targets_left), list(beam_targets_right)
    if len(left) != k - m - 3:
        raise BeamCountError(f"expected {k - m - 3} left beam targets, got {len(left)}")
    if len(right) != n - 1 - k - t:
        raise BeamCountError(f"expected {n - 1 - k - t} right beam targets, got {len(right)}")
    beams = _beams(m + 3, left, range(ell, m + 2), f"[{ell}, {m + 1}]")
    beams += _beams(k + t + 1, right, range(1, ell + 1), f"[1, {ell}]")
    validate_beams(beams)
    return EdgeSet.from_edges(n, [*bouquet_edges(ell, k, t), *boundary_net(0, m), *beams])


class NearMinimumVariant(StrEnum):
    """Special subgraph of a saturated blocker with n - 1 edges."""

    SEAGULL = "seagull"
    BUTTERFLY = "butterfly"
    BOUQUET = "bouquet"


_PRIORITY = {
    NearMinimumVariant.SEAGULL: 0,
    NearMinimumVariant.BUTTERFLY: 1,
    NearMinimumVariant.BOUQUET: 2,
}


@dataclass(frozen=True)
class NearMinimumClassification:
    """A matched template and the rotation placing its frame onto the input."""

    variant: NearMinimumVariant
    rotation: int
    ell: int
    m: int
    beam_targets: tuple[int, ...] = ()
    k: int | None = None
    t: int | None = None
    beam_targets_left: tuple[int, ...] = ()
    beam_targets_right: tuple[int, ...] = ()

    def build_frame(self, n: int) -> EdgeSet:
        """The template in its own frame."""
        if self.variant == NearMinimumVariant.SEAGULL:
            return build_seagull(n, self.ell, self.m, self.beam_targets)
        if self.variant == NearMinimumVariant.BUTTERFLY:
            return build_butterfly(n, self.ell, self.m, self.beam_targets)
        assert self.k is not None and self.t is not None
        return build_bouquet(
            n,
            self.ell,
            self.m,
            self.k,
            self.t,
            self.beam_targets_left,
            self.beam_targets_right,
        )

    def special_edges(self, n: int) -> EdgeSet:
        """The special subgraph in the input labeling."""
        if self.variant == NearMinimumVariant.SEAGULL:
            frame = seagull_edges(self.ell)
        elif self.variant == NearMinimumVariant.BUTTERFLY:
            frame = butterfly_edges(self.ell)
        else:
            assert self.k is not None and self.t is not None
            frame = bouquet_edges(self.ell, self.k, self.t)
        return rotate(EdgeSet.from_edges(n, frame), self.rotation)

    def sort_key(self) -> tuple[Any, ...]:
        """Variant priority, then the smallest parameters."""
        return (
            _PRIORITY[self.variant],
            self.rotation,
            self.ell,
            self.m,
            self.k or 0,
            self.t or 0,
            self.beam_targets,
            self.beam_targets_left,
            self.beam_targets_right,
        )

    def as_dict(self) -> dict[str, Any]:
        """Plain mapping for reports, without unset bouquet fields."""
        data = asdict(self)
        data["variant"] = str(self.variant)
        if self.variant != NearMinimumVariant.BOUQUET:
            for key in ("k", "t", "beam_targets_left", "beam_targets_right"):
                data.pop(key)
        else:
            data.pop("beam_targets")
        return data


def _seagull_matches(
    frame: EdgeSet, adjacent: list[list[int]], rotation: int
) -> Iterator[NearMinimumClassification]:
    n = frame.n
    for m in range(4, n - 2):
        targets = _single_targets(adjacent, range(m + 3, n))
        if targets is None:
            continue
        for ell in range(3, m):
            if not all(edge in frame for edge in seagull_edges(ell)):
                continue
            try:
                candidate = build_seagull(n, ell, m, targets)
            except ConstructionError:
                continue
            if candidate.bits == frame.bits:
                yield NearMinimumClassification(
                    NearMinimumVariant.SEAGULL, rotation, ell, m, tuple(targets)
                )


def _butterfly_matches(
    frame: EdgeSet, adjacent: list[list[int]], rotation: int
) -> Iterator[NearMinimumClassification]:
    n = frame.n
    for m in range(5, n - 2):
        targets = _single_targets(adjacent, range(m + 3, n))
        if targets is None:
            continue
        for ell in range(3, m - 1):
            if not all(edge in frame for edge in butterfly_edges(ell)):
                continue
            try:
                candidate = build_butterfly(n, ell, m, targets)
            except ConstructionError:
                continue
            if candidate.bits == frame.bits:
                yield NearMinimumClassification(
                    NearMinimumVariant.BUTTERFLY, rotation, ell, m, tuple(targets)
                )


def _bouquet_matches(
    frame: EdgeSet, adjacent: list[list[int]], rotation: int
) -> Iterator[NearMinimumClassification]:
    n = frame.n
    for m in range(0, n - 5):
        if not _net_present(frame, 0, m):
            break
        for k in range(m + 3, n - 2):
            for t in range(2, n - k):
                if (k, k + t) not in frame:
                    continue
                for ell in range(1, m + 2):
                    if (k, ell - 1) not in frame or (k + t, ell + 1) not in frame:
                        continue
                    left = _single_targets(adjacent, range(m + 3, k))
                    right = _single_targets(adjacent, range(k + t + 1, n))
                    if left is None or right is None:
                        continue
                    try:
                        candidate = build_bouquet(n, ell, m, k, t, left, right)
                    except ConstructionError:
                        continue
                    if candidate.bits == frame.bits:
                        yield NearMinimumClassification(
                            NearMinimumVariant.BOUQUET,
                            rotation,
                            ell,
                            m,
                            k=k,
                            t=t,
                            beam_targets_left=tuple(left),
                            beam_targets_right=tuple(right),
                        )


def near_minimum_matches(b: EdgeSet) -> list[NearMinimumClassification]:
    """Every template match over all rotations, before disambiguation."""
    n = b.n
    if n < 6 or len(b) != n - 1:
        return []
    matches: list[NearMinimumClassification] = []
    for rotation in range(n):
        frame = rotate(b, -rotation)
        adjacent = _adjacency(frame)
        matches.extend(_seagull_matches(frame, adjacent, rotation))
        matches.extend(_butterfly_matches(frame, adjacent, rotation))
        matches.extend(_bouquet_matches(frame, adjacent, rotation))
    return sorted(matches, key=NearMinimumClassification.sort_key)


def classify_near_minimum(b: EdgeSet) -> NearMinimumClassification:
    """Classify a saturated blocker with n - 1 edges as seagull, butterfly or bouquet."""
    n = b.n
    if n < 6:
        raise ClassificationError(f"near-minimum classification needs n >= 6, got {n}")
    if len(b) != n - 1:
        raise ClassificationError(f"expected {n - 1} edges, got {len(b)}")
    if not is_saturated_blocker(b):
        raise ClassificationError(f"{b} is not a saturated blocker")
    matches = near_minimum_matches(b)
    if not matches:
        LOGGER.error("No near-minimum template matches %s", b)
        raise ClassificationError(f"no seagull, butterfly or bouquet matches {b}")
    variants = {match.variant for match in matches}
    if len(variants) > 1:
        LOGGER.warning(
            "%s matches several variants %s; keeping %s",
            b,
            sorted(str(variant) for variant in variants),
            matches[0].variant,
        )
    return matches[0]


def _stability_candidates(
    frame: EdgeSet, match: NearMinimumClassification
) -> Iterator[EdgeSet]:
    ell = match.ell
    if match.variant == NearMinimumVariant.SEAGULL:
        yield frame.without((ell - 1, ell + 2), (ell - 2, ell + 1)).with_edges(
            (ell - 1, ell + 1)
        )
    elif match.variant == NearMinimumVariant.BUTTERFLY:
        yield frame.without(
            (ell, ell + 3), (ell - 1, ell + 2), (ell - 2, ell + 1)
        ).with_edges((ell - 1, ell + 1), (ell, ell + 2))
    else:
        assert match.k is not None and match.t is not None
        k, top = match.k, match.k + match.t
        yield frame.without((k, ell - 1), (k, top)).with_edges((k, ell))
        yield frame.without((top, ell + 1), (k, top)).with_edges((top, ell))


def stability_distance(b: EdgeSet) -> tuple[EdgeSet, int]:
    """A minimum blocker close to b and the size of their symmetric difference."""
    match = classify_near_minimum(b)
    frame = rotate(b, -match.rotation)
    for candidate in _stability_candidates(frame, match):
        neighbour = rotate(candidate, match.rotation)
        if recognize_min_blocker(neighbour) is not None:
            distance = len(b ^ neighbour)
            LOGGER.debug("Stability neighbour of %s at distance %d", b, distance)
            return neighbour, distance
    raise ClassificationError(f"no minimum blocker neighbour found for {b}")


# Vertex insertion


def extend_by_vertex(b: EdgeSet, position: int, e1: EdgeLike, e2: EdgeLike) -> EdgeSet:
    """Insert vertex position+1 into the gap after position and add e1, e2.

    Old vertices past ``position`` shift up by one; e1 and e2 use the new labels
    and must both end at the inserted vertex.
    """
    n = b.n
    if not 0 <= position < n:
        raise VertexRangeError(f"gap {position} is outside the {n}-gon")
    v = position + 1
    added = [Edge.of(*e) if not isinstance(e, Edge) else e for e in (e1, e2)]
    for edge in added:
        if not edge.touches(v):
            raise IncidenceError(f"{edge} does not end at the inserted vertex {v}")
    if added[0] == added[1]:
        raise DuplicateEdgeError(f"{added[0]} is added twice")
    mapping = [x if x <= position else x + 1 for x in range(n)]
    return relabel(b, mapping, n + 1).with_edges(*added)


@dataclass(frozen=True)
class InsertionRecipe:
    """A degree-2 vertex insertion: gap after ``position`` and two old-label targets."""

    rule: str
    position: int
    targets: tuple[int, int]

    def edges(self) -> tuple[tuple[int, int], tuple[int, int]]:
        """The two added edges in the extended labeling."""
        v = self.position + 1
        first, second = (x if x <= self.position else x + 1 for x in self.targets)
        return (v, first), (v, second)


def _only_crossing_beam(
    frame: EdgeSet, beam: tuple[int, int], first_beam_vertex: int
) -> tuple[int, int] | None:
    crossing = [
        other
        for other in frame
        if other.b >= first_beam_vertex and crosses(Edge.of(*beam), other)
    ]
    if len(crossing) != 1:
        return None
    other = crossing[0]
    return other.b, other.a


def _frame_recipes(frame: EdgeSet, shape: MinBlockerShape) -> Iterator[InsertionRecipe]:
    """Recipes in frame labels; gap i means the gap between i and i+1 (mod n)."""
    n, m = frame.n, shape.m
    beam_of = {m + 3 + j: target for j, target in enumerate(shape.beam_targets)}
    for i in range(m + 2, n):
        if i in beam_of:
            ell = beam_of[i]
            other = _only_crossing_beam(frame, (i, ell), m + 3)
            if other is not None and other[1] == ell - 1 and other[0] < i:
                yield InsertionRecipe("beam-before", i, (other[0], ell + 1))
        if i + 1 in beam_of:
            ell = beam_of[i + 1]
            other = _only_crossing_beam(frame, (i + 1, ell), m + 3)
            if other is not None and other[1] == ell + 1 and other[0] > i + 1:
                yield InsertionRecipe("beam-after", i, (other[0], ell - 1))
    if degree(frame, 1) == 2:
        yield from (
            InsertionRecipe("net-start", 0, (3, k))
            for k, target in beam_of.items()
            if target == 1
        )
    if degree(frame, m + 1) == 2:
        yield from (
            InsertionRecipe("net-end", m + 1, (m - 1, k))
            for k, target in beam_of.items()
            if target == m + 1
        )
    if m >= 2:
        if degree(frame, 2) == 2:
            yield InsertionRecipe("near-start", 1, (0, 4))
        if degree(frame, m) == 2:
            yield InsertionRecipe("near-end", m, (m - 2, m + 2))
    if m >= 3:
        for i in range(2, m):
            yield InsertionRecipe("middle", i, (i - 1, i + 2))
            if degree(frame, i + 1) == 2:
                yield InsertionRecipe("middle-right", i, (i - 1, i + 3))
            if degree(frame, i) == 2:
                yield InsertionRecipe("middle-left", i, (i - 2, i + 2))


def insertion_recipes(b: EdgeSet) -> list[InsertionRecipe]:
    """Every admissible degree-2 insertion into a minimum blocker, in input labels."""
    n = b.n
    found: dict[tuple[int, tuple[int, int]], InsertionRecipe] = {}
    for shape in min_blocker_shapes(b):
        frame = rotate(b, -shape.rotation)
        for recipe in _frame_recipes(frame, shape):
            position = (recipe.position + shape.rotation) % n
            first, second = ((x + shape.rotation) % n for x in recipe.targets)
            key = (position, (min(first, second), max(first, second)))
            if key not in found:
                found[key] = InsertionRecipe(recipe.rule, position, (first, second))
    return sorted(found.values(), key=lambda recipe: (recipe.position, recipe.targets))


def apply_recipe(b: EdgeSet, recipe: InsertionRecipe) -> EdgeSet:
    """Realise a recipe with extend_by_vertex."""
    return extend_by_vertex(b, recipe.position, *recipe.edges())


def noncovered_degree_two(b: EdgeSet) -> list[int]:
    """Vertices without an ear-cover that meet exactly two members."""
    return [v for v in uncovered_vertices(b) if degree(b, v) == 2]
