"""Unit tests for the geometry primitives and the containment DP."""

# pylint: disable=redefined-outer-name

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from satblock.core import (
    Edge,
    EdgeSet,
    Polygon,
    completable_diagonals,
    contains_triangulation,
    crosses,
    degree,
    ear_cover,
    is_blocker,
    is_saturated_blocker,
    is_triangulation,
    neighbours,
    reflect,
    rotate,
    slot_table,
    uncovered_vertices,
    vertex_deletion,
    witness_triangulation,
)
from satblock.enumeration import triangulation_masks
from satblock.exceptions import (
    BoundaryEdgeError,
    InvalidEdgeError,
    PolygonSizeError,
    VertexRangeError,
)


@st.composite
def edge_sets(draw, min_n=4, max_n=9):
    """Random diagonal sets on a random polygon."""
    n = draw(st.integers(min_n, max_n))
    bits = draw(st.integers(0, slot_table(n).full))
    return EdgeSet(n, bits)


class TestEdge:
    """Edges and their canonical form."""

    def test_of_orders_endpoints(self):
        """Edge.of stores the smaller endpoint first."""
        assert Edge.of(4, 1) == Edge(1, 4)

    def test_order_wraps(self):
        """Order is the cyclic distance."""
        assert Edge(0, 5).order(6) == 1
        assert Edge(0, 4).order(6) == 2
        assert Edge(1, 4).order(6) == 3

    def test_loop_rejected(self):
        """Equal endpoints raise."""
        with pytest.raises(InvalidEdgeError):
            Edge.of(2, 2)

    def test_other(self):
        """other returns the far endpoint."""
        assert Edge(1, 4).other(1) == 4
        with pytest.raises(InvalidEdgeError):
            Edge(1, 4).other(2)


class TestCrosses:
    """Strict interior crossing."""

    def test_interleaved(self):
        """Interleaved endpoints cross."""
        assert crosses(Edge(0, 3), Edge(1, 4))

    def test_shared_endpoint(self):
        """Touching at an endpoint is not a crossing."""
        assert not crosses(Edge(0, 3), Edge(3, 5))

    def test_disjoint_ranges(self):
        """Separated chords do not cross."""
        assert not crosses(Edge(0, 2), Edge(3, 5))

    def test_nested(self):
        """A chord inside another does not cross it."""
        assert not crosses(Edge(0, 4), Edge(1, 3))


class TestEdgeSet:
    """Bitset-backed diagonal sets."""

    def test_boundary_edge_rejected(self):
        """Order-1 edges cannot enter a set."""
        with pytest.raises(BoundaryEdgeError):
            EdgeSet.from_edges(5, [(0, 1)])
        with pytest.raises(BoundaryEdgeError):
            EdgeSet.from_edges(5, [(0, 4)])

    def test_vertex_range(self):
        """Vertices past n-1 raise."""
        with pytest.raises(VertexRangeError):
            EdgeSet.from_edges(5, [(0, 5)])

    def test_polygon_size(self):
        """Triangles are the smallest polygons."""
        with pytest.raises(PolygonSizeError):
            Polygon(2)
        assert Polygon(6).diagonal_count == 9

    def test_membership_accepts_pairs(self, b65):
        """Membership works for tuples in either order and for edges."""
        assert (3, 0) in b65
        assert Edge(2, 5) in b65
        assert (0, 2) not in b65
        assert (0, 1) not in b65

    def test_set_algebra(self, b65):
        """Union, difference and complement behave like sets."""
        extra = EdgeSet.from_edges(6, [(0, 2)])
        assert len(b65 | extra) == 6
        assert (b65 | extra) - extra == b65
        assert len(b65.complement()) == 9 - 5
        assert b65.issubset(EdgeSet.all_diagonals(6))

    def test_mixed_polygons(self, b65, pentagon_net):
        """Sets on different polygons do not combine."""
        with pytest.raises(PolygonSizeError):
            _ = b65 | pentagon_net

    def test_pairs_sorted(self, b65):
        """pairs lists members in lexicographic order."""
        assert b65.pairs() == [(0, 3), (0, 4), (1, 3), (1, 4), (2, 5)]


class TestTriangulations:
    """Triangulation checks and the containment DP."""

    def test_fan(self):
        """A fan is a triangulation."""
        assert is_triangulation(EdgeSet.from_edges(6, [(0, 2), (0, 3), (0, 4)]))

    def test_crossing_set(self):
        """Crossing members disqualify a set."""
        assert not is_triangulation(EdgeSet.from_edges(6, [(0, 2), (1, 3), (2, 4)]))

    def test_quadrilateral(self):
        """One diagonal triangulates a quadrilateral."""
        assert is_triangulation(EdgeSet.from_edges(4, [(0, 2)]))

    def test_all_diagonals(self):
        """The full diagonal set contains a triangulation."""
        assert contains_triangulation(EdgeSet.all_diagonals(6))

    def test_complement_of_blocker(self, b65):
        """The complement of a blocker contains no triangulation."""
        assert not contains_triangulation(b65.complement())
        assert witness_triangulation(b65.complement()) is None

    def test_empty_pentagon(self):
        """Nothing triangulates a pentagon without diagonals."""
        assert not contains_triangulation(EdgeSet.empty(5))

    def test_triangle(self):
        """The triangle is its own triangulation."""
        assert contains_triangulation(EdgeSet.empty(3))

    def test_witness_single_option(self):
        """With one allowed diagonal the witness is that diagonal."""
        witness = witness_triangulation(EdgeSet.from_edges(4, [(0, 2)]))
        assert witness is not None
        assert witness.diagonals.pairs() == [(0, 2)]

    def test_witness_full(self):
        """The full set yields a size-3 witness on the hexagon."""
        witness = witness_triangulation(EdgeSet.all_diagonals(6))
        assert witness is not None
        assert len(witness) == 3
        assert is_triangulation(witness.diagonals)

    @given(edge_sets())
    @settings(max_examples=150, deadline=None)
    def test_witness_soundness(self, allowed):
        """A witness is a triangulation inside the allowed set."""
        witness = witness_triangulation(allowed)
        assert (witness is not None) == contains_triangulation(allowed)
        if witness is not None:
            assert is_triangulation(witness.diagonals)
            assert witness.diagonals.issubset(allowed)

    @given(edge_sets(), st.data())
    @settings(max_examples=150, deadline=None)
    def test_monotone(self, allowed, data):
        """Adding allowed diagonals never destroys a triangulation."""
        extra = data.draw(st.integers(0, slot_table(allowed.n).full))
        bigger = allowed | EdgeSet(allowed.n, extra)
        if contains_triangulation(allowed):
            assert contains_triangulation(bigger)

    @given(edge_sets(max_n=8))
    @settings(max_examples=60, deadline=None)
    def test_completable_matches_per_edge(self, allowed):
        """The outside DP agrees with forcing each diagonal in turn."""
        through = completable_diagonals(allowed)
        masks = triangulation_masks(allowed.n)
        for edge in EdgeSet.all_diagonals(allowed.n):
            single = EdgeSet.from_edges(allowed.n, [edge]).bits
            usable = allowed.bits | single
            expected = any(mask & single and not mask & ~usable for mask in masks)
            assert (edge in through) == expected


class TestBlockers:
    """Blocker and saturation verdicts."""

    def test_quadrilateral_pair(self):
        """Both diagonals of a quadrilateral block it."""
        assert is_saturated_blocker(EdgeSet.from_edges(4, [(0, 2), (1, 3)]))

    def test_pentagon_net(self, pentagon_net):
        """Three consecutive ear-covers block the pentagon."""
        assert is_blocker(pentagon_net)
        assert is_saturated_blocker(pentagon_net)

    def test_single_diagonal(self):
        """One diagonal does not block a hexagon."""
        assert not is_blocker(EdgeSet.from_edges(6, [(0, 2)]))

    def test_b65(self, b65):
        """The hexagon blocker of size 5 is saturated."""
        assert is_blocker(b65)
        assert is_saturated_blocker(b65)

    def test_superset_not_saturated(self):
        """A blocker with a redundant diagonal is not saturated."""
        b = EdgeSet.from_edges(5, [(0, 2), (1, 3), (2, 4), (1, 4)])
        assert is_blocker(b)
        assert not is_saturated_blocker(b)
        assert not is_saturated_blocker(EdgeSet.all_diagonals(6))

    def test_triangle_vacuous(self):
        """Only the empty set is a saturated blocker of a triangle."""
        assert is_blocker(EdgeSet.empty(3))
        assert is_saturated_blocker(EdgeSet.empty(3))

    @given(edge_sets(max_n=8))
    @settings(max_examples=100, deadline=None)
    def test_saturation_definition(self, b):
        """One-pass saturation equals the per-edge definition."""
        expected = is_blocker(b) and all(
            not is_blocker(b.without(edge)) for edge in b
        )
        assert is_saturated_blocker(b) == expected

    @given(edge_sets(), st.integers(0, 20))
    @settings(max_examples=100, deadline=None)
    def test_rotation_equivariance(self, b, r):
        """Verdicts do not depend on where labelling starts."""
        turned = rotate(b, r)
        assert is_blocker(turned) == is_blocker(b)
        assert is_saturated_blocker(turned) == is_saturated_blocker(b)
        assert is_blocker(reflect(b)) == is_blocker(b)


class TestDegrees:
    """Degrees, ear-covers and neighbourhoods."""

    def test_degrees(self, b65):
        """Degrees read off the edge list."""
        assert degree(b65, 0) == 2
        assert degree(b65, 5) == 1
        assert degree(EdgeSet.empty(6), 3) == 0

    def test_degree_range(self, b65):
        """Vertices outside the polygon raise."""
        with pytest.raises(VertexRangeError):
            degree(b65, 6)

    def test_neighbours(self, b65):
        """Neighbours are sorted."""
        assert neighbours(b65, 3) == [0, 1]

    def test_ear_cover_wraps(self):
        """The ear-cover of vertex 0 joins n-1 and 1."""
        assert ear_cover(6, 0) == Edge(1, 5)

    def test_uncovered(self, b65):
        """B(6,5) covers only vertices 2 and 5 by ear-covers."""
        assert uncovered_vertices(b65) == [0, 1, 3, 4]


class TestVertexDeletion:
    """Restriction to the polygon left after deleting a vertex."""

    def test_b65(self, b65):
        """Deleting vertex 2 drops its edge and its ear-cover."""
        assert vertex_deletion(b65, 2).pairs() == [(0, 2), (0, 3), (1, 3)]

    def test_pentagon(self, pentagon_net):
        """Deleting vertex 0 of the pentagon net leaves the quadrilateral pair."""
        assert vertex_deletion(pentagon_net, 0).pairs() == [(0, 2), (1, 3)]

    def test_isolated_vertex(self):
        """Deleting an untouched vertex keeps the size."""
        b = EdgeSet.from_edges(7, [(0, 2), (0, 3), (3, 5)])
        assert len(vertex_deletion(b, 6)) == 3
