"""Tests for blocker documents."""

import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from satblock.core import EdgeSet, slot_table
from satblock.document import (
    BlockerDocument,
    parse_document,
    serialize_document,
)
from satblock.exceptions import (
    BlockerError,
    BoundaryEdgeError,
    DocumentError,
    DuplicateEdgeError,
    InvalidEdgeError,
    VertexRangeError,
)


@st.composite
def documents(draw):
    """Random documents with string metadata."""
    n = draw(st.integers(4, 12))
    b = EdgeSet(n, draw(st.integers(0, slot_table(n).full)))
    metadata = draw(st.dictionaries(st.text(max_size=8), st.text(max_size=8), max_size=3))
    return BlockerDocument.from_blocker(b, metadata)


class TestParse:
    """Parsing and validation."""

    def test_normalises(self):
        """Reversed pairs are flipped and edges sorted."""
        doc = parse_document('{"n": 6, "edges": [[5, 2], [0, 3], [4, 0]]}')
        assert doc.edges == ((0, 3), (0, 4), (2, 5))
        assert doc.metadata == {}

    def test_metadata(self):
        """Metadata values are kept as strings."""
        doc = parse_document(
            '{"n": 5, "edges": [[0, 2]], "metadata": {"construction": "min-blocker"}}'
        )
        assert doc.metadata == {"construction": "min-blocker"}

    def test_blocker(self, b65):
        """The document converts back to an EdgeSet."""
        doc = parse_document(json.dumps({"n": 6, "edges": b65.pairs()}))
        assert doc.blocker() == b65

    def test_malformed_json(self):
        """Broken JSON is a document error."""
        with pytest.raises(DocumentError, match="malformed JSON"):
            parse_document('{"n": 6, "edges": [')

    @pytest.mark.parametrize(
        "payload",
        [
            {"edges": [[0, 2]]},
            {"n": 6},
            {"n": 2, "edges": []},
            {"n": "six", "edges": []},
            {"n": 6, "edges": [[0, 2, 4]]},
            {"n": 6, "edges": [["0", 2]]},
            {"n": 6, "edges": [], "extra": 1},
        ],
    )
    def test_schema(self, payload):
        """Schema violations are document errors."""
        with pytest.raises(DocumentError):
            parse_document(json.dumps(payload))

    def test_boundary_edge(self):
        """Boundary edges are rejected with their own error."""
        with pytest.raises(BoundaryEdgeError):
            parse_document('{"n": 5, "edges": [[0, 1]]}')
        with pytest.raises(BoundaryEdgeError):
            parse_document('{"n": 5, "edges": [[4, 0]]}')

    def test_vertex_range(self):
        """Vertices outside the polygon are rejected."""
        with pytest.raises(VertexRangeError):
            parse_document('{"n": 5, "edges": [[0, 7]]}')
        with pytest.raises(VertexRangeError):
            parse_document('{"n": 5, "edges": [[-1, 2]]}')

    def test_duplicate(self):
        """An edge listed twice, in either order, is rejected."""
        with pytest.raises(DuplicateEdgeError):
            parse_document('{"n": 6, "edges": [[1, 3], [3, 1]]}')

    def test_loop(self):
        """Equal endpoints are an invalid edge."""
        with pytest.raises(InvalidEdgeError):
            parse_document('{"n": 6, "edges": [[2, 2]]}')

    def test_errors_share_base(self):
        """Every document failure is a BlockerError."""
        for text in ("nope", '{"n": 5, "edges": [[0, 1]]}'):
            with pytest.raises(BlockerError):
                parse_document(text)


class TestSerialize:
    """Serialisation."""

    def test_stable_layout(self, b65):
        """Keys and edges come out in a fixed order."""
        doc = BlockerDocument.from_blocker(b65, {"z": 1, "a": "x"})
        text = serialize_document(doc)
        assert text.endswith("\n")
        assert json.loads(text) == {
            "n": 6,
            "edges": [[0, 3], [0, 4], [1, 3], [1, 4], [2, 5]],
            "metadata": {"a": "x", "z": "1"},
        }
        assert text.index('"a"') < text.index('"z"')

    @given(documents())
    @settings(max_examples=100, deadline=None)
    def test_round_trip(self, doc):
        """Parsing a serialised document gives it back."""
        parsed = parse_document(serialize_document(doc))
        assert parsed.n == doc.n
        assert parsed.edges == doc.edges
        assert dict(parsed.metadata) == dict(doc.metadata)
