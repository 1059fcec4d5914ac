"""JSON documents holding a single blocker."""

from __future__ import annotations

import json
from collections.abc import Mapping
from dataclasses import dataclass, field
from typing import Any

import voluptuous as vol

from .core import Edge, EdgeSet, slot_of
from .exceptions import DocumentError, DuplicateEdgeError

CONF_N = "n"
CONF_EDGES = "edges"
CONF_METADATA = "metadata"

DOCUMENT_SCHEMA = vol.Schema(
    {
        vol.Required(CONF_N): vol.All(int, vol.Range(min=3)),
        vol.Required(CONF_EDGES): [vol.ExactSequence([int, int])],
        vol.Optional(CONF_METADATA, default={}): {str: vol.Coerce(str)},
    }
)


@dataclass(frozen=True)
class BlockerDocument:
    """A blocker with free-form provenance metadata."""

    n: int
    edges: tuple[tuple[int, int], ...]
    metadata: Mapping[str, str] = field(default_factory=dict)

    @classmethod
    def from_blocker(
        cls, b: EdgeSet, metadata: Mapping[str, Any] | None = None
    ) -> BlockerDocument:
        """Wrap an EdgeSet, stringifying metadata values."""
        meta = {str(key): str(value) for key, value in (metadata or {}).items()}
        return cls(b.n, tuple(b.pairs()), meta)

    def blocker(self) -> EdgeSet:
        """The edges as an EdgeSet."""
        return EdgeSet.from_edges(self.n, self.edges)


def parse_document(text: str) -> BlockerDocument:
    """Parse and validate a document.

    Edges are normalised to (a, b) with a < b and sorted. Boundary edges,
    out-of-range vertices and repeated edges raise their own errors.
    """
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as err:
        raise DocumentError(f"malformed JSON: {err}") from err
    try:
        data = DOCUMENT_SCHEMA(raw)
    except vol.Invalid as err:
        raise DocumentError(f"invalid blocker document: {err}") from err
    n = data[CONF_N]
    seen: set[Edge] = set()
    for u, v in data[CONF_EDGES]:
        slot_of(n, (u, v))
        edge = Edge.of(u, v)
        if edge in seen:
            raise DuplicateEdgeError(f"edge {edge} is listed twice")
        seen.add(edge)
    edges = tuple((edge.a, edge.b) for edge in sorted(seen))
    return BlockerDocument(n, edges, dict(data[CONF_METADATA]))


def serialize_document(doc: BlockerDocument) -> str:
    """Serialise with sorted edges and metadata keys, newline-terminated."""
    payload = {
        CONF_N: doc.n,
        CONF_EDGES: [list(edge) for edge in sorted(doc.edges)],
        CONF_METADATA: dict(sorted(doc.metadata.items())),
    }
    return json.dumps(payload) + "\n"
