"""Errors raised by the saturated blocker toolkit."""


class BlockerError(Exception):
    """Base error for the saturated blocker toolkit."""


class InvalidEdgeError(BlockerError):
    """Error to indicate an edge is not a valid vertex pair."""


class VertexRangeError(InvalidEdgeError):
    """Error to indicate a vertex lies outside the polygon."""


class BoundaryEdgeError(InvalidEdgeError):
    """Error to indicate a boundary edge was given where a diagonal is required."""


class DuplicateEdgeError(InvalidEdgeError):
    """Error to indicate an edge is listed twice."""


class PolygonSizeError(BlockerError):
    """Error to indicate an invalid or mismatched polygon size."""


class CapacityError(BlockerError):
    """Error to indicate a capacity guard was exceeded."""


class ConstructionError(BlockerError):
    """Error to indicate construction parameters violate a constraint."""


class NetLengthError(ConstructionError):
    """Error to indicate the boundary net length is out of range."""


class BeamCountError(ConstructionError):
    """Error to indicate the wrong number of beam targets."""


class BeamTargetError(ConstructionError):
    """Error to indicate a beam target outside its domain."""


class ConflictingBeamsError(ConstructionError):
    """Error to indicate two beams conflict."""


class PivotRangeError(ConstructionError):
    """Error to indicate the pivot of a special subgraph is out of range."""


class BouquetRangeError(ConstructionError):
    """Error to indicate the bouquet anchor or width is out of range."""


class InvalidPartitionError(ConstructionError):
    """Error to indicate an invalid four-way vertex partition."""


class SubBlockerError(ConstructionError):
    """Error to indicate a nested sub-blocker is not a saturated blocker."""


class SpectrumRangeError(ConstructionError):
    """Error to indicate a size outside the realizable range."""


class PolygonTooSmallError(ConstructionError):
    """Error to indicate the polygon is too small for the requested band."""


class ClassificationError(BlockerError):
    """Error to indicate a blocker matches no near-minimum template."""


class IncidenceError(BlockerError):
    """Error to indicate an added edge misses the inserted vertex."""


class DocumentError(BlockerError):
    """Error to indicate a malformed blocker document."""
