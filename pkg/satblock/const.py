"""Constants for the saturated blocker toolkit."""

from logging import getLogger

LOGGER = getLogger(__package__)

# Capacity guards (overridable through CAPACITY_ENV)
DEFAULT_MAX_TRIANGULATION_N = 14
DEFAULT_MAX_EXHAUSTIVE_N = 8
DEFAULT_MAX_EXHAUSTIVE_SIZED_N = 9
DEFAULT_MAX_MIN_BLOCKER_N = 12

CAPACITY_ENV = "SATBLOCK_CAPACITY"

# Spectrum bands, in dispatch order
BAND_QUADRILATERAL = "quadrilateral-band"
BAND_GAP = "gap-band"
BAND_MATRIOSHKA = "matrioshka-band"
BAND_NESTED = "nested-band"

# Seed coefficients of the nested-band size polynomial
NESTED_SEED = ("13/32", "-53/8", "193/4")

# Document metadata keys
META_CONSTRUCTION = "construction"
META_PARAMETERS = "parameters"

# SVG canvas
CANVAS_SIZE = 800
CANVAS_RADIUS = 340
LABEL_OFFSET = 28
VERTEX_RADIUS = 6
