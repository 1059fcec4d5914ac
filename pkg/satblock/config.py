"""Capacity configuration for the exhaustive searches."""

from __future__ import annotations

import os
from dataclasses import dataclass, replace
from typing import Any

import voluptuous as vol

from .const import (
    CAPACITY_ENV,
    DEFAULT_MAX_EXHAUSTIVE_N,
    DEFAULT_MAX_EXHAUSTIVE_SIZED_N,
    DEFAULT_MAX_MIN_BLOCKER_N,
    DEFAULT_MAX_TRIANGULATION_N,
    LOGGER,
)
from .exceptions import CapacityError

CONF_TRIANGULATIONS = "triangulations"
CONF_EXHAUSTIVE = "exhaustive"
CONF_EXHAUSTIVE_SIZED = "exhaustive_sized"
CONF_MIN_BLOCKERS = "min_blockers"

_GUARD = vol.All(vol.Coerce(int), vol.Range(min=3))

CAPACITY_SCHEMA = vol.Schema(
    {
        vol.Optional(CONF_TRIANGULATIONS): _GUARD,
        vol.Optional(CONF_EXHAUSTIVE): _GUARD,
        vol.Optional(CONF_EXHAUSTIVE_SIZED): _GUARD,
        vol.Optional(CONF_MIN_BLOCKERS): _GUARD,
    }
)


@dataclass(frozen=True)
class CapacityLimits:
    """Largest polygon sizes the brute-force tools accept."""

    triangulations: int = DEFAULT_MAX_TRIANGULATION_N
    exhaustive: int = DEFAULT_MAX_EXHAUSTIVE_N
    exhaustive_sized: int = DEFAULT_MAX_EXHAUSTIVE_SIZED_N
    min_blockers: int = DEFAULT_MAX_MIN_BLOCKER_N

    def check(self, guard: str, n: int) -> None:
        """Raise CapacityError when n exceeds the named guard."""
        limit = getattr(self, guard)
        if n > limit:
            LOGGER.error("Capacity guard %s=%d exceeded by n=%d", guard, limit, n)
            raise CapacityError(
                f"n={n} exceeds the {guard} guard ({limit}); "
                f"raise it with {CAPACITY_ENV}={guard}=<n>"
            )


def parse_overrides(raw: str) -> dict[str, Any]:
    """Parse a comma separated key=value override string."""
    overrides: dict[str, Any] = {}
    for item in filter(None, (part.strip() for part in raw.split(","))):
        key, sep, value = item.partition("=")
        if not sep:
            raise CapacityError(f"capacity override {item!r} is not key=value")
        overrides[key.strip()] = value.strip()
    try:
        return CAPACITY_SCHEMA(overrides)
    except vol.Invalid as err:
        raise CapacityError(f"invalid capacity override: {err}") from err


def load_limits(environ: dict[str, str] | None = None) -> CapacityLimits:
    """Return the default limits with any environment override applied."""
    env = os.environ if environ is None else environ
    raw = env.get(CAPACITY_ENV, "")
    if not raw:
        return CapacityLimits()
    overrides = parse_overrides(raw)
    LOGGER.debug("Capacity overrides from %s: %s", CAPACITY_ENV, overrides)
    return replace(CapacityLimits(), **overrides)
