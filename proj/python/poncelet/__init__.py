"""Poncelet polygons between a circle and a parabola."""

from ._core import (
    PonceletError,
    classify,
    closes_after,
    isoperiodic,
    locus,
    painleve,
    quartic_shape,
    trace,
    unique_p_for_4,
    verify_identities,
)

__all__ = [
    "PonceletError",
    "classify",
    "closes_after",
    "isoperiodic",
    "locus",
    "painleve",
    "quartic_shape",
    "trace",
    "unique_p_for_4",
    "verify_identities",
]
