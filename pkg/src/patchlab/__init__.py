"""Analytical toolkit for rectangular microstrip patch antennas."""

__version__ = "0.1.0"

from .core import (  # noqa: E402
    C0,
    Excitation,
    FieldPoint,
    ModeIndex,
    OperatingPoint,
    PatchGeometry,
    Substrate,
    make_operating_point,
    sinc,
)
from .design import DesignResult, MatchMetrics, match_metrics, resonant_frequency, synthesize  # noqa: E402

__all__ = [
    "C0",
    "DesignResult",
    "Excitation",
    "FieldPoint",
    "MatchMetrics",
    "ModeIndex",
    "OperatingPoint",
    "PatchGeometry",
    "Substrate",
    "make_operating_point",
    "match_metrics",
    "resonant_frequency",
    "sinc",
    "synthesize",
]
