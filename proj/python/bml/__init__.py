"""Biham-Middleton-Levine traffic cellular automaton."""

from ._bml import (
    Backend,
    Cell,
    Grid,
    Phase,
    Regime,
    StepMetrics,
    VerifyReport,
    __version__,
    classify,
    count_vehicles,
    encode_ppm,
    init_grid,
    lane_width,
    simulate,
    step,
    verify_backends,
    write_ppm,
)

__all__ = [
    "Backend",
    "Cell",
    "Grid",
    "Phase",
    "Regime",
    "StepMetrics",
    "VerifyReport",
    "__version__",
    "classify",
    "count_vehicles",
    "encode_ppm",
    "init_grid",
    "lane_width",
    "simulate",
    "step",
    "verify_backends",
    "write_ppm",
]
