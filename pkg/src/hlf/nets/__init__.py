"""Nets Z^d -> Z u {+-inf}: presentation, classification, oracles."""

from .classify import (
    KINDS,
    Verdict,
    Witness,
    classify,
    classify_bounded,
    classify_compactoid,
    classify_open_lattice,
)
from .convolve import convolve_at, min_plus_convolve
from .core import (
    Affine,
    Const,
    Defect,
    FieldShape,
    NetSpec,
    Region,
    ValueRule,
    affine_extreme,
    breakpoint_radius,
    net_eval,
    polar_transform,
    reflection_net,
    require_valid,
    tabulate,
    validate_partition,
    window_box,
    window_points,
)
from .window import Counterexample, WindowReport, replay_witness, window_corroborate

__all__ = [
    "KINDS", "Affine", "Const", "Counterexample", "Defect", "FieldShape", "NetSpec",
    "Region", "ValueRule", "Verdict", "WindowReport", "Witness", "affine_extreme",
    "breakpoint_radius", "classify", "classify_bounded", "classify_compactoid",
    "classify_open_lattice", "convolve_at", "min_plus_convolve", "net_eval",
    "polar_transform", "reflection_net", "replay_witness", "require_valid", "tabulate",
    "validate_partition", "window_box", "window_corroborate", "window_points",
]
