"""Balanced generalized de Bruijn sequences and the 52-card stack."""

from ._core import (
    Error,
    GuardExceeded,
    ImpossibleSignal,
    Infeasible,
    InvalidArgument,
    InvalidStack,
    InvariantViolation,
    ParseError,
    build_circuit,
    builtin_order,
    builtin_sequence,
    canonical_rotation,
    complement,
    count,
    crib_json,
    enumerate,
    eulerian_sequence,
    feasible,
    generate,
    lookup,
    period,
    reveal,
    run_cli,
    verify,
    window_histogram,
)

__all__ = [
    "Error",
    "GuardExceeded",
    "ImpossibleSignal",
    "Infeasible",
    "InvalidArgument",
    "InvalidStack",
    "InvariantViolation",
    "ParseError",
    "build_circuit",
    "builtin_order",
    "builtin_sequence",
    "canonical_rotation",
    "complement",
    "count",
    "crib_json",
    "enumerate",
    "eulerian_sequence",
    "feasible",
    "generate",
    "lookup",
    "period",
    "reveal",
    "run_cli",
    "verify",
    "window_histogram",
]
