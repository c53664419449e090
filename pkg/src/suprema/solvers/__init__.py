"""Supremal-sublanguage solvers: generic schemes and closed forms."""

from suprema.solvers.closed_forms import (
    sup_controllable,
    sup_controllable_normal,
    sup_l_closed,
    sup_normal,
    sup_prefix_closed_controllable,
    sup_trace_closed,
    sup_trace_closed_bounded,
)
from suprema.solvers.problem import (
    DEFAULT_MAX_ITER,
    PROPERTIES,
    InvariantViolation,
    NonConvergence,
    SolverResult,
    SynthesisProblem,
    check_property,
    iterate,
)
from suprema.solvers.schemes import sup_mixed, sup_relaxed, sup_single, sup_system

# properties whose conjunction each problem-level solver maximizes
SOLVER_PROPERTIES = {
    "sup_normal": ("normal",),
    "sup_l_closed": ("l_closed",),
    "sup_prefix_closed_controllable": ("prefix_closed", "controllable"),
    "sup_controllable": ("controllable",),
    "sup_controllable_normal": ("controllable", "normal", "prefix_normal"),
    "sup_trace_closed_bounded": ("trace_closed",),
}

__all__ = [
    "DEFAULT_MAX_ITER",
    "PROPERTIES",
    "SOLVER_PROPERTIES",
    "InvariantViolation",
    "NonConvergence",
    "SolverResult",
    "SynthesisProblem",
    "check_property",
    "iterate",
    "sup_controllable",
    "sup_controllable_normal",
    "sup_l_closed",
    "sup_mixed",
    "sup_normal",
    "sup_prefix_closed_controllable",
    "sup_relaxed",
    "sup_single",
    "sup_system",
    "sup_trace_closed",
    "sup_trace_closed_bounded",
]
