"""Supremal sublanguages of regular languages via closure operators."""

from suprema.lang import Alphabet, IndependenceRelation, Lang, LanguageError, StateBudgetExceeded
from suprema.operators import OperatorKind, make_operator
from suprema.solvers import SolverResult, SynthesisProblem

__all__ = [
    "Alphabet",
    "IndependenceRelation",
    "Lang",
    "LanguageError",
    "OperatorKind",
    "SolverResult",
    "StateBudgetExceeded",
    "SynthesisProblem",
    "make_operator",
]
__version__ = "0.1.0"
