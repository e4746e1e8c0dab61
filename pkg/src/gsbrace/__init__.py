"""Generalized semi-braces, set-theoretic Yang-Baxter solutions and strong semilattices of them."""

from .errors import AlgebraError
from .finalg import CarrierMap, FiniteGroup, FiniteSemigroup, Semilattice, Verdict
from .semibrace import GeneralizedLeftSemiBrace, LeftSemiBrace, associated_solution
from .sslattice import SemilatticeSystem, build_solution, composed_index_period
from .ybesol import SetSolution, index_period, is_solution

__version__ = "0.1.0"

__all__ = [
    "AlgebraError", "CarrierMap", "FiniteGroup", "FiniteSemigroup", "Semilattice", "Verdict",
    "GeneralizedLeftSemiBrace", "LeftSemiBrace", "associated_solution",
    "SemilatticeSystem", "build_solution", "composed_index_period",
    "SetSolution", "index_period", "is_solution",
]
