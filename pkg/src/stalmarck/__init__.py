"""Stålmarck-style SAT solving on implication triplets."""

from .cnf import CnfFormula, evaluate, parse_dimacs, read_dimacs, write_dimacs
from .equiv import EquivState
from .literal import FALSE, TRUE, lit, neg
from .normalize import Triplet, TripletFormula, normalize
from .solver import SolveOutcome, SolverConfig, Verdict, solve, solve_cnf

__version__ = "0.1.0"

__all__ = [
    "CnfFormula",
    "EquivState",
    "FALSE",
    "SolveOutcome",
    "SolverConfig",
    "TRUE",
    "Triplet",
    "TripletFormula",
    "Verdict",
    "evaluate",
    "lit",
    "neg",
    "normalize",
    "parse_dimacs",
    "read_dimacs",
    "solve",
    "solve_cnf",
    "write_dimacs",
]
