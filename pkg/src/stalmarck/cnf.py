"""DIMACS CNF reading/writing and model evaluation."""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, Iterable, List

Clause = List[int]
Assignment = Dict[int, bool]


class DimacsError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class MissingHeader(DimacsError):
    pass


class MalformedHeader(DimacsError):
    pass


class LiteralOutOfRange(DimacsError):
    pass


class UnterminatedClause(DimacsError):
    pass


class MalformedToken(DimacsError):
    pass


class ClauseCountMismatch(UserWarning):
    pass


class UnassignedVariable(KeyError):
    pass


@dataclass
class CnfFormula:
    num_vars: int
    clauses: List[Clause] = field(default_factory=list)

    def __post_init__(self):
        if self.num_vars < 0:
            raise ValueError("num_vars must be non-negative")
        for clause in self.clauses:
            for l in clause:
                if l == 0 or abs(l) > self.num_vars:
                    raise LiteralOutOfRange(f"literal {l} outside 1..{self.num_vars}")

    @property
    def num_clauses(self) -> int:
        return len(self.clauses)

    def num_literals(self) -> int:
        return sum(len(c) for c in self.clauses)


def parse_dimacs(text: str | Iterable[str]) -> CnfFormula:
    """Parse DIMACS CNF from a string or an iterable of lines.

    Clauses may span lines and must each end with ``0``. The clause count in
    the header is only checked for a warning.
    """
    lines = text.splitlines() if isinstance(text, str) else text
    num_vars = None
    declared_clauses = 0
    clauses: List[Clause] = []
    current: Clause = []
    lineno = 0
    for lineno, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line or line[0] == "c":
            continue
        if line[0] == "p":
            if num_vars is not None:
                raise MalformedHeader("duplicate problem line", lineno)
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise MalformedHeader(f"expected 'p cnf <vars> <clauses>', got {line!r}", lineno)
            try:
                num_vars, declared_clauses = int(parts[2]), int(parts[3])
            except ValueError:
                raise MalformedHeader(f"non-integer count in {line!r}", lineno) from None
            if num_vars < 0 or declared_clauses < 0:
                raise MalformedHeader("negative count in problem line", lineno)
            continue
        for tok in line.split():
            try:
                l = int(tok)
            except ValueError:
                raise MalformedToken(f"expected an integer literal, got {tok!r}", lineno) from None
            if num_vars is None:
                raise MissingHeader("clause data before 'p cnf' line", lineno)
            if l == 0:
                clauses.append(current)
                current = []
            elif abs(l) > num_vars:
                raise LiteralOutOfRange(f"literal {l} exceeds declared {num_vars} variables", lineno)
            else:
                current.append(l)
    if num_vars is None:
        raise MissingHeader("no 'p cnf' line found")
    if current:
        raise UnterminatedClause("end of input inside a clause", lineno)
    if len(clauses) != declared_clauses:
        warnings.warn(
            f"header declares {declared_clauses} clauses, found {len(clauses)}",
            ClauseCountMismatch,
            stacklevel=2,
        )
    return CnfFormula(num_vars, clauses)


def read_dimacs(path: str | Path) -> CnfFormula:
    with open(path) as f:
        return parse_dimacs(f)


def write_dimacs(cnf: CnfFormula) -> str:
    out = [f"p cnf {cnf.num_vars} {len(cnf.clauses)}\n"]
    for clause in cnf.clauses:
        out.append(" ".join(map(str, clause + [0])) + "\n")
    return "".join(out)


def evaluate(cnf: CnfFormula, model: Assignment) -> bool:
    """True iff every clause has a literal satisfied by ``model``."""
    for clause in cnf.clauses:
        for l in clause:
            try:
                value = model[abs(l)]
            except KeyError:
                raise UnassignedVariable(abs(l)) from None
            if value == (l > 0):
                break
        else:
            return False
    return True
