"""CNF to implication-triplet translation.

Each triplet ``(x, y, z)`` stands for ``x <-> (y -> z)``. Disjunctions become
``-a -> b`` chains, conjunctions become ``-(a -> -b)``, double negation and
``-a`` are absorbed by the signed literal encoding, so only implication nodes
produce triplets. Both chains are folded to the right.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, NamedTuple, Sequence, Tuple

from .cnf import CnfFormula
from .literal import FALSE, TRUE, lit, lit_str, neg, var_of


class EmptyClause(ValueError):
    pass


class Triplet(NamedTuple):
    x: int
    y: int
    z: int
    index: int = 0

    def literals(self) -> Tuple[int, int, int]:
        return (self.x, self.y, self.z)

    def show(self, num_original: int | None = None) -> str:
        return "(" + ", ".join(lit_str(l, num_original) for l in self.literals()) + ")"


class BridgeAllocator:
    """Hands out fresh bridge variables and records the triplets defining them."""

    def __init__(self, num_original: int):
        self.num_original = num_original
        self.next_var = num_original + 1
        self.triplets: List[Triplet] = []

    def define(self, y: int, z: int) -> int:
        b = 2 * self.next_var
        self.next_var += 1
        self.triplets.append(Triplet(b, y, z, len(self.triplets)))
        return b

    @property
    def num_bridges(self) -> int:
        return self.next_var - self.num_original - 1


@dataclass(frozen=True)
class TripletFormula:
    triplets: Tuple[Triplet, ...]
    root: int
    num_original_vars: int
    num_bridge_vars: int

    @property
    def num_vars(self) -> int:
        return self.num_original_vars + self.num_bridge_vars

    def is_bridge(self, v: int) -> bool:
        return v > self.num_original_vars

    def occurring_vars(self) -> List[int]:
        seen = {var_of(l) for t in self.triplets for l in (t.x, t.y, t.z)}
        seen.add(var_of(self.root))
        seen.discard(0)
        return sorted(seen)


def encode_clause(clause: Sequence[int], alloc: BridgeAllocator) -> int:
    """Literal equivalent to the disjunction of DIMACS literals ``clause``."""
    if not clause:
        raise EmptyClause("cannot encode an empty clause")
    rest = lit(clause[-1])
    for l in reversed(clause[:-1]):
        rest = alloc.define(neg(lit(l)), rest)
    return rest


def encode_conjunction(parts: Sequence[int], alloc: BridgeAllocator) -> int:
    if not parts:
        raise ValueError("empty conjunction")
    rest = parts[-1]
    for part in reversed(parts[:-1]):
        rest = neg(alloc.define(part, neg(rest)))
    return rest


def normalize(cnf: CnfFormula) -> TripletFormula:
    """Equisatisfiable triplet form of ``cnf``; asserting the root asserts ``cnf``."""
    if not cnf.clauses:
        return TripletFormula((), TRUE, cnf.num_vars, 0)
    if any(not c for c in cnf.clauses):
        return TripletFormula((), FALSE, cnf.num_vars, 0)
    alloc = BridgeAllocator(cnf.num_vars)
    parts = [encode_clause(c, alloc) for c in cnf.clauses]
    root = encode_conjunction(parts, alloc)
    return TripletFormula(tuple(alloc.triplets), root, cnf.num_vars, alloc.num_bridges)


def triplet_holds(t: Triplet, values: Sequence[bool]) -> bool:
    """Whether ``t`` is satisfied; ``values[v]`` is the value of variable ``v``."""
    x, y, z = (literal_value(l, values) for l in (t.x, t.y, t.z))
    return x == ((not y) or z)


def literal_value(l: int, values: Sequence[bool]) -> bool:
    if l == TRUE:
        return True
    if l == FALSE:
        return False
    return values[l >> 1] != bool(l & 1)
