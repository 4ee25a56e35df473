"""Branching and rule-ordering heuristics.

CDB (cardinality driven branching) branches on the most frequent unassigned
variable, preferring original variables over bridges. DPO (deductive
priority ordering) sorts triplets once, before solving, by the summed
frequency of their variables times a bonus for the (x, x, z) and (x, y, y)
shapes.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence

from .equiv import EquivState
from .normalize import Triplet


@dataclass
class FrequencyMap:
    counts: Dict[int, int] = field(default_factory=dict)
    sorted_vars: List[int] = field(default_factory=list)

    def __getitem__(self, v: int) -> int:
        return self.counts.get(v, 0)


@dataclass(frozen=True)
class DpoScore:
    score: int
    base: int
    bonus: int


def build_frequency_map(triplets: Iterable[Triplet]) -> FrequencyMap:
    """Count variable occurrences over all triplet positions, ignoring polarity."""
    counts: Counter = Counter()
    for t in triplets:
        for l in (t.x, t.y, t.z):
            v = l >> 1
            if v:
                counts[v] += 1
    order = sorted(counts, key=lambda v: (-counts[v], v))
    return FrequencyMap(dict(counts), order)


def cdb_select(state: EquivState, fm: FrequencyMap, num_original: int) -> Optional[int]:
    bridge = None
    for v in fm.sorted_vars:
        if state.value(2 * v) is None:
            if v <= num_original:
                return v
            if bridge is None:
                bridge = v
    return bridge


def lowest_index_select(state: EquivState, variables: Sequence[int], num_original: int) -> Optional[int]:
    """Baseline branching: first unassigned original in ``variables``, then first bridge."""
    bridge = None
    for v in variables:
        if state.value(2 * v) is None:
            if v <= num_original:
                return v
            if bridge is None:
                bridge = v
    return bridge


def dpo_score(t: Triplet, fm: FrequencyMap) -> DpoScore:
    base = sum(fm[l >> 1] for l in (t.x, t.y, t.z) if l >> 1)
    if t.x == t.y:
        bonus = 3
    elif t.y == t.z:
        bonus = 2
    else:
        bonus = 1
    return DpoScore(base * bonus, base, bonus)


def dpo_sort(triplets: Sequence[Triplet], fm: FrequencyMap) -> List[Triplet]:
    # sorted() is stable, so equal scores keep their input order
    return sorted(triplets, key=lambda t: -dpo_score(t, fm).score)
