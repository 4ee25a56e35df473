"""Complete decision procedure: saturation plus the dilemma rule."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Tuple

from .cnf import Assignment, CnfFormula, evaluate
from .equiv import EquivState, RollbackMark
from .heuristics import FrequencyMap, build_frequency_map, cdb_select, dpo_sort, lowest_index_select
from .literal import FALSE, TRUE
from .normalize import Triplet, TripletFormula, normalize
from .rules import Timeout, saturate


class IncompleteState(RuntimeError):
    pass


class SelfCheckError(RuntimeError):
    pass


class Verdict(Enum):
    SAT = "SAT"
    UNSAT = "UNSAT"
    UNKNOWN = "UNKNOWN"


@dataclass(frozen=True)
class SolverConfig:
    use_cdb: bool = False
    use_dpo: bool = False
    timeout: Optional[float] = None

    def __post_init__(self):
        if self.timeout is not None and not self.timeout > 0:
            raise ValueError("timeout must be positive")

    @property
    def label(self) -> str:
        return {
            (False, False): "baseline",
            (False, True): "dpo",
            (True, False): "cdb",
            (True, True): "dpo_cdb",
        }[self.use_cdb, self.use_dpo]

    @classmethod
    def from_label(cls, label: str, timeout: Optional[float] = None) -> "SolverConfig":
        flags = CONFIG_FLAGS.get(label)
        if flags is None:
            raise ValueError(f"unknown configuration {label!r}; expected one of {', '.join(CONFIG_FLAGS)}")
        return cls(use_cdb=flags[0], use_dpo=flags[1], timeout=timeout)


# label -> (use_cdb, use_dpo), in the order they are reported
CONFIG_FLAGS: Dict[str, Tuple[bool, bool]] = {
    "baseline": (False, False),
    "dpo": (False, True),
    "cdb": (True, False),
    "dpo_cdb": (True, True),
}


@dataclass
class SolveStats:
    branches: int = 0
    merges: int = 0
    saturation_passes: int = 0
    elapsed: float = 0.0
    # dilemma applications by how many polarities ended in contradiction
    both_refuted: int = 0
    one_refuted: int = 0
    none_refuted: int = 0


@dataclass
class SolveOutcome:
    verdict: Verdict
    model: Optional[Assignment] = None
    stats: SolveStats = field(default_factory=SolveStats)

    @property
    def is_sat(self) -> bool:
        return self.verdict is Verdict.SAT


def extract_model(state: EquivState, num_original: int) -> Assignment:
    model = {}
    for v in range(1, num_original + 1):
        value = state.value(2 * v)
        if value is None:
            raise IncompleteState(f"variable {v} has no value")
        model[v] = value
    return model


class _Search:
    def __init__(self, formula: TripletFormula, config: SolverConfig):
        self.formula = formula
        self.config = config
        self.state = EquivState(formula.num_vars)
        self.stats = SolveStats()
        self.fm: FrequencyMap = build_frequency_map(formula.triplets)
        self.variables = formula.occurring_vars()
        self.deadline = None

    def _saturate(self, triplets: List[Triplet]):
        res = saturate(self.state, triplets, self.deadline)
        self.stats.saturation_passes += res.passes
        self.stats.merges += res.merges_performed
        return res

    def _assign(self, v: int, value: int) -> bool:
        before = self.state.num_merges
        ok = self.state.merge(2 * v, value)
        self.stats.merges += self.state.num_merges - before
        return ok

    def _select(self) -> Optional[int]:
        n = self.formula.num_original_vars
        if self.config.use_cdb:
            return cdb_select(self.state, self.fm, n)
        return lowest_index_select(self.state, self.variables, n)

    def _probe(self, v: int, value: int, active: List[Triplet]) -> bool:
        m = self.state.mark()
        ok = self._assign(v, value) and not self._saturate(active).contradiction
        self.state.rollback(m)
        return ok

    def run(self) -> Verdict:
        state = self.state
        if not state.merge(self.formula.root, TRUE):
            return Verdict.UNSAT
        self.stats.merges = state.num_merges
        triplets = list(self.formula.triplets)
        if self.config.use_dpo:
            triplets = dpo_sort(triplets, self.fm)
        if self.config.timeout is not None:
            self.deadline = time.monotonic() + self.config.timeout

        active = triplets
        # open decisions where both polarities survived probing:
        # (mark taken before v = 0, v, triplets active at the mark)
        open_branches: List[Tuple[RollbackMark, int, List[Triplet]]] = []
        while True:
            res = self._saturate(active)
            if not res.contradiction:
                active = res.active
                v = self._select()
                if v is None:
                    return Verdict.SAT
                if self.deadline is not None and time.monotonic() > self.deadline:
                    raise Timeout
                self.stats.branches += 1
                false_ok = self._probe(v, FALSE, active)
                true_ok = self._probe(v, TRUE, active)
                if false_ok and true_ok:
                    self.stats.none_refuted += 1
                    open_branches.append((state.mark(), v, active))
                    self._assign(v, FALSE)
                    continue
                if false_ok or true_ok:
                    self.stats.one_refuted += 1
                    self._assign(v, FALSE if false_ok else TRUE)
                    continue
                self.stats.both_refuted += 1
            if not open_branches:
                return Verdict.UNSAT
            m, v, active = open_branches.pop()
            state.rollback(m)
            self._assign(v, TRUE)

    def complete_model(self) -> Assignment:
        # variables absent from every clause are unconstrained
        for v in range(1, self.formula.num_original_vars + 1):
            if self.state.value(2 * v) is None:
                self.state.merge(2 * v, FALSE)
        return extract_model(self.state, self.formula.num_original_vars)


def solve(formula: TripletFormula, config: SolverConfig = SolverConfig()) -> SolveOutcome:
    start = time.perf_counter()
    search = _Search(formula, config)
    try:
        verdict = search.run()
    except Timeout:
        verdict = Verdict.UNKNOWN
    model = search.complete_model() if verdict is Verdict.SAT else None
    stats = search.stats
    stats.elapsed = time.perf_counter() - start
    return SolveOutcome(verdict, model, stats)


def solve_cnf(cnf: CnfFormula, config: SolverConfig = SolverConfig(), self_check: bool = True) -> SolveOutcome:
    """Normalize and solve ``cnf``; with ``self_check`` a Sat model is re-verified."""
    outcome = solve(normalize(cnf), config)
    if self_check and outcome.is_sat and not evaluate(cnf, outcome.model):
        raise SelfCheckError("solver returned a model that does not satisfy the formula")
    return outcome
