"""Random k-SAT generation and the configuration benchmark matrix."""

from __future__ import annotations

import csv
import io
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, Iterable, List, Sequence, Tuple

from .cnf import CnfFormula
from .solver import SolverConfig, Verdict, solve_cnf

MASK64 = (1 << 64) - 1
CSV_FIELDS = ("instance", "config", "verdict", "seconds", "branches", "merges")


class InvalidSpec(ValueError):
    pass


class SplitMix64:
    """SplitMix64 (Steele, Lea, Flood 2014): 64-bit state, golden-ratio increment.

    ``state += 0x9E3779B97F4A7C15``; output is the state mixed by
    ``z = (z ^ z >> 30) * 0xBF58476D1CE4E5B9``, ``z = (z ^ z >> 27) * 0x94D049BB133111EB``,
    ``z ^ z >> 31`` (all mod 2**64).
    """

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform integer in ``[0, bound)`` by rejection from the top of the 64-bit range."""
        limit = (1 << 64) - (1 << 64) % bound
        while True:
            r = self.next_u64()
            if r < limit:
                return r % bound

    def coin(self) -> bool:
        return bool(self.next_u64() >> 63)


@dataclass(frozen=True)
class GenSpec:
    n: int
    m: int
    k: int
    seed: int

    def validate(self) -> None:
        if self.n <= 0 or self.m <= 0 or self.k <= 0:
            raise InvalidSpec(f"n, m, k must be positive: {self}")
        if self.k > self.n:
            raise InvalidSpec(f"clause width {self.k} exceeds variable count {self.n}")

    @property
    def instance_id(self) -> str:
        return f"n{self.n}_m{self.m}_k{self.k}_s{self.seed}"


def gen_ksat(spec: GenSpec) -> CnfFormula:
    """Uniform random k-SAT.

    Per clause: a partial Fisher-Yates shuffle of ``1..n`` picks k distinct
    variables (swap position i with ``i + below(n - i)``), then one coin per
    literal chooses the sign (top bit set means negative).
    """
    spec.validate()
    rng = SplitMix64(spec.seed)
    clauses = []
    for _ in range(spec.m):
        pool = list(range(1, spec.n + 1))
        clause = []
        for i in range(spec.k):
            j = i + rng.below(spec.n - i)
            pool[i], pool[j] = pool[j], pool[i]
            clause.append(pool[i])
        clauses.append([-v if rng.coin() else v for v in clause])
    return CnfFormula(spec.n, clauses)


def instance_specs(count: int, n: int, m: int, k: int, seed: int) -> List[GenSpec]:
    """``count`` instance specs with consecutive seeds starting at ``seed``."""
    return [GenSpec(n, m, k, seed + i) for i in range(count)]


@dataclass(frozen=True)
class BenchRecord:
    instance: str
    config: str
    verdict: str
    seconds: float
    branches: int
    merges: int

    @property
    def solved(self) -> bool:
        return self.verdict != Verdict.UNKNOWN.value


def _run_instance(spec: GenSpec, configs: Sequence[SolverConfig]) -> List[BenchRecord]:
    cnf = gen_ksat(spec)
    records = []
    for config in configs:
        out = solve_cnf(cnf, config)
        records.append(
            BenchRecord(
                spec.instance_id,
                config.label,
                out.verdict.value,
                round(out.stats.elapsed, 6),
                out.stats.branches,
                out.stats.merges,
            )
        )
    return records


def run_matrix(
    specs: Sequence[GenSpec],
    configs: Sequence[SolverConfig],
    timeout: float,
    jobs: int = 1,
) -> List[BenchRecord]:
    """Solve every instance under every config; records ordered by (instance, config)."""
    if not specs or not configs:
        raise ValueError("run_matrix needs at least one instance and one config")
    configs = [SolverConfig(c.use_cdb, c.use_dpo, timeout) for c in configs]
    if jobs <= 1:
        per_instance = [_run_instance(s, configs) for s in specs]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            per_instance = list(pool.map(_run_instance, specs, [configs] * len(specs)))
    return [r for batch in per_instance for r in batch]


def emit_csv(records: Iterable[BenchRecord]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_FIELDS)
    for r in records:
        w.writerow([r.instance, r.config, r.verdict, repr(r.seconds), r.branches, r.merges])
    return buf.getvalue()


def parse_csv(text: str) -> List[BenchRecord]:
    rows = csv.DictReader(io.StringIO(text))
    if tuple(rows.fieldnames or ()) != CSV_FIELDS:
        raise ValueError(f"unexpected CSV header {rows.fieldnames}")
    return [
        BenchRecord(
            row["instance"],
            row["config"],
            row["verdict"],
            float(row["seconds"]),
            int(row["branches"]),
            int(row["merges"]),
        )
        for row in rows
    ]


def cactus_data(records: Iterable[BenchRecord]) -> Dict[str, List[Tuple[int, float]]]:
    """Per config: solved times sorted ascending, paired with rank 1..count."""
    times: Dict[str, List[float]] = {}
    for r in records:
        series = times.setdefault(r.config, [])
        if r.solved:
            series.append(r.seconds)
    return {cfg: list(enumerate(sorted(ts), 1)) for cfg, ts in times.items()}


def write_cactus_files(data: Dict[str, List[Tuple[int, float]]], out_dir: str | Path) -> List[Path]:
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    paths = []
    for cfg, series in data.items():
        path = out_dir / f"cactus_{cfg}.dat"
        path.write_text("".join(f"{rank} {t!r}\n" for rank, t in series))
        paths.append(path)
    return paths


@dataclass(frozen=True)
class ConfigSummary:
    config: str
    instances: int
    solved: int
    average_seconds: float | None


def summarize(records: Iterable[BenchRecord]) -> Dict[str, ConfigSummary]:
    """Solved counts and mean solve time over solved instances only."""
    grouped: Dict[str, List[BenchRecord]] = {}
    for r in records:
        grouped.setdefault(r.config, []).append(r)
    out = {}
    for cfg, rs in grouped.items():
        solved = [r.seconds for r in rs if r.solved]
        avg = sum(solved) / len(solved) if solved else None
        out[cfg] = ConfigSummary(cfg, len(rs), len(solved), avg)
    return out


def format_summary(summary: Dict[str, ConfigSummary]) -> str:
    lines = [f"{'config':<10} {'solved':>8} {'avg_s':>10}"]
    for s in summary.values():
        avg = "-" if s.average_seconds is None else f"{s.average_seconds:.3f}"
        lines.append(f"{s.config:<10} {s.solved:>5}/{s.instances:<4} {avg:>8}")
    return "\n".join(lines)
