"""Command-line interface: solve, gen, bench, cactus."""

from __future__ import annotations

import argparse
import sys
import warnings
from pathlib import Path
from typing import List, Optional, Sequence

from .bench import (
    GenSpec,
    InvalidSpec,
    cactus_data,
    emit_csv,
    format_summary,
    gen_ksat,
    instance_specs,
    parse_csv,
    run_matrix,
    summarize,
    write_cactus_files,
)
from .cnf import DimacsError, read_dimacs, write_dimacs
from .solver import CONFIG_FLAGS, SelfCheckError, SolverConfig, Verdict, solve_cnf

EXIT_SAT = 10
EXIT_UNSAT = 20
EXIT_UNKNOWN = 0
EXIT_ERROR = 1
EXIT_SELF_CHECK = 3


class CliError(Exception):
    pass


def _positive_float(text: str) -> float:
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {text}")
    return value


def _positive_int(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {text}")
    return value


def _config_list(text: str) -> List[str]:
    labels = [s.strip() for s in text.split(",") if s.strip()]
    bad = [s for s in labels if s not in CONFIG_FLAGS]
    if bad or not labels:
        raise argparse.ArgumentTypeError(
            f"unknown config(s) {', '.join(bad) or '(none)'}; choose from {', '.join(CONFIG_FLAGS)}"
        )
    return labels


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise CliError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="stalmarck", description="Stålmarck-procedure SAT solver with CDB/DPO heuristics.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("solve", help="solve a DIMACS CNF file")
    s.add_argument("path", help="DIMACS file, or - for stdin")
    s.add_argument("--cdb", action="store_true", help="cardinality driven branching")
    s.add_argument("--dpo", action="store_true", help="deductive priority ordering of triplets")
    s.add_argument("--timeout", type=_positive_float, default=None, help="wall-clock limit in seconds")
    s.add_argument("--stats", action="store_true", help="print 'c' statistics lines")

    g = sub.add_parser("gen", help="generate a uniform random k-SAT instance")
    g.add_argument("--n", type=_positive_int, required=True)
    g.add_argument("--m", type=_positive_int, required=True)
    g.add_argument("--k", type=_positive_int, default=3)
    g.add_argument("--seed", type=int, required=True)
    g.add_argument("--out", default=None, help="output file (default stdout)")

    b = sub.add_parser("bench", help="run the configuration matrix on generated instances")
    b.add_argument("--count", type=_positive_int, required=True)
    b.add_argument("--n", type=_positive_int, default=50)
    b.add_argument("--m", type=_positive_int, default=218)
    b.add_argument("--k", type=_positive_int, default=3)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--timeout", type=_positive_float, required=True)
    b.add_argument("--out-dir", required=True)
    b.add_argument("--configs", type=_config_list, default=list(CONFIG_FLAGS))
    b.add_argument("--jobs", type=_positive_int, default=1)

    c = sub.add_parser("cactus", help="write cactus plot data from a bench CSV")
    c.add_argument("csv_path")
    c.add_argument("--out-dir", required=True)
    return p


def _model_lines(model, width: int = 20) -> List[str]:
    lits = [str(v if model[v] else -v) for v in sorted(model)] + ["0"]
    return ["v " + " ".join(lits[i : i + width]) for i in range(0, len(lits), width)]


def cmd_solve(args) -> int:
    if args.path == "-":
        from .cnf import parse_dimacs

        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            cnf = parse_dimacs(sys.stdin)
    else:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            cnf = read_dimacs(args.path)
    config = SolverConfig(use_cdb=args.cdb, use_dpo=args.dpo, timeout=args.timeout)
    outcome = solve_cnf(cnf, config, self_check=True)
    if args.stats:
        st = outcome.stats
        print(f"c config {config.label}")
        print(f"c branches {st.branches} merges {st.merges} passes {st.saturation_passes}")
        print(f"c elapsed {st.elapsed:.6f}")
    if outcome.verdict is Verdict.SAT:
        print("s SATISFIABLE")
        for line in _model_lines(outcome.model):
            print(line)
        return EXIT_SAT
    if outcome.verdict is Verdict.UNSAT:
        print("s UNSATISFIABLE")
        return EXIT_UNSAT
    print("s UNKNOWN")
    return EXIT_UNKNOWN


def cmd_gen(args) -> int:
    text = write_dimacs(gen_ksat(GenSpec(args.n, args.m, args.k, args.seed)))
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_bench(args) -> int:
    specs = instance_specs(args.count, args.n, args.m, args.k, args.seed)
    for s in specs:
        s.validate()
    configs = [SolverConfig.from_label(label) for label in args.configs]
    records = run_matrix(specs, configs, args.timeout, jobs=args.jobs)
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    (out_dir / "results.csv").write_text(emit_csv(records))
    write_cactus_files(cactus_data(records), out_dir)
    print(format_summary(summarize(records)))
    return 0


def cmd_cactus(args) -> int:
    records = parse_csv(Path(args.csv_path).read_text())
    for path in write_cactus_files(cactus_data(records), args.out_dir):
        print(path)
    return 0


COMMANDS = {"solve": cmd_solve, "gen": cmd_gen, "bench": cmd_bench, "cactus": cmd_cactus}


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args)
    except SelfCheckError as e:
        print(f"c self-check failed: {e}", file=sys.stderr)
        return EXIT_SELF_CHECK
    except (CliError, DimacsError, InvalidSpec, OSError, ValueError) as e:
        print(f"stalmarck: error: {e}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
