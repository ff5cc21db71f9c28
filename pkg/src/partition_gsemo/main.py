"""
Command-line entry point.

Subcommands:
- gen         generate the instance grid into <output>/instances/
- solve       run GREEDY or GSEMO on one instance bundle and print the RunRecord
- experiment  generate, then run GREEDY once and GSEMO `repeats` times per instance
- report      build summary / instance / convergence tables from a result store
- verify      brute-force OPT, eps, gamma and both bounds for small instances

Exit codes: 0 success, 2 usage error, 3 refused input (validation or guard),
4 I/O failure.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional

from pydantic import ValidationError

from partition_gsemo.algorithms import ALGORITHMS, GSEMO, make_solver
from partition_gsemo.algorithms.models import GsemoParams
from partition_gsemo.analysis.verification import MAX_VERIFY_N, verify_instance
from partition_gsemo.config.experiment_config import ExperimentConfig
from partition_gsemo.core.models import OracleCounter
from partition_gsemo.errors import PartitionGsemoError
from partition_gsemo.experiment.runner import generate_instances, run_experiment
from partition_gsemo.instances.bundle import load_bundle
from partition_gsemo.reporting.report_builder import write_reports
from partition_gsemo.reporting.table_formatter import TableFormatter
from partition_gsemo.stats.verdicts import ALPHA
from partition_gsemo.storage.result_store import ResultStore

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_REFUSED = 3
EXIT_IO = 4

CONFIG_FIELDS = (
    "master_seed",
    "n_values",
    "densities",
    "cardinality_fractions",
    "partition_ks",
    "graphs_per_setting",
    "repeats",
    "t_policy",
    "t_multiplier",
    "parallelism",
    "output_dir",
    "trace_stride",
    "edge_universe",
)


def _int_list(text: str) -> List[int]:
    return [int(item) for item in text.split(",") if item.strip()]


def _float_list(text: str) -> List[float]:
    return [float(item) for item in text.split(",") if item.strip()]


def _t_policy(text: str):
    text = text.strip()
    return int(text) if text.lstrip("-").isdigit() else text


def _flag(parser: argparse.ArgumentParser, name: str, **kwargs):
    """Register --some-name and --some_name for the same destination."""
    dashed = "--" + name.replace("_", "-")
    underscored = "--" + name
    flags = [dashed] if dashed == underscored else [dashed, underscored]
    parser.add_argument(*flags, dest=name, default=None, **kwargs)


def _add_config_flags(parser: argparse.ArgumentParser):
    parser.add_argument("--config", type=Path, help="Experiment config (JSON, or YAML by suffix)")
    _flag(parser, "master_seed", type=int, help="Master seed (64-bit unsigned)")
    _flag(parser, "n_values", type=_int_list, help="Comma-separated ground-set sizes")
    _flag(parser, "densities", type=_float_list, help="Comma-separated edge densities")
    _flag(parser, "cardinality_fractions", type=_float_list, help="Comma-separated d1/n fractions")
    _flag(parser, "partition_ks", type=_int_list, help="Comma-separated block counts k")
    _flag(parser, "graphs_per_setting", type=int, help="Graphs per (n, density)")
    _flag(parser, "repeats", type=int, help="GSEMO runs per instance")
    _flag(parser, "t_policy", type=_t_policy, help="'quadratic', 'expected_runtime' or a fixed T")
    _flag(parser, "t_multiplier", type=int, help="c in T = c * n^2 for the quadratic policy")
    _flag(parser, "parallelism", type=int, help="Worker processes")
    _flag(parser, "output_dir", type=Path, help="Output directory (default $GSEMO_OUTPUT_DIR)")
    _flag(parser, "trace_stride", type=int, help="Trace every this many iterations (0 disables)")
    _flag(parser, "edge_universe", choices=["unordered", "ordered"], help="Edge sampling universe")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="partition-gsemo",
        description="GSEMO and GREEDY under partition matroid constraints",
    )
    parser.add_argument(
        "--log-level",
        "--log_level",
        dest="log_level",
        default="INFO",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    p_gen = sub.add_parser("gen", help="Generate instance bundles")
    _add_config_flags(p_gen)

    p_solve = sub.add_parser("solve", help="Run one algorithm on one instance")
    p_solve.add_argument("instance", type=Path, help="Instance bundle directory")
    p_solve.add_argument("--algorithm", required=True, choices=ALGORITHMS)
    p_solve.add_argument("--seed", type=int, default=0, help="GSEMO seed")
    p_solve.add_argument(
        "--iterations", "-T", type=int, default=None, help="GSEMO budget (default 4 n^2)"
    )
    _flag(p_solve, "trace_stride", type=int, help="Trace every this many iterations (0 disables)")
    p_solve.add_argument(
        "--repeat", type=int, default=0, help="Repeat index stored with the record"
    )
    p_solve.add_argument("--store", type=Path, default=None, help="Append the record to this store")

    p_exp = sub.add_parser("experiment", help="Generate instances and run all algorithms")
    _add_config_flags(p_exp)

    p_report = sub.add_parser("report", help="Write report tables from a result store")
    _add_config_flags(p_report)
    p_report.add_argument(
        "--store", type=Path, default=None, help="Result store (default <output>/results.jsonl)"
    )
    _flag(p_report, "reports_dir", type=Path, help="Report directory (default <output>/reports)")
    p_report.add_argument("--alpha", type=float, default=ALPHA, help="Significance level")

    p_verify = sub.add_parser(
        "verify", help="Check solver outputs against the approximation bounds"
    )
    p_verify.add_argument("instances", type=Path, nargs="+", help="Instance bundle directories")
    p_verify.add_argument("--iterations", "-T", type=int, default=None, help="GSEMO budget")
    p_verify.add_argument("--seed", type=int, default=0, help="Master seed of the GSEMO runs")
    p_verify.add_argument("--repeats", type=int, default=1, help="GSEMO runs per instance")
    _flag(p_verify, "max_n", type=int, help=f"Enumeration guard (at most {MAX_VERIFY_N})")

    return parser


def load_config(args: argparse.Namespace) -> ExperimentConfig:
    overrides: Dict[str, Any] = {
        field: getattr(args, field, None) for field in CONFIG_FIELDS
    }
    if args.config is not None:
        return ExperimentConfig.from_file(args.config, overrides)
    return ExperimentConfig.build(None, overrides)


def cmd_gen(args: argparse.Namespace) -> int:
    config = load_config(args)
    for meta in generate_instances(config):
        print(meta.instance_id)
    return EXIT_OK


def cmd_solve(args: argparse.Namespace) -> int:
    bundle = load_bundle(args.instance)
    f, m = bundle.objective, bundle.constraint
    overrides = {"trace_stride": args.trace_stride}
    if args.iterations is not None:
        overrides["t_policy"] = args.iterations
    config = ExperimentConfig.build(None, overrides)

    params = None
    if args.algorithm == GSEMO:
        params = GsemoParams(iterations=config.iterations_for(m), seed=args.seed)
    solver = make_solver(args.algorithm, params, trace_stride=config.stride_for(m.n))
    record = solver.solve(f, m, OracleCounter())

    record = record.model_copy(
        update={"instance_id": bundle.meta.instance_id, "repeat": args.repeat}
    )
    logger.info(TableFormatter().format_record(record))
    print(record.model_dump_json())

    if args.store is not None:
        store = ResultStore(args.store)
        store.add_instance(bundle.meta)
        if store.add_run(record):
            logger.info(f"Stored run {record.key} in {args.store}")
    return EXIT_OK


def cmd_experiment(args: argparse.Namespace) -> int:
    config = load_config(args)
    store = run_experiment(config)
    print(f"{len(store)} runs in {store.path}")
    return EXIT_OK


def cmd_report(args: argparse.Namespace) -> int:
    config = load_config(args)
    store_path = args.store or config.store_path
    if not store_path.exists():
        raise FileNotFoundError(f"Result store not found: {store_path}")

    reports_dir = args.reports_dir or config.reports_dir
    written = write_reports(ResultStore(store_path), reports_dir, alpha=args.alpha)
    print(written["summary.md"].read_text(encoding="utf-8"), end="")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    for directory in args.instances:
        bundle = load_bundle(directory)
        report = verify_instance(
            bundle.objective,
            bundle.constraint,
            gsemo_iterations=args.iterations,
            seed=args.seed,
            repeats=args.repeats,
            instance_id=bundle.meta.instance_id,
            max_n=args.max_n if args.max_n is not None else MAX_VERIFY_N,
        )
        print(json.dumps(report.model_dump(mode="json"), sort_keys=True))
    return EXIT_OK


COMMANDS = {
    "gen": cmd_gen,
    "solve": cmd_solve,
    "experiment": cmd_experiment,
    "report": cmd_report,
    "verify": cmd_verify,
}


def main(argv: Optional[List[str]] = None) -> int:
    """Parse arguments, run one subcommand and map failures to exit codes."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK

    logging.basicConfig(
        level=getattr(logging, args.log_level),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        handlers=[logging.StreamHandler(sys.stderr)],
    )

    try:
        return COMMANDS[args.cmd](args)
    except (PartitionGsemoError, ValidationError) as e:
        logger.error(f"Refused: {e}")
        return EXIT_REFUSED
    except OSError as e:
        logger.error(f"I/O error: {e}")
        return EXIT_IO


def run():
    """Console-script entry point."""
    sys.exit(main())


if __name__ == "__main__":
    run()
