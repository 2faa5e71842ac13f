"""Command-line entry point: enumerate, lattice, verify and simulate.

Exit codes: 0 success, 1 failed verification, 2 usage or input error, 3 internal error.
"""

from __future__ import annotations

import argparse
import logging
import sys
from typing import List, Optional, Sequence

from pydantic import ValidationError as PydanticValidationError

from config.settings import settings
from pipelines.export_pipeline import render_enumeration, render_lattice, write_output
from pipelines.simulation_pipeline import load_scenario, run_scenario
from pipelines.verification_pipeline import render_verification_table, run_verification
from schemas.request_schemas import CliConfig
from tools.error_handler import GbitError, format_error_report
from tools.question_algebra import GbitKind, SystemKind

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gbit", description="Question algebra and interrogation toolbox for qubits and rebits.")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(p: argparse.ArgumentParser, formats: Sequence[str]) -> None:
        p.add_argument("--kind", default=None, help="qubit or rebit")
        p.add_argument("--n", type=int, default=1, help="number of gbits")
        p.add_argument("--seed", type=int, default=None, help=f"RNG seed (default {settings.default_seed})")
        p.add_argument("--out", default=None, help="output file (default: standard output)")
        p.add_argument("--format", choices=formats, default=None, help="output format")

    common(sub.add_parser("enumerate", help="list the informationally complete question set"), ("table", "json"))
    common(sub.add_parser("lattice", help="export the compatibility lattice"), ("dot", "json", "table"))
    common(sub.add_parser("verify", help="run the oracle-equivalence and invariant suites"), ("table", "json"))
    simulate = sub.add_parser("simulate", help="run an interrogation scenario")
    common(simulate, ("table", "json"))
    simulate.add_argument("--scenario", required=True, help="scenario JSON file")
    simulate.add_argument("--shots", type=int, default=None, help="tomography shots per question")
    return parser


def parse_config(argv: Optional[Sequence[str]] = None) -> CliConfig:
    args = build_parser().parse_args(argv)
    fields = {k: v for k, v in vars(args).items() if v is not None}
    if "format" not in fields:
        fields["format"] = "dot" if args.subcommand == "lattice" else settings.default_format
    return CliConfig(**fields)


def _system(config: CliConfig, kind: str) -> SystemKind:
    return SystemKind(GbitKind.parse(kind), config.n)


def cmd_enumerate(config: CliConfig) -> int:
    write_output(render_enumeration(_system(config, config.kinds[0]), config.format), config.out)
    return EXIT_OK


def cmd_lattice(config: CliConfig) -> int:
    write_output(render_lattice(_system(config, config.kinds[0]), config.format), config.out)
    return EXIT_OK


def cmd_verify(config: CliConfig) -> int:
    reports = [run_verification(_system(config, kind), config.effective_seed) for kind in config.kinds]
    if config.format == "json":
        text = "".join(r.model_dump_json(indent=2) + "\n" for r in reports)
    else:
        text = render_verification_table(reports)
    write_output(text, config.out)
    passed = all(r.passed for r in reports)
    logger.info("Verification %s", "passed" if passed else "FAILED")
    return EXIT_OK if passed else EXIT_FAILED


def cmd_simulate(config: CliConfig) -> int:
    scenario = load_scenario(config.scenario)
    result = run_scenario(scenario, seed=config.seed, shots=config.shots)
    if config.out is not None:
        write_output(result.to_json_lines(), config.out)
        write_output(result.summary)
    elif config.format == "json":
        write_output(result.to_json_lines())
    else:
        write_output(result.summary)
    return EXIT_OK


COMMANDS = {
    "enumerate": cmd_enumerate,
    "lattice": cmd_lattice,
    "verify": cmd_verify,
    "simulate": cmd_simulate,
}


def main(argv: Optional[List[str]] = None) -> int:
    logging.basicConfig(
        level=getattr(logging, settings.log_level.upper(), logging.INFO),
        format="%(asctime)s [%(levelname)s] %(message)s",
        stream=sys.stderr,
    )
    try:
        config = parse_config(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    except PydanticValidationError as exc:
        messages = "; ".join(err["msg"] for err in exc.errors())
        print(f"[error] {messages}", file=sys.stderr)
        return EXIT_USAGE

    try:
        return COMMANDS[config.subcommand](config)
    except GbitError as exc:
        report = format_error_report(exc, failed_step=config.subcommand.upper())
        print(f"[error] {report.error_category}: {report.error_message}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:
        report = format_error_report(exc, failed_step=config.subcommand.upper())
        print(f"[internal error] {report.error_message}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
