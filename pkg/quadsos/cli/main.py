# This code is part of quadsos.
#
# (C) Copyright quadsos developers 2026.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license in the LICENSE.txt file in the root directory
# of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
#
# Any modifications or derivative works of this code must retain this
# copyright notice, and modified files need to carry a notice indicating
# that they have been altered from the originals.
"""
Command line front end.

Exit status is 0 for success or YES, 1 for NO or a failed check, 2 for usage and
validation errors.
"""

import argparse
import logging
import sys
from typing import List, Optional

from quadsos.exceptions import QuadSosError
from quadsos.field.quad_arith import check_field
from quadsos.representation.bounds import (
    Case,
    corollary_predicates,
    covering_proposition_interval,
    proposition_witness,
    theorem2_intervals,
)
from quadsos.representation.decision import EXHAUSTIVE, PRUNED, decide, sweep
from quadsos.representation.peters import is_sum_of_squares
from quadsos.version import __version__
from . import checks
from .config import FAMILIES, FORMATS, RunConfig
from .output import bounds_records, open_output, write_decision, write_json, write_listing

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NO = 1
EXIT_ERROR = 2

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def build_parser() -> argparse.ArgumentParser:
    """Argument parser with one subcommand per operation."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--threads", type=int, help="worker processes (default: QUADSOS_THREADS or CPU count)"
    )
    common.add_argument("--out", help="output file (default: standard output)")
    common.add_argument("--format", dest="fmt", choices=FORMATS, help="output format")
    common.add_argument("--no-progress", dest="progress", action="store_false", default=None)
    verbosity = common.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    verbosity.add_argument("-q", "--quiet", action="store_true", help="warnings only")

    parser = argparse.ArgumentParser(
        prog="quadsos",
        description="Sums of squares in multiples of the totally positive cone of Q(sqrt(D)).",
    )
    parser.add_argument("--version", action="version", version="%(prog)s " + __version__)
    commands = parser.add_subparsers(dest="command", required=True)

    cmd = commands.add_parser("decide", parents=[common], help="decide one (m, D)")
    cmd.add_argument("--m", type=int, required=True)
    cmd.add_argument("--d", type=int, required=True)

    cmd = commands.add_parser("sweep", parents=[common], help="all accepted D for one m")
    cmd.add_argument("--m", type=int, required=True)
    cmd.add_argument("--mode", choices=(PRUNED, EXHAUSTIVE))
    cmd.add_argument("--d-max", type=int)
    cmd.add_argument("--emit-bounds", action="store_true", default=None)

    cmd = commands.add_parser("table", parents=[common], help="sweeps for a range of m")
    cmd.add_argument("--m-from", type=int, required=True)
    cmd.add_argument("--m-to", type=int, required=True)
    cmd.add_argument("--mode", choices=(PRUNED, EXHAUSTIVE))

    cmd = commands.add_parser("bounds", parents=[common], help="exclusion intervals for m")
    cmd.add_argument("--m", type=int, required=True)
    cmd.add_argument("--d", type=int, help="explain which interval covers this D")

    cmd = commands.add_parser("verify-oracle", parents=[common], help="criterion vs search")
    cmd.add_argument("--d", dest="d_values", type=int, nargs="+")
    cmd.add_argument("--trace-max", type=int)

    cmd = commands.add_parser("family", parents=[common], help="closed-form families")
    cmd.add_argument("--type", dest="family", choices=FAMILIES)
    cmd.add_argument("--t-max", type=int)
    cmd.add_argument("--m-max", type=int)

    cmd = commands.add_parser("verify-bounds", parents=[common], help="pruned vs exhaustive")
    cmd.add_argument("--m-max", type=int)

    cmd = commands.add_parser("structure", parents=[common], help="convergent identities")
    cmd.add_argument("--d-max", type=int)

    cmd = commands.add_parser("lemma", parents=[common], help="lemma vs knapsack search")
    cmd.add_argument("--m-max", type=int)
    cmd.add_argument("--d-max", type=int)

    cmd = commands.add_parser("complexity", parents=[common], help="indecomposable count growth")
    cmd.add_argument("--d-from", type=int)
    cmd.add_argument("--d-to", type=int)
    cmd.add_argument("--ref-from", type=int)
    cmd.add_argument("--ref-to", type=int)
    cmd.add_argument("--factor", type=float)
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    """RunConfig of parsed arguments."""
    values = dict(vars(args))
    command = values.pop("command")
    verbose, quiet = values.pop("verbose", False), values.pop("quiet", False)
    if verbose:
        values["log_level"] = logging.DEBUG
    elif quiet:
        values["log_level"] = logging.WARNING
    if values.get("d_values") is not None:
        values["d_values"] = tuple(values["d_values"])
    return RunConfig.from_options(command, **values)


def cmd_decide(config: RunConfig) -> int:
    """Decide one pair and report the witness of a negative answer."""
    decision = decide(config.m, config.d)
    with open_output(config.out) as stream:
        write_decision(stream, decision, config.fmt)
    return EXIT_OK if decision.answer else EXIT_NO


def cmd_sweep(config: RunConfig) -> int:
    """All accepted ``d`` for one ``m``, optionally with the interval data."""
    accepted = sweep(
        config.m, config.mode, config.d_max, workers=config.threads, progress=config.progress
    )
    bounds = bounds_records(config.m) if config.emit_bounds else None
    with open_output(config.out) as stream:
        write_listing(stream, [(config.m, accepted)], config.fmt, bounds)
    return EXIT_OK


def cmd_table(config: RunConfig) -> int:
    """Sweeps for ``m_from <= m <= m_to`` in one listing."""
    rows = [
        (m, sweep(m, config.mode, workers=config.threads, progress=config.progress))
        for m in range(config.m_from, config.m_to + 1)
    ]
    with open_output(config.out) as stream:
        write_listing(stream, rows, config.fmt)
    return EXIT_OK


def _explain(m: int, d: int) -> List[str]:
    check_field(d)
    case = Case.of(m, d)
    lines = ["D=%d, %s" % (d, case.value)]
    shortcut = corollary_predicates(m, d)
    if shortcut.sufficient_by_d:
        lines.append("accepted: D is below the sufficiency bound")
    if shortcut.excluded_by_e:
        lines.append("excluded: odd m and D = 2,3 mod 4")
    for interval in theorem2_intervals(m, case).intervals:
        if interval.applies_to(d):
            lines.append("excluded by %s: %s" % (interval.label, interval.describe()))
    covering = covering_proposition_interval(m, d)
    if covering is not None:
        _, k, interval = covering
        xi = proposition_witness(d, k)
        verdict = is_sum_of_squares(m * xi)
        lines.append(
            "covered by %s: %s; m * (%s) is %sa sum of squares"
            % (interval.label, interval.describe(), xi, "" if verdict else "not ")
        )
    return lines


def cmd_bounds(config: RunConfig) -> int:
    """Head and grouped intervals per case, with symbolic and approximate endpoints."""
    with open_output(config.out) as stream:
        if config.fmt == "json":
            payload = {"m": config.m, "intervals": bounds_records(config.m)}
            if config.d is not None:
                payload["explain"] = _explain(config.m, config.d)
            write_json(stream, payload)
            return EXIT_OK
        if config.fmt == "csv":
            write_listing(stream, [], "csv", bounds_records(config.m))
            return EXIT_OK
        for case in Case.for_multiplier(config.m):
            stream.write("%s, m=%d:\n" % (case.value, config.m))
            for interval in theorem2_intervals(config.m, case).intervals:
                stream.write("  %-5s %s\n" % (interval.label, interval.describe()))
        if config.d is not None:
            for line in _explain(config.m, config.d):
                stream.write(line + "\n")
    return EXIT_OK


def _report(config: RunConfig, report: checks.CheckReport) -> int:
    with open_output(config.out) as stream:
        if config.fmt == "json":
            write_json(
                stream,
                {
                    "check": report.name,
                    "passed": report.passed,
                    "checked": report.checked,
                    "counterexample": report.counterexample,
                },
            )
        else:
            stream.write(report.summary() + "\n")
    return EXIT_OK if report.passed else EXIT_NO


def cmd_verify_oracle(config: RunConfig) -> int:
    """Criterion against the exhaustive square search."""
    for d in config.d_values:
        check_field(d)
    return _report(config, checks.check_oracle(config.d_values, config.trace_max, config.progress))


def cmd_family(config: RunConfig) -> int:
    """``decide`` against the closed-form family predicates."""
    report = checks.check_family(config.family, config.t_max, config.m_max, config.progress)
    return _report(config, report)


def cmd_verify_bounds(config: RunConfig) -> int:
    """Pruned against exhaustive sweeps for ``m <= m_max``."""
    report = checks.check_bounds(config.m_max, config.threads, config.progress)
    return _report(config, report)


def cmd_structure(config: RunConfig) -> int:
    """Convergent and unit identities for squarefree ``d <= d_max``."""
    return _report(config, checks.check_structure(config.d_max, config.progress))


def cmd_lemma(config: RunConfig) -> int:
    """Lemma minimum against the knapsack search."""
    return _report(config, checks.check_lemma(config.m_max, config.d_max, config.progress))


def cmd_complexity(config: RunConfig) -> int:
    """Growth guardrail for the number of indecomposables."""
    report = checks.check_complexity(
        (config.d_from, config.d_to),
        (config.ref_from, config.ref_to),
        config.factor,
        config.progress,
    )
    return _report(config, report)


COMMANDS = {
    "decide": cmd_decide,
    "sweep": cmd_sweep,
    "table": cmd_table,
    "bounds": cmd_bounds,
    "verify-oracle": cmd_verify_oracle,
    "family": cmd_family,
    "verify-bounds": cmd_verify_bounds,
    "structure": cmd_structure,
    "lemma": cmd_lemma,
    "complexity": cmd_complexity,
}


def main(argv: Optional[List[str]] = None) -> int:
    """Entry point of the ``quadsos`` command."""
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = config_from_args(args)
    except QuadSosError as err:
        sys.stderr.write("quadsos: error: %s\n" % err.message)
        return EXIT_ERROR
    logging.basicConfig(stream=sys.stderr, level=config.log_level, format=LOG_FORMAT)
    if config.progress and not sys.stderr.isatty():
        config.progress = False
    logger.debug("configuration: %s", config)
    try:
        return COMMANDS[config.command](config)
    except QuadSosError as err:
        sys.stderr.write("quadsos: error: %s\n" % err.message)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
