# -*- Mode:Python; indent-tabs-mode:nil; tab-width:4 -*-
#
# Copyright (C) 2020 Canonical Ltd
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License version 3 as
# published by the Free Software Foundation.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.

import argparse
import logging
import math
import os
import sys
import time
from typing import Any, Dict, List, Optional

import numpy as np
import yaml

import localscore
from localscore import distributions, errors, indicators, montecarlo, spectral
from localscore._localscore import AnalysisManager
from localscore.cli._manifest import RunManifest
from localscore.cli._output import OutputWriter
from localscore.ladder import SOLVER_TOLERANCE
from localscore.model import (
    ScoreModel,
    dump_model,
    load_model,
    model_from_sequence,
    read_sequence,
    stationary_distribution,
    validate_model,
)
from localscore.utils import formatting_utils

logger = logging.getLogger(__name__)

MANIFEST_SUFFIX = "-manifest.yaml"

# First state of simulated sequences when --start is not given.
_DEFAULT_START_STATE = "A"

# Global options that consume the following token.
_GLOBAL_VALUE_OPTIONS = ("--output-dir",)

_Statistic = montecarlo.SimulationStatistic


class _Run:
    """Bookkeeping for one command: outputs, seeds and the model digest."""

    def __init__(self, args: argparse.Namespace) -> None:
        self.args = args
        self.writer = OutputWriter(args.output_dir)
        self.model = None  # type: Optional[ScoreModel]
        self.seeds = []  # type: List[int]
        self.exit_code = 0

    def load(self, path: str) -> ScoreModel:
        self.model = load_model(path)
        return self.model

    def manager(self) -> AnalysisManager:
        return AnalysisManager(
            model=self.model, tol=getattr(self.args, "tol", SOLVER_TOLERANCE)
        )


def run(argv: Optional[List[str]] = None) -> int:
    """Parse ``argv``, run the command and return its exit code."""
    if argv is None:
        argv = sys.argv[1:]
    args = _build_parser().parse_args(argv)
    _configure_logging(args)

    started = time.monotonic()
    context = _Run(args)
    try:
        args.func(context)
    except errors.LocalscoreError as e:
        logger.error(str(e))
        return e.get_exit_code()
    except errors.LocalscoreException as e:
        logger.error(e.get_brief())
        logger.error(e.get_resolution())
        details = e.get_details()
        if details:
            logger.debug(details)
        return e.get_exit_code()

    if context.writer.outputs:
        _save_manifest(context, argv, time.monotonic() - started)
    return context.exit_code


def main() -> None:
    sys.exit(run())


def _save_manifest(context: _Run, argv: List[str], wall_time: float) -> None:
    args = context.args
    manifest = RunManifest(
        assets={
            "command": args.command,
            "argv": list(argv[_command_index(argv, args.command) :]),
            "parameters": _parameters(args),
            "model": context.model.digest if context.model else None,
            "version": localscore.__version__,
            "seeds": list(context.seeds),
            "outputs": list(context.writer.outputs),
            "wall-time": round(wall_time, 3),
        }
    )
    filepath = context.writer.path(args.command + MANIFEST_SUFFIX)
    manifest.save(filepath=filepath)
    logger.info("Wrote {}".format(filepath))


def _command_index(argv: List[str], command: str) -> int:
    """Position of the subcommand token, skipping global option values."""
    index = 0
    while argv[index] != command:
        index += 2 if argv[index] in _GLOBAL_VALUE_OPTIONS else 1
    return index


def _parameters(args: argparse.Namespace) -> Dict[str, Any]:
    parameters = dict()  # type: Dict[str, Any]
    for key, value in sorted(vars(args).items()):
        if key in ("func", "verbose", "quiet", "output_dir"):
            continue
        if isinstance(value, tuple):
            value = list(value)
        parameters[key] = value
    return parameters


def _configure_logging(args: argparse.Namespace) -> None:
    if args.verbose:
        level = logging.DEBUG
    elif args.quiet:
        level = logging.WARNING
    else:
        level = logging.INFO
    logging.basicConfig(format="%(levelname)s: %(message)s", stream=sys.stderr)
    logging.getLogger().setLevel(level)


def _default_start(model: ScoreModel, start: Optional[str]) -> str:
    if start:
        return start
    if _DEFAULT_START_STATE in model.alphabet:
        return _DEFAULT_START_STATE
    return montecarlo.STATIONARY_START


def _start_weights(model: ScoreModel, start: str) -> np.ndarray:
    if start == montecarlo.STATIONARY_START:
        return stationary_distribution(model)
    weights = np.zeros(model.size)
    weights[model.index(start)] = 1.0
    return weights


def _grid(start: float, stop: float, step: float) -> np.ndarray:
    if step <= 0 or stop < start:
        raise errors.InvalidGridError(start=start, stop=stop, step=step)
    count = int(math.floor((stop - start) / step + 1e-9)) + 1
    return np.round(start + step * np.arange(count), 12)


def _simulate(context: _Run, manager: AnalysisManager, statistic, *, horizon, start):
    args = context.args
    context.seeds.append(args.seed)
    message = "Simulating {} (n={})".format(statistic.value, horizon)
    with indicators.replicate_progress(args.reps, message) as progress:
        return manager.simulate(
            statistic,
            horizon=horizon,
            replicates=args.reps,
            seed=args.seed,
            start=start,
            threads=args.threads,
            progress=progress,
        )


def _tail_bound(manager: AnalysisManager, level: int) -> Optional[float]:
    """c(inf) max(u) exp(-theta* level), bounding P(S+ > level)."""
    ladders = manager.ladders
    return float(
        ladders.c_inf
        * ladders.u_star.max()
        * math.exp(-ladders.theta_star * level)
    )


def cmd_validate(context: _Run) -> None:
    model = context.load(context.args.model)
    report = validate_model(model)
    context.writer.write_json("validation.json", report.to_dict())
    if report.passed:
        logger.info(
            "The model passed every check with {} {}".format(
                len(report.warnings),
                formatting_utils.pluralize(report.warnings, "warning", "warnings"),
            )
        )
        return

    failure = errors.ModelValidationError(failed_checks=report.failed_checks)
    logger.error(failure.get_brief())
    logger.error(failure.get_resolution())
    context.exit_code = failure.get_exit_code()


def cmd_spectral(context: _Run) -> None:
    args = context.args
    model = context.load(args.model)
    data = context.manager().spectral
    derivative, mean = spectral.check_rho_prime_zero(model)

    thetas = _grid(args.theta_min, args.theta_max, args.theta_step)
    rho, log_rho = spectral.rho_grid(model, thetas)
    context.writer.write_json(
        "spectral.json",
        dict(
            model=model.digest,
            theta_star=data.theta_star,
            rho_star=data.rho_star,
            eigen_residual=data.eigen_residual,
            bracket=list(data.bracket),
            u_star=dict(zip(model.alphabet, data.u_star.tolist())),
            rho_prime_zero=derivative,
            mean_score=mean,
            log_convexity_defect=spectral.log_convexity_defect(thetas, log_rho),
        ),
    )
    context.writer.write_csv(
        "rho-grid.csv", ["theta", "rho", "log_rho"], zip(thetas, rho, log_rho)
    )


def cmd_ladders(context: _Run) -> None:
    model = context.load(context.args.model)
    ladders = context.manager().ladders
    step = model.lattice_step
    writer = context.writer

    writer.write_json("ladders.json", dict(model=model.digest, **ladders.to_report()))
    for level, matrix in sorted(ladders.Q_ell.items()):
        writer.write_matrix("ladder-Q{}.csv".format(level * step), model.alphabet, matrix)
    for level, matrix in sorted(ladders.L_ell.items()):
        writer.write_matrix("ladder-L{}.csv".format(level * step), model.alphabet, matrix)
    writer.write_matrix("ladder-Ginf.csv", model.alphabet, ladders.G_inf)


def cmd_splus(context: _Run) -> None:
    args = context.args
    model = context.load(args.model)
    manager = context.manager()
    level_max = args.max_level // model.lattice_step
    table = manager.splus_table(level_max)
    pi = manager.stationary
    header = ["level"] + list(model.alphabet) + ["mixture"]

    exact_rows = []
    asymptotic_rows = []
    for k in range(level_max + 1):
        exact = table.values[:, k]
        tail = distributions.splus_tail_asymptotic(manager.spectral, manager.ladders, k)
        exact_rows.append([table.levels[k]] + exact.tolist() + [pi @ exact])
        approx = 1.0 - tail
        asymptotic_rows.append([table.levels[k]] + approx.tolist() + [pi @ approx])

    context.writer.write_csv("splus-exact.csv", header, exact_rows)
    context.writer.write_csv("splus-asymptotic.csv", header, asymptotic_rows)
    context.writer.write_json(
        "splus.json",
        dict(
            model=model.digest,
            level_max=table.metadata["level_max"],
            tail_bound=table.metadata["tail_bound"],
            c_inf=manager.ladders.c_inf,
            theta_star=manager.ladders.theta_star,
        ),
    )


def cmd_q1(context: _Run) -> None:
    args = context.args
    model = context.load(args.model)
    manager = context.manager()
    k_max = args.max_level // model.lattice_step
    table = manager.q1_tail(k_max, tail=args.tail)
    pi = manager.stationary

    context.writer.write_csv(
        "q1-tail.csv",
        ["level"] + list(model.alphabet) + ["mixture"],
        (
            [table.levels[k]] + table.values[:, k].tolist() + [pi @ table.values[:, k]]
            for k in range(k_max + 1)
        ),
    )
    context.writer.write_json("q1.json", dict(table.metadata))


def cmd_mn(context: _Run) -> None:
    args = context.args
    model = context.load(args.model)
    manager = context.manager()
    grid = _grid(args.x_min, args.x_max, args.x_step)
    curve = manager.mn_curve(args.n, grid, variant=args.variant, tail=args.tail)

    header = ["x", "level", "improved"]
    kd = None
    if manager.ladders.supports_karlin_dembo():
        kd = manager.kd_curve(args.n, grid)
        header.append("kd")
    else:
        logger.warning(
            "The Karlin-Dembo column needs scores in {-1, 0, 1}; it is omitted"
        )

    rows = []
    for i, x in enumerate(grid):
        level = distributions.mn_level(manager.ladders, args.n, x) * model.lattice_step
        row = [x, level, curve.values[0, i]]
        if kd is not None:
            row.append(kd[i])
        rows.append(row)
    context.writer.write_csv("mn-cdf.csv", header, rows)
    context.writer.write_json(
        "mn.json",
        dict(
            curve.metadata,
            A_star=manager.ladders.A_star,
            theta_star=manager.ladders.theta_star,
            K_star=manager.ladders.karlin_dembo_constant() if kd is not None else None,
        ),
    )


def cmd_simulate(context: _Run) -> None:
    args = context.args
    model = context.load(args.model)
    manager = context.manager()
    start = _default_start(model, args.start)
    statistic = _Statistic(args.what)

    if statistic is _Statistic.LADDER:
        context.seeds.append(args.seed)
        mean = montecarlo.empirical_ladder_epochs(model, args.n, args.seed, start=start)
        context.writer.write_json(
            "simulate-ladder.json",
            dict(model=model.digest, m=args.n, seed=args.seed, start=start, mean=mean),
        )
        return

    report = _simulate(context, manager, statistic, horizon=args.n, start=start)
    estimates = report.tail if statistic is _Statistic.Q1 else report.cdf
    header = ["level", "estimate", "se"]
    bounds = None
    if statistic is _Statistic.S_PLUS:
        try:
            bounds = [_tail_bound(manager, level) for level in report.levels]
        except (errors.LocalscoreError, errors.LocalscoreException) as e:
            logger.debug("No tail bound column: {}".format(e))
        else:
            header.append("tail_bound")

    rows = []
    for i, level in enumerate(report.levels):
        row = [level, estimates[i], report.standard_errors[i]]
        if bounds is not None:
            row.append(bounds[i])
        rows.append(row)
    context.writer.write_csv("simulate-{}.csv".format(statistic.value), header, rows)
    context.writer.write_json(
        "simulate-{}.json".format(statistic.value),
        dict(
            config=report.config.to_dict(),
            replicates=report.replicates,
            discarded=report.discarded,
            generator=report.generator,
        ),
    )


def cmd_compare(context: _Run) -> None:
    args = context.args
    model = context.load(args.model)
    manager = context.manager()
    start = _default_start(model, args.start)
    figures = {
        "splus": _compare_splus,
        "q1": _compare_q1,
        "mn": _compare_mn,
        "mn-n": _compare_mn_n,
    }
    figures[args.figure](context, manager, start)


def _compare_splus(context, manager, start):
    args = context.args
    model = manager.model
    level_max = args.max_level // model.lattice_step
    table = manager.splus_table(level_max)
    weights = _start_weights(model, start)
    report = _simulate(context, manager, _Statistic.S_PLUS, horizon=args.n, start=start)

    rows = []
    for k in range(level_max + 1):
        level = int(table.levels[k])
        tail = distributions.splus_tail_asymptotic(manager.spectral, manager.ladders, k)
        rows.append(
            [
                level,
                weights @ table.values[:, k],
                1.0 - weights @ tail,
                report.cdf_at(level),
                report.standard_error_at(level),
                _tail_bound(manager, level),
            ]
        )
    context.writer.write_csv(
        "compare-splus.csv",
        ["level", "exact", "asymptotic", "monte_carlo", "se", "tail_bound"],
        rows,
    )


def _compare_q1(context, manager, start):
    args = context.args
    model = manager.model
    k_max = args.max_level // model.lattice_step
    exact = manager.q1_tail(k_max)
    kd = manager.kd_q1_tail(k_max)
    weights = _start_weights(model, start)
    report = _simulate(context, manager, _Statistic.Q1, horizon=args.n, start=start)

    rows = []
    for k in range(k_max + 1):
        level = int(exact.levels[k])
        rows.append(
            [
                level,
                weights @ exact.values[:, k],
                weights @ kd.values[:, k],
                report.tail_at(level),
                report.standard_error_at(level),
            ]
        )
    context.writer.write_csv(
        "compare-q1.csv",
        ["level", "approx", "kd", "monte_carlo", "se"],
        rows,
    )


def _compare_mn(context, manager, start):
    args = context.args
    grid = _grid(args.x_min, args.x_max, args.x_step)
    curve = manager.mn_curve(args.n, grid, variant=args.variant, tail=args.tail)
    kd = manager.kd_curve(args.n, grid) if manager.ladders.supports_karlin_dembo() else None
    report = _simulate(context, manager, _Statistic.MN, horizon=args.n, start=start)
    step = manager.model.lattice_step

    rows = []
    for i, x in enumerate(grid):
        level = distributions.mn_level(manager.ladders, args.n, x) * step
        rows.append(
            [
                x,
                curve.values[0, i],
                None if kd is None else kd[i],
                report.cdf_at(level),
                report.standard_error_at(level),
            ]
        )
    context.writer.write_csv(
        "compare-mn.csv", ["x", "improved", "kd", "monte_carlo", "se"], rows
    )


def _compare_mn_n(context, manager, start):
    args = context.args
    supported = manager.ladders.supports_karlin_dembo()
    step = manager.model.lattice_step
    rows = []
    for n in args.n_values:
        improved = manager.mn_cdf(n, args.x, variant=args.variant)
        kd = (
            distributions.kd_mn_approx(manager.spectral, manager.ladders, n, args.x)
            if supported
            else None
        )
        report = _simulate(context, manager, _Statistic.MN, horizon=n, start=start)
        level = distributions.mn_level(manager.ladders, n, args.x) * step
        rows.append(
            [n, improved, kd, report.cdf_at(level), report.standard_error_at(level)]
        )
    context.writer.write_csv(
        "compare-mn-n.csv", ["n", "improved", "kd", "monte_carlo", "se"], rows
    )


def cmd_pvalue(context: _Run) -> None:
    args = context.args
    model = context.load(args.model)
    manager = context.manager()
    report = manager.pvalue(args.n, args.score, variant=args.variant)
    logger.info(
        "P(Mn > {}) = {!r} (Karlin-Dembo: {!r})".format(
            args.score, report.improved, report.kd
        )
    )
    context.writer.write_json(
        "pvalue.json",
        dict(
            report.to_dict(),
            theta_star=manager.ladders.theta_star,
            A_star=manager.ladders.A_star,
        ),
    )


def cmd_estimate(context: _Run) -> None:
    args = context.args
    symbols = read_sequence(args.sequence)
    alphabet = args.alphabet or sorted(set(symbols))
    model = model_from_sequence(
        symbols, alphabet=alphabet, scores=args.scores, pseudocount=args.pseudocount
    )
    context.model = model
    dump_model(model, context.writer.prepare(args.output))

    report = validate_model(model)
    if not report.passed:
        logger.warning(
            "The estimated model fails the {} check(s)".format(
                formatting_utils.humanize_list(report.failed_checks, "and")
            )
        )


def cmd_replay(context: _Run) -> None:
    args = context.args
    try:
        manifest = RunManifest.load(filepath=args.manifest)
    except OSError as e:
        raise errors.ManifestError(args.manifest, e.strerror or str(e)) from e
    except (ValueError, yaml.YAMLError) as e:
        raise errors.ManifestError(args.manifest, str(e)) from e

    flags = ["--output-dir", args.output_dir]
    if args.verbose:
        flags.append("--verbose")
    elif args.quiet:
        flags.append("--quiet")
    logger.info("Replaying {!r}".format(" ".join(manifest.argv)))
    context.exit_code = run(flags + manifest.argv)

    replayed = os.path.join(args.output_dir, manifest.command + MANIFEST_SUFFIX)
    if context.exit_code == 0 and os.path.exists(replayed):
        model = RunManifest.load(filepath=replayed).model
        if model != manifest.model:
            logger.warning(
                "The model changed since the recorded run ({} != {})".format(
                    model, manifest.model
                )
            )


def _positive_int(value: str) -> int:
    number = int(value)
    if number < 1:
        raise argparse.ArgumentTypeError("{!r} is not a positive integer".format(value))
    return number


def _nonnegative_int(value: str) -> int:
    number = int(value)
    if number < 0:
        raise argparse.ArgumentTypeError("{!r} is negative".format(value))
    return number


def _horizon(value: str) -> int:
    number = int(value)
    if number < 2:
        raise argparse.ArgumentTypeError("n must be at least 2, got {!r}".format(value))
    return number


def _seed(value: str) -> int:
    number = int(value)
    if not 0 <= number < 2 ** 64:
        raise argparse.ArgumentTypeError("{!r} is not a 64-bit seed".format(value))
    return number


def _add_simulation_options(parser, *, n_default=300):
    parser.add_argument("--n", type=_horizon, default=n_default, help="sequence length")
    parser.add_argument(
        "--reps", type=_positive_int, default=100000, help="Monte Carlo replicates"
    )
    parser.add_argument("--seed", type=_seed, default=0, help="master seed")
    parser.add_argument(
        "--start",
        default=None,
        help="first state, or 'pi' for a stationary start (default: 'A' when "
        "the alphabet has it, 'pi' otherwise)",
    )
    parser.add_argument(
        "--threads",
        type=_positive_int,
        default=None,
        help="worker threads (default: $LOCALSCORE_THREADS or the CPU count)",
    )


def _add_approximation_options(parser):
    parser.add_argument(
        "--variant",
        choices=("statement", "proof"),
        default="statement",
        help="scale of the second factor of the Mn approximation",
    )
    parser.add_argument(
        "--tail",
        choices=("exact", "asymptotic"),
        default="exact",
        help="S+ tail used by the Q1 and Mn approximations",
    )


def _add_x_grid_options(parser):
    parser.add_argument("--x-min", type=float, default=-10.0)
    parser.add_argument("--x-max", type=float, default=6.0)
    parser.add_argument("--x-step", type=float, default=0.5)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="localscore",
        allow_abbrev=False,
        description="Exact and asymptotic distributions of local scores "
        "of Markovian sequences.",
    )
    parser.add_argument(
        "--version", action="version", version="%(prog)s " + localscore.__version__
    )
    parser.add_argument(
        "--output-dir", default=".", help="directory for every file written"
    )
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="store_true")
    verbosity.add_argument("-q", "--quiet", action="store_true")

    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")
    subparsers.required = True

    sub = subparsers.add_parser("validate", help="check the model hypotheses")
    sub.add_argument("model")
    sub.set_defaults(func=cmd_validate)

    sub = subparsers.add_parser("spectral", help="theta*, u(theta*) and a rho grid")
    sub.add_argument("model")
    sub.add_argument("--theta-min", type=float, default=-1.0)
    sub.add_argument("--theta-max", type=float, default=2.0)
    sub.add_argument("--theta-step", type=float, default=0.05)
    sub.set_defaults(func=cmd_spectral)

    sub = subparsers.add_parser("ladders", help="ladder matrices and constants")
    sub.add_argument("model")
    sub.add_argument("--tol", type=float, default=SOLVER_TOLERANCE)
    sub.set_defaults(func=cmd_ladders)

    sub = subparsers.add_parser("splus", help="exact and asymptotic law of S+")
    sub.add_argument("model")
    sub.add_argument("--max-level", type=_nonnegative_int, default=30)
    sub.set_defaults(func=cmd_splus)

    sub = subparsers.add_parser("q1", help="tail of the first excursion height")
    sub.add_argument("model")
    sub.add_argument("--max-level", type=_nonnegative_int, default=30)
    sub.add_argument("--tail", choices=("exact", "asymptotic"), default="exact")
    sub.set_defaults(func=cmd_q1)

    sub = subparsers.add_parser("mn", help="approximate cdf of the local score")
    sub.add_argument("model")
    sub.add_argument("--n", type=_horizon, required=True)
    _add_x_grid_options(sub)
    _add_approximation_options(sub)
    sub.set_defaults(func=cmd_mn)

    sub = subparsers.add_parser("simulate", help="Monte Carlo estimates")
    sub.add_argument("model")
    sub.add_argument(
        "--what", choices=[s.value for s in _Statistic], default="splus"
    )
    _add_simulation_options(sub)
    sub.set_defaults(func=cmd_simulate)

    sub = subparsers.add_parser(
        "compare", help="approximations next to Monte Carlo estimates"
    )
    sub.add_argument("model")
    sub.add_argument(
        "--figure", choices=("splus", "q1", "mn", "mn-n"), default="splus"
    )
    _add_simulation_options(sub)
    sub.add_argument("--max-level", type=_nonnegative_int, default=30)
    _add_x_grid_options(sub)
    sub.add_argument("--x", type=float, default=-8.0, help="x for --figure mn-n")
    sub.add_argument(
        "--n-values",
        type=_horizon,
        nargs="+",
        default=[50, 100, 200, 300, 500, 1000],
    )
    _add_approximation_options(sub)
    sub.set_defaults(func=cmd_compare)

    sub = subparsers.add_parser("pvalue", help="p-value of an observed local score")
    sub.add_argument("model")
    sub.add_argument("--n", type=_horizon, required=True)
    sub.add_argument("--score", type=_nonnegative_int, required=True)
    sub.add_argument("--variant", choices=("statement", "proof"), default="statement")
    sub.set_defaults(func=cmd_pvalue)

    sub = subparsers.add_parser("estimate", help="estimate a model from a sequence")
    sub.add_argument("sequence")
    sub.add_argument("--scores", type=int, nargs="+", required=True)
    sub.add_argument("--alphabet", nargs="+", default=None)
    sub.add_argument("--pseudocount", type=float, default=0.0)
    sub.add_argument("--output", default="model.yaml")
    sub.set_defaults(func=cmd_estimate)

    sub = subparsers.add_parser("replay", help="rerun a recorded command")
    sub.add_argument("manifest")
    sub.set_defaults(func=cmd_replay)

    return parser
