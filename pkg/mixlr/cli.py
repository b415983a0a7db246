# SPDX-FileCopyrightText: 2026 mixlr contributors
#
# SPDX-License-Identifier: MIT

"""
`mixlr.cli`
====================================================

Command-line front end.

::

    mixlr gen mixture --k 2 --d 4 --n 4000 --noise 4.0 --biases 100,0 -o data.csv
    mixlr fit sub-random --data data.csv --k 2 --A 150 --h 1000 --regressor robust
    mixlr fit am --data data.csv --k 2 --init random --init-std 10 --repeats 50
    mixlr diag --data data.csv --models data.models.json
    mixlr bench --data data.csv --k 2 --repeats 30 --truth data.models.json
    mixlr complexity --data data.csv --k 2 --w 1.0
    mixlr sweep --data data.csv --k 2 --h-values 10,100,1000
    mixlr init-noise --data data.csv --truth data.models.json --sigmas 0.01,0.1,1,10

Reports are key-sorted JSON (tables are CSV) on standard output; logging goes
to standard error. All randomness flows from ``--seed`` (falling back to
``$MIXLR_SEED``, then 0): the train/test split uses the seed itself and
repeat ``r`` runs its algorithms with ``seed + r``. Identical flags therefore
give byte-identical output; wall-clock times are only reported on request.

Exit status is 0 when a report was produced, 1 on a data or configuration
error and 2 on a usage error.
"""

# pylint: disable=invalid-name

import argparse
import csv
import io
import math
import os
import sys
import time
from dataclasses import dataclass, field
from typing import NamedTuple

try:
    from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple
except ImportError:
    pass

import adafruit_logging as logging
import numpy as np

from mixlr import am, subsample
from mixlr.am import (
    AMConfig,
    NO_COMPETITOR,
    am_run,
    diagnostics,
    initial_models,
    parameter_error,
    perturb_models,
    theory_step_size,
)
from mixlr.common import InvalidInputError, MixLRError, UnsupportedSizeError
from mixlr.complexity import (
    ComplexityConfig,
    check_theorem1,
    linear_rademacher,
    mixture_rademacher_lower,
)
from mixlr.core import Dataset, ModelSet, Partition, min_loss_dataset, normalize
from mixlr.datagen import (
    MixtureSpec,
    SplitSpec,
    gen_friedman,
    gen_mixture_linear,
    load_csv,
    load_models,
    parse_floats,
    save_csv,
    save_models,
    split_indices,
)
from mixlr.randnum import default_seed, derive_seed
from mixlr.regression import REGRESSORS, RobustConfig, least_squares
from mixlr.subsample import SubsampleConfig, oracle_fit, subsample_fit
from mixlr.transform import dataset_digest, dumps, to_plain

__version__ = "0.0.0+auto.0"
__repo__ = "https://github.com/mixlr/mixlr.git"

log = logging.getLogger(__name__)
log.addHandler(logging.StreamHandler(sys.stderr))
log.setLevel(logging.INFO)

ALGORITHMS = ("lr", "am", "sub-exhaustive", "sub-random")
AM_INITS = ("random", "file", "from-sub-random")

# bench rows: (name, description)
BENCH_ROWS = (
    ("A0", "linear regression"),
    ("A1", "sub-sample random, ls"),
    ("A2", "sub-sample random, robust"),
    ("A3", "gradient AM from A1"),
    ("A4", "gradient AM from random init"),
)

TABLE_COLUMNS = ("train_mean", "train_var", "test_mean", "test_var")


@dataclass
class RunRecord:
    """One fitted run: its seed, losses, models and algorithm metadata."""

    seed: int
    train_loss: float
    test_loss: float
    models: ModelSet
    meta: Dict[str, Any] = field(default_factory=dict)


@dataclass
class RunReport:
    """Machine-readable outcome of ``mixlr fit``.

    Serialises with `to_document` to a document that depends only on the
    command-line flags and the data, unless ``wall_time_ms`` was requested.
    """

    command: str
    config: Dict[str, Any]
    seed: int
    data_sha256: str
    runs: List[RunRecord] = field(default_factory=list)
    oracle: Optional[Dict[str, Any]] = None
    wall_time_ms: Optional[float] = None

    def summary(self) -> Dict[str, float]:
        """Mean and variance (``ddof=0``) of the train and test min-losses."""
        return _moments(
            [run.train_loss for run in self.runs], [run.test_loss for run in self.runs]
        )

    def to_document(self) -> Dict[str, Any]:
        """The report as a JSON-ready mapping."""

        document = {
            "command": self.command,
            "config": self.config,
            "seed": self.seed,
            "data_sha256": self.data_sha256,
            "runs": [
                {
                    "seed": run.seed,
                    "train_min_loss": run.train_loss,
                    "test_min_loss": run.test_loss,
                    "models": run.models,
                    "meta": run.meta,
                }
                for run in self.runs
            ],
            "summary": self.summary(),
        }
        if self.oracle is not None:
            document["oracle"] = self.oracle
        if self.wall_time_ms is not None:
            document["wall_time_ms"] = self.wall_time_ms
        return document


class Workload(NamedTuple):
    """Training and test data of a command, plus bookkeeping for the truth
    file."""

    data: Dataset
    train: Dataset
    test: Dataset
    train_indices: Optional[np.ndarray]
    x_scale: float
    y_scale: float
    digest: str


def _moments(train: Sequence[float], test: Sequence[float]) -> Dict[str, float]:
    train_arr = np.asarray(train, dtype=float)
    test_arr = np.asarray(test, dtype=float)
    return {
        "train_mean": float(np.mean(train_arr)),
        "train_var": float(np.var(train_arr)),
        "test_mean": float(np.mean(test_arr)),
        "test_var": float(np.var(test_arr)),
    }


def _losses(models: ModelSet, workload: Workload) -> Tuple[float, float]:
    return (
        min_loss_dataset(workload.train, models).total,
        min_loss_dataset(workload.test, models).total,
    )


def _config(args: argparse.Namespace) -> Dict[str, Any]:
    return {key: value for key, value in sorted(vars(args).items()) if key not in ("func", "argv")}


def _command(args: argparse.Namespace) -> str:
    return " ".join(["mixlr"] + list(args.argv))


def load_workload(args: argparse.Namespace) -> Workload:
    """Reads ``--data`` (and ``--test``), normalises when asked and splits.

    Normalisation scales are taken from ``--data`` and applied to ``--test``
    too, so both live in the same units.
    """

    data = load_csv(args.data)
    digest = dataset_digest(data)
    x_scale = y_scale = 1.0
    if args.normalize:
        data, x_scale, y_scale = normalize(data)
    if args.test:
        test = load_csv(args.test)
        if test.d != data.d:
            raise InvalidInputError("test data has d=%i, training data d=%i" % (test.d, data.d))
        if args.normalize:
            test = Dataset(test.covariates / x_scale, test.targets / y_scale)
        return Workload(data, data, test, None, x_scale, y_scale, digest)
    train_idx, test_idx = split_indices(data.n, SplitSpec(args.train_fraction, args.seed))
    log.info("split %i points into %i train and %i test", data.n, train_idx.size, test_idx.size)
    return Workload(
        data, data.take(train_idx), data.take(test_idx), train_idx, x_scale, y_scale, digest
    )


def load_truth(path: str, workload: Workload) -> Tuple[ModelSet, Optional[Partition]]:
    """Reads a truth file and maps it onto the workload: models are rescaled
    to normalised units and labels restricted to the training points."""

    models, labels = load_models(path)
    if models.d != workload.data.d:
        raise InvalidInputError(
            "truth models have d=%i, data d=%i" % (models.d, workload.data.d)
        )
    models = ModelSet(models.thetas * (workload.x_scale / workload.y_scale))
    if labels is None:
        return models, None
    if labels.n != workload.data.n:
        raise InvalidInputError(
            "truth file has %i labels for %i points" % (labels.n, workload.data.n)
        )
    if workload.train_indices is not None:
        labels = Partition(labels.labels[workload.train_indices], labels.k)
    return models, labels


def _oracle(truth: Optional[str], workload: Workload) -> Optional[Dict[str, Any]]:
    if not truth:
        return None
    models, labels = load_truth(truth, workload)
    if labels is None:
        raise InvalidInputError("truth file %s has no labels; the oracle needs them" % truth)
    oracle = oracle_fit(workload.train, labels)
    train_loss, test_loss = _losses(oracle, workload)
    document = {"models": oracle, "train_min_loss": train_loss, "test_min_loss": test_loss}
    try:
        document["parameter_error"] = parameter_error(oracle, models)
    except UnsupportedSizeError:
        log.info("oracle: no parameter error for k=%i", models.k)
    return document


def _robust_config(args: argparse.Namespace, seed: int) -> RobustConfig:
    return RobustConfig(trials=args.trials, inlier_scale=args.inlier_scale, seed=seed)


def _subsample_config(
    args: argparse.Namespace,
    seed: int,
    mode: str,
    regressor: Optional[str] = None,
    h: Optional[int] = None,
) -> SubsampleConfig:
    return SubsampleConfig(
        sample_size=args.sample_size,
        mode=mode,
        h=args.h if h is None else h,
        regressor=args.regressor if regressor is None else regressor,
        robust=_robust_config(args, seed),
        seed=seed,
        min_part_size=args.min_part_size,
        use_all=args.use_all,
    )


def _am_config(args: argparse.Namespace, seed: int, init: str) -> AMConfig:
    init_models = None
    init_subsample = None
    mode = {"random": "gaussian", "file": "models", "from-sub-random": "subsample"}[init]
    if init == "file":
        if not args.init_file:
            raise InvalidInputError("--init file needs --init-file")
        init_models = load_models(args.init_file)[0]
    elif init == "from-sub-random":
        init_subsample = _subsample_config(args, seed, "random", regressor="ls")
    return AMConfig(
        gamma=args.gamma,
        max_iters=args.max_iters,
        tol=args.tol,
        init=mode,
        init_std=args.init_std,
        seed=seed,
        init_models=init_models,
        init_subsample=init_subsample,
    )


def run_am(train: Dataset, k: int, cfg: AMConfig) -> Tuple[ModelSet, Dict[str, Any]]:
    """Runs gradient AM from the configured initialisation."""

    result = am_run(train, cfg, initial_models(train, k, cfg))
    meta = {
        "iterations_run": result.iterations_run,
        "converged": result.converged,
        "diverged": result.diverged,
    }
    return result.models, meta


def run_subsample(train: Dataset, k: int, cfg: SubsampleConfig) -> Tuple[ModelSet, Dict[str, Any]]:
    """Runs the sub-sample search and returns its refitted models."""

    result = subsample_fit(train, k, cfg)
    meta = {"score": result.score, "candidates_evaluated": result.candidates_evaluated}
    return result.refit_models, meta


def fit_once(
    algorithm: str, train: Dataset, k: int, args: argparse.Namespace, seed: int
) -> Tuple[ModelSet, Dict[str, Any]]:
    """Fits ``algorithm`` on ``train`` with the run seed ``seed``."""

    if algorithm == "lr":
        return ModelSet([least_squares(train)]), {}
    if algorithm == "am":
        return run_am(train, k, _am_config(args, seed, args.init))
    mode = "exhaustive" if algorithm == "sub-exhaustive" else "random"
    return run_subsample(train, k, _subsample_config(args, seed, mode))


def cmd_gen(args: argparse.Namespace) -> int:
    """Writes a generated dataset (and, for mixtures, its true models)."""

    seed = args.seed
    files = [args.output]
    if args.family == "mixture":
        biases = tuple(parse_floats(args.biases, "biases")) if args.biases else None
        weights = tuple(parse_floats(args.weights, "weights")) if args.weights else None
        spec = MixtureSpec(
            k=args.k,
            d=args.d,
            n=args.n,
            noise_std=args.noise,
            biases=biases,
            component_weights=weights,
            theta_scale=args.theta_scale,
            seed=seed,
        )
        data, models, labels = gen_mixture_linear(spec)
        models_path = args.models or os.path.splitext(args.output)[0] + ".models.json"
        save_models(models, models_path, labels)
        files.append(models_path)
    else:
        data = gen_friedman(args.variant, args.n, args.noise, seed)
    save_csv(data, args.output)
    log.info("wrote %i points (d=%i) to %s", data.n, data.d, args.output)
    sys.stdout.write(
        dumps(
            {
                "command": _command(args),
                "config": _config(args),
                "seed": seed,
                "data_sha256": dataset_digest(data),
                "n": data.n,
                "d": data.d,
                "files": files,
            }
        )
    )
    return 0


def cmd_fit(args: argparse.Namespace) -> int:
    """Fits one algorithm, ``--repeats`` times, and prints a `RunReport`."""

    started = time.monotonic()
    workload = load_workload(args)
    k = 1 if args.algorithm == "lr" else args.k
    report = RunReport(
        command=_command(args),
        config=_config(args),
        seed=args.seed,
        data_sha256=workload.digest,
    )
    for r in range(args.repeats):
        seed = derive_seed(args.seed, r)
        models, meta = fit_once(args.algorithm, workload.train, k, args, seed)
        train_loss, test_loss = _losses(models, workload)
        log.info("fit %s run %i: train %g, test %g", args.algorithm, r, train_loss, test_loss)
        report.runs.append(RunRecord(seed, train_loss, test_loss, models, meta))
    report.oracle = _oracle(args.truth, workload)
    if args.timing:
        report.wall_time_ms = (time.monotonic() - started) * 1000.0
    sys.stdout.write(dumps(report.to_document()))
    return 0


def cmd_diag(args: argparse.Namespace) -> int:
    """Prints the diagnostics of a reference model set on a dataset."""

    data = load_csv(args.data)
    digest = dataset_digest(data)
    reference = load_models(args.models)[0]
    if args.normalize:
        data, x_scale, y_scale = normalize(data)
        reference = ModelSet(reference.thetas * (x_scale / y_scale))
    diag = diagnostics(data, reference)
    document = {
        "command": _command(args),
        "config": _config(args),
        "data_sha256": digest,
        "delta": None if diag.delta == NO_COMPETITOR else diag.delta,
        "no_competitor": not diag.has_competitor,
        "lambda": diag.lambda_,
        "mu": diag.mu,
        "fractions": diag.fractions,
        "rho": diag.rho,
        "c_bar": diag.c_bar,
        "theory_step_size": theory_step_size(diag) if diag.c_bar > 0 else None,
    }
    sys.stdout.write(dumps(document))
    return 0


def bench_rows(args: argparse.Namespace, workload: Workload) -> List[Dict[str, Any]]:
    """Runs A0 to A4 ``--repeats`` times and returns one summary row each,
    plus an ``oracle`` row when ``--truth`` is given."""

    losses: Dict[str, Tuple[List[float], List[float]]] = {name: ([], []) for name, _ in BENCH_ROWS}
    dnc = {"A3": 0, "A4": 0}
    train = workload.train
    for r in range(args.repeats):
        seed = derive_seed(args.seed, r)
        fitted = {"A0": ModelSet([least_squares(train)])}
        for name, regressor in (("A1", "ls"), ("A2", "robust")):
            cfg = _subsample_config(args, seed, "random", regressor)
            fitted[name] = run_subsample(train, args.k, cfg)[0]
        from_a1 = AMConfig(
            gamma=args.gamma,
            max_iters=args.max_iters,
            tol=args.tol,
            init="models",
            init_models=fitted["A1"],
            seed=seed,
        )
        fitted["A3"], meta3 = run_am(train, args.k, from_a1)
        fitted["A4"], meta4 = run_am(train, args.k, _am_config(args, seed, "random"))
        for name, meta in (("A3", meta3), ("A4", meta4)):
            if not meta["converged"]:
                dnc[name] += 1
        for name, models in fitted.items():
            train_loss, test_loss = _losses(models, workload)
            losses[name][0].append(train_loss)
            losses[name][1].append(test_loss)
        log.info("bench: run %i of %i done", r + 1, args.repeats)

    rows = []
    for name, description in BENCH_ROWS:
        row: Dict[str, Any] = {"algorithm": name, "description": description}
        row.update(_moments(*losses[name]))
        row["dnc"] = dnc.get(name)
        rows.append(row)
    oracle = _oracle(args.truth, workload)
    if oracle is not None:
        row = {"algorithm": "oracle", "description": "least squares per true component"}
        row.update(_moments([oracle["train_min_loss"]], [oracle["test_min_loss"]]))
        row["dnc"] = None
        rows.append(row)
    return rows


def _cell(value: Any) -> str:
    plain = to_plain(value)
    if plain is None:
        return ""
    if isinstance(plain, float):
        return repr(plain)
    return str(plain)


def _write_table(
    rows: List[Dict[str, Any]], columns: Sequence[str], output: Optional[str]
) -> None:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_cell(row.get(column)) for column in columns])
    _emit(buffer.getvalue(), output)


def _emit(text: str, output: Optional[str]) -> None:
    if output:
        with open(output, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
        log.info("wrote %s", output)
    else:
        sys.stdout.write(text)


def cmd_bench(args: argparse.Namespace) -> int:
    """Compares A0 to A4 and prints a CSV or JSON table."""

    workload = load_workload(args)
    rows = bench_rows(args, workload)
    columns = ("algorithm", "description") + TABLE_COLUMNS + ("dnc",)
    if args.format == "csv":
        _write_table(rows, columns, args.output)
    else:
        document = {
            "command": _command(args),
            "config": _config(args),
            "seed": args.seed,
            "data_sha256": workload.digest,
            "rows": rows,
        }
        _emit(dumps(document), args.output)
    return 0


def cmd_complexity(args: argparse.Namespace) -> int:
    """Checks the mixture complexity bound on a dataset."""

    data = load_csv(args.data)
    digest = dataset_digest(data)
    if args.normalize:
        data = normalize(data)[0]
    cfg = ComplexityConfig(
        sigma_draws=args.sigma_draws,
        candidate_models=args.candidates,
        lipschitz_mu=args.mu,
        w=args.w,
        seed=args.seed,
    )
    report = check_theorem1(data, args.k, args.w, cfg)
    linear = linear_rademacher(data.covariates, args.w, cfg)
    mixture = mixture_rademacher_lower(data, args.k, args.w, cfg)
    document = {
        "command": _command(args),
        "config": _config(args),
        "seed": args.seed,
        "data_sha256": digest,
        "linear": linear._asdict(),
        "mixture_lower": mixture._asdict(),
        "bound": report._asdict(),
    }
    sys.stdout.write(dumps(document))
    return 0


def cmd_sweep(args: argparse.Namespace) -> int:
    """Sub-sample search over a list of ``h`` values with both regressors;
    writes plot-ready CSV."""

    workload = load_workload(args)
    h_values = [int(h) for h in parse_floats(args.h_values, "h-values")]
    rows = []
    for h in h_values:
        for regressor in REGRESSORS:
            train_losses, test_losses = [], []
            for r in range(args.repeats):
                seed = derive_seed(args.seed, r)
                cfg = _subsample_config(args, seed, "random", regressor, h)
                models = run_subsample(workload.train, args.k, cfg)[0]
                train_loss, test_loss = _losses(models, workload)
                train_losses.append(train_loss)
                test_losses.append(test_loss)
            row: Dict[str, Any] = {"h": h, "regressor": regressor}
            row.update(_moments(train_losses, test_losses))
            rows.append(row)
            log.info("sweep: h=%i %s done", h, regressor)
    _write_table(rows, ("h", "regressor") + TABLE_COLUMNS, args.output)
    return 0


def init_noise_rows(args: argparse.Namespace, workload: Workload) -> List[Dict[str, Any]]:
    """Perturbs a known-good initialisation by each ``sigma`` and runs AM for
    a fixed number of iterations."""

    models, labels = load_truth(args.truth, workload)
    start = oracle_fit(workload.train, labels) if labels is not None else models
    cfg = AMConfig(
        gamma=args.gamma, max_iters=args.iters, tol=0.0, init="models", init_models=start
    )
    rows = []
    for sigma in parse_floats(args.sigmas, "sigmas"):
        train_losses, test_losses = [], []
        diverged = 0
        for r in range(args.repeats):
            init = perturb_models(start, sigma, derive_seed(args.seed, r))
            result = am_run(workload.train, cfg, init)
            diverged += int(result.diverged)
            train_loss, test_loss = _losses(result.models, workload)
            train_losses.append(train_loss)
            test_losses.append(test_loss)
        row: Dict[str, Any] = {"sigma": sigma, "diverged": diverged}
        row.update(_moments(train_losses, test_losses))
        rows.append(row)
        log.info("init-noise: sigma=%g done", sigma)
    return rows


def cmd_init_noise(args: argparse.Namespace) -> int:
    """Initialisation-noise experiment; writes plot-ready CSV."""

    workload = load_workload(args)
    rows = init_noise_rows(args, workload)
    _write_table(rows, ("sigma",) + TABLE_COLUMNS + ("diverged",), args.output)
    return 0


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("should be >= 1, not %i" % value)
    return value


def _add_data_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--data", required=True, help="CSV dataset (header y,f0,...)")
    parser.add_argument("--test", help="separate test CSV; disables the split")
    parser.add_argument("--train-fraction", type=float, default=0.8)
    parser.add_argument(
        "--normalize", action="store_true", help="scale into ||x|| <= 1, |y| <= 1 first"
    )


def _add_solver_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--k", type=int, default=2, help="number of components")
    group = parser.add_argument_group("sub-sample search")
    group.add_argument("--A", "--sample-size", dest="sample_size", type=int, default=150)
    group.add_argument("--h", type=int, default=1000, help="random labelings")
    group.add_argument("--regressor", choices=REGRESSORS, default="ls")
    group.add_argument("--min-part-size", type=int, default=1)
    group.add_argument("--use-all", action="store_true", help="use the whole set as A")
    group.add_argument("--trials", type=int, default=100, help="robust fit trials")
    group.add_argument("--inlier-scale", type=float, default=1.5)
    group = parser.add_argument_group("gradient AM")
    group.add_argument("--gamma", type=float, default=0.1)
    group.add_argument("--max-iters", type=int, default=200)
    group.add_argument("--tol", type=float, default=1e-10)
    group.add_argument("--init", choices=AM_INITS, default="random")
    group.add_argument(
        "--init-std", type=float, default=math.sqrt(2.0), help="random init std (variance 2)"
    )
    group.add_argument("--init-file", help="model JSON for --init file")


def build_parser() -> argparse.ArgumentParser:
    """Returns the ``mixlr`` argument parser."""

    parser = argparse.ArgumentParser(
        prog="mixlr", description="List-decodable mixed linear regression."
    )
    parser.add_argument("--version", action="version", version="%(prog)s " + __version__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=None, help="default: $MIXLR_SEED or 0")
    verbosity = common.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="store_true")
    verbosity.add_argument("-q", "--quiet", action="store_true")
    commands = parser.add_subparsers(dest="command", required=True)

    gen = commands.add_parser("gen", parents=[common], help="generate a dataset")
    gen.add_argument("family", choices=("mixture", "friedman"))
    gen.add_argument("-o", "--output", required=True, help="CSV path")
    gen.add_argument("--models", help="true models JSON (default: <output>.models.json)")
    gen.add_argument("--n", type=int, default=4000)
    gen.add_argument("--noise", type=float, default=0.0)
    gen.add_argument("--k", type=int, default=2)
    gen.add_argument("--d", type=int, default=4)
    gen.add_argument("--biases", help="comma separated, one per component")
    gen.add_argument("--weights", help="comma separated component probabilities")
    gen.add_argument("--theta-scale", type=float, default=1.0)
    gen.add_argument("--variant", type=int, choices=(1, 2, 3), default=1)
    gen.set_defaults(func=cmd_gen)

    fit = commands.add_parser("fit", parents=[common], help="fit one algorithm")
    fit.add_argument("algorithm", choices=ALGORITHMS)
    _add_data_args(fit)
    _add_solver_args(fit)
    fit.add_argument("--repeats", type=_positive_int, default=1)
    fit.add_argument("--truth", help="true models JSON with labels; adds the oracle")
    fit.add_argument("--timing", action="store_true", help="report wall time")
    fit.set_defaults(func=cmd_fit)

    diag = commands.add_parser("diag", parents=[common], help="diagnostics of reference models")
    diag.add_argument("--data", required=True)
    diag.add_argument("--models", required=True, help="reference models JSON")
    diag.add_argument("--normalize", action="store_true")
    diag.set_defaults(func=cmd_diag)

    bench = commands.add_parser("bench", parents=[common], help="compare A0 to A4")
    _add_data_args(bench)
    _add_solver_args(bench)
    bench.add_argument("--repeats", type=_positive_int, default=30)
    bench.add_argument("--truth", help="true models JSON with labels; adds the oracle row")
    bench.add_argument("--format", choices=("csv", "json"), default="csv")
    bench.add_argument("-o", "--output", help="write the table here instead of stdout")
    bench.set_defaults(func=cmd_bench)

    cpx = commands.add_parser("complexity", parents=[common], help="check the complexity bound")
    cpx.add_argument("--data", required=True)
    cpx.add_argument("--normalize", action="store_true")
    cpx.add_argument("--k", type=int, default=2)
    cpx.add_argument("--w", type=float, default=1.0, help="model norm bound")
    cpx.add_argument("--mu", type=float, default=None, help="default: 2(b + wR)")
    cpx.add_argument("--sigma-draws", type=int, default=2000)
    cpx.add_argument("--candidates", type=int, default=5000)
    cpx.set_defaults(func=cmd_complexity)

    sweep = commands.add_parser("sweep", parents=[common], help="sub-sample search over h")
    _add_data_args(sweep)
    _add_solver_args(sweep)
    sweep.add_argument("--h-values", default="10,100,1000")
    sweep.add_argument("--repeats", type=_positive_int, default=5)
    sweep.add_argument("-o", "--output")
    sweep.set_defaults(func=cmd_sweep)

    noise = commands.add_parser("init-noise", parents=[common], help="initialisation noise")
    _add_data_args(noise)
    noise.add_argument("--truth", required=True, help="true models JSON")
    noise.add_argument("--sigmas", default="0.01,0.1,1,10")
    noise.add_argument("--iters", type=int, default=40)
    noise.add_argument("--gamma", type=float, default=0.1)
    noise.add_argument("--repeats", type=_positive_int, default=15)
    noise.add_argument("-o", "--output")
    noise.set_defaults(func=cmd_init_noise)
    return parser


def _set_verbosity(args: argparse.Namespace) -> None:
    level = logging.INFO
    if args.verbose:
        level = logging.DEBUG
    elif args.quiet:
        level = logging.ERROR
    for module_log in (log, am.log, subsample.log):
        module_log.setLevel(level)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Entry point of the ``mixlr`` command; returns the exit status."""

    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(argv)
    args.argv = argv
    _set_verbosity(args)
    func: Callable[[argparse.Namespace], int] = args.func
    try:
        args.seed = default_seed(args.seed)
        return func(args)
    except (MixLRError, OSError) as err:
        log.error("mixlr %s: %s", args.command, err)
        return 1
