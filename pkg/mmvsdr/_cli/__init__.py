import argparse
import contextlib
import logging
import sys

from attr import asdict, attr, attributes
from attr.validators import instance_of, optional

from mmvsdr.classifiers import DEFAULT_K, MethodSpec, fit_reduction
from mmvsdr.core import Purpose, RngStream
from mmvsdr.errors import InvalidConfiguration, MmvError
from mmvsdr.evaluation import DEFAULT_REPETITIONS, CvPlan, run_experiment
from mmvsdr.file_formats import (
    FittedBasis, OutputFormat, ScreeningRow, load_csv, load_csv_with_names,
    write_csv, write_report, write_screening
)
from mmvsdr.index import MvConfig, marginal_mv, screen_by_mv
from mmvsdr.kernels import CdfKind, KernelFamily
from mmvsdr.optimize import OptimizerConfig
from mmvsdr.simulations import ModelKind, ModelSpec


logger = logging.getLogger(__name__)

DEFAULT_METHODS = "mmv+lda,lda"


@attributes(frozen=True)
class RunConfig(object):
    """ Everything a command needs, parsed and validated from the command
    line."""
    command = attr(validator=instance_of(str))
    input_path = attr(default=None, validator=optional(instance_of(str)))
    model = attr(default=None, validator=optional(instance_of(ModelSpec)))
    methods = attr(default=(), validator=instance_of(tuple))
    d = attr(default=1, validator=instance_of(int))
    keep = attr(default=None, validator=optional(instance_of(int)))
    cdf = attr(default=CdfKind.smoothed, validator=instance_of(CdfKind))
    kernel = attr(default=KernelFamily.gaussian,
                  validator=instance_of(KernelFamily))
    bandwidth = attr(default=None, validator=optional(instance_of(float)))
    restarts = attr(default=10, validator=instance_of(int))
    folds = attr(default=10, validator=instance_of(int))
    repetitions = attr(default=DEFAULT_REPETITIONS,
                       validator=instance_of(int))
    seed = attr(default=0, validator=instance_of(int))
    label = attr(default="y", validator=instance_of(str))
    output_path = attr(default=None, validator=optional(instance_of(str)))
    output_format = attr(default=OutputFormat.csv,
                         validator=instance_of(OutputFormat))

    def __attrs_post_init__(self):
        if self.input_path is not None and self.model is not None:
            raise InvalidConfiguration(
                "Give either an input file or --model, not both")
        if self.keep is not None and self.keep < 1:
            raise InvalidConfiguration(
                "--keep must be >= 1, got {0}".format(self.keep))
        if self.seed < 0:
            raise InvalidConfiguration(
                "--seed must be >= 0, got {0}".format(self.seed))
        if self.d < 0:
            raise InvalidConfiguration(
                "--d must be >= 0, got {0}".format(self.d))
        if self.model is not None and self.keep is not None \
                and self.keep > self.model.p:
            raise InvalidConfiguration(
                "--keep {0} exceeds p={1}".format(self.keep, self.model.p))
        inner_p = self.keep if self.keep is not None else \
            self.model.p if self.model is not None else None
        if inner_p is not None and self.d > inner_p:
            raise InvalidConfiguration(
                "--d {0} exceeds the {1} predictors left".format(
                    self.d, inner_p))
        reduces = self.command == "fit" or any(m.reduce for m in self.methods)
        if self.cdf == CdfKind.step and self.d > 0 and reduces:
            raise InvalidConfiguration(
                "MMV extraction needs --cdf smoothed, the step CDF has no "
                "gradient to follow")

    @classmethod
    def from_namespace(cls, ns):
        model = None
        if getattr(ns, "model", None) is not None:
            if ns.n is None or ns.p is None:
                raise InvalidConfiguration("--model requires --n and --p")
            model = ModelSpec(
                ModelKind.from_string(ns.model), ns.n, ns.p, ns.seed)
        keep = getattr(ns, "keep", None)
        k = getattr(ns, "k", DEFAULT_K)
        methods = tuple(
            MethodSpec.from_string(name, k=k, keep=keep)
            for name in getattr(ns, "methods", "").split(",") if name.strip()
        )
        return cls(
            command=ns.command,
            input_path=getattr(ns, "input", None),
            model=model,
            methods=methods,
            d=getattr(ns, "d", 1),
            keep=keep,
            cdf=CdfKind.from_string(getattr(ns, "cdf", "smoothed")),
            kernel=KernelFamily.from_string(getattr(ns, "kernel", "gaussian")),
            bandwidth=getattr(ns, "bandwidth", None),
            restarts=getattr(ns, "restarts", 10),
            folds=getattr(ns, "folds", 10),
            repetitions=getattr(ns, "reps", DEFAULT_REPETITIONS),
            seed=ns.seed,
            label=ns.label,
            output_path=ns.out,
            output_format=OutputFormat.from_string(
                getattr(ns, "format", "csv")),
        )

    @property
    def mv_config(self):
        if self.cdf == CdfKind.step:
            return MvConfig.step()
        return MvConfig.smoothed(self.kernel, self.bandwidth)

    @property
    def optimizer_config(self):
        return OptimizerConfig(restarts=self.restarts, d=self.d)

    def echo(self):
        """ JSON friendly summary of the settings, stored in outputs."""
        data = {
            "d": self.d,
            "keep": self.keep,
            "cdf": self.cdf.value,
            "kernel": self.kernel.value,
            "bandwidth": self.bandwidth,
            "restarts": self.restarts,
            "seed": self.seed,
        }
        if self.model is not None:
            data["model"] = {
                "model": self.model.model.value, "n": self.model.n,
                "p": self.model.p, "seed": self.model.seed,
            }
        else:
            data["input"] = self.input_path
        if self.command == "cv":
            data["methods"] = [m.name for m in self.methods]
            data["folds"] = self.folds
            data["repetitions"] = self.repetitions
        return data

    def load_data(self):
        if self.model is not None:
            return self.model.generate()
        if self.input_path is None:
            raise InvalidConfiguration("An input file or --model is required")
        return load_csv(self.input_path, self.label)


@contextlib.contextmanager
def _output(path):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "wt", encoding="utf-8", newline="") as fp:
            yield fp


def simulate(config):
    if config.model is None:
        raise InvalidConfiguration("simulate requires --model, --n and --p")
    data = config.model.generate()
    with _output(config.output_path) as fp:
        write_csv(data, fp, label=config.label)


def fit(config):
    data = config.load_data()
    rng = RngStream(config.seed).child(Purpose.optimizer)
    pipeline = fit_reduction(
        data, config.keep, True, config.mv_config,
        config.optimizer_config, rng)
    fitted = FittedBasis.from_pipeline(pipeline, config.d, config.echo())
    with _output(config.output_path) as fp:
        fitted.dump(fp)


def cv(config):
    if len(config.methods) == 0:
        raise InvalidConfiguration("At least one method is required")
    source = config.model if config.model is not None else config.load_data()
    plan = CvPlan(config.folds, True, config.seed)
    reports = run_experiment(
        source, list(config.methods), plan, config.repetitions,
        config.seed, config.mv_config, config.optimizer_config)
    with _output(config.output_path) as fp:
        write_report(reports, fp, config.output_format, config.echo())


def screen(config):
    if config.keep is None:
        raise InvalidConfiguration("screen requires --keep")
    data, names = load_csv_with_names(config.input_path, config.label)
    columns = screen_by_mv(data, config.keep)
    values = marginal_mv(data)
    rows = [
        ScreeningRow(rank + 1, j, names[j], values[j])
        for rank, j in enumerate(columns)
    ]
    with _output(config.output_path) as fp:
        write_screening(rows, fp, config.output_format)


_COMMANDS = {
    "simulate": simulate,
    "fit": fit,
    "cv": cv,
    "screen": screen,
}


def _add_common(parser):
    parser.add_argument(
        "--seed", type=int, default=0,
        help="Seed of every random draw (default: %(default)s)")
    parser.add_argument(
        "--label", default="y",
        help="Name of the label column (default: %(default)s)")
    parser.add_argument("--out", help="Output file (default: stdout)")
    parser.add_argument(
        "-v", "--verbose", action="count", default=0,
        help="Log progress on stderr (-vv for debug output)")


def _add_model(parser):
    parser.add_argument(
        "--model", help="Simulation model: I, II, III or IV")
    parser.add_argument("--n", type=int, help="Simulated sample size")
    parser.add_argument("--p", type=int, help="Simulated dimension")


def _add_mmv(parser):
    parser.add_argument(
        "--d", type=int, default=1,
        help="Number of MMV directions (default: %(default)s)")
    parser.add_argument(
        "--keep", type=int,
        help="Keep this many predictors by marginal MV screening first")
    parser.add_argument(
        "--cdf", choices=[k.value for k in CdfKind], default="smoothed",
        help="CDF estimator used by MMV; extracting directions requires "
             "smoothed (default: %(default)s)")
    parser.add_argument(
        "--kernel", choices=[k.value for k in KernelFamily],
        default="gaussian", help="Smoothing kernel (default: %(default)s)")
    parser.add_argument(
        "--bandwidth", type=float,
        help="Fixed bandwidth (default: 3 sd(scores) n^(-1/3))")
    parser.add_argument(
        "--restarts", type=int, default=10,
        help="Starting points per direction (default: %(default)s)")


def _add_format(parser):
    parser.add_argument(
        "--format", choices=[f.value for f in OutputFormat], default="csv",
        help="Output format (default: %(default)s)")


def _configure_logging(verbosity):
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbosity, logging.DEBUG)
    logging.basicConfig(
        level=level, stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s")


def main(argv=None):
    if argv is None:
        argv = sys.argv[1:]

    p = argparse.ArgumentParser(
        description="description: maximum mean variance dimension "
                    "reduction and classification experiments."
    )
    subparsers = p.add_subparsers(dest="command")

    simulate_p = subparsers.add_parser(
        "simulate", help="Generate a simulation model dataset as CSV")
    _add_model(simulate_p)
    _add_common(simulate_p)

    fit_p = subparsers.add_parser(
        "fit", help="Extract MMV directions and write them as JSON")
    fit_p.add_argument("input", nargs="?", help="CSV dataset")
    _add_model(fit_p)
    _add_mmv(fit_p)
    _add_common(fit_p)

    cv_p = subparsers.add_parser(
        "cv", help="Cross-validated classification errors")
    cv_p.add_argument("input", nargs="?", help="CSV dataset")
    _add_model(cv_p)
    _add_mmv(cv_p)
    cv_p.add_argument(
        "--methods", default=DEFAULT_METHODS,
        help="Comma separated methods, e.g. mmv+lda,lda,mmv+knn "
             "(default: %(default)s)")
    cv_p.add_argument(
        "--k", type=int, default=DEFAULT_K,
        help="Neighbours used by k-NN (default: %(default)s)")
    cv_p.add_argument(
        "--folds", type=int, default=10,
        help="Cross-validation folds (default: %(default)s)")
    cv_p.add_argument(
        "--reps", type=int, default=DEFAULT_REPETITIONS,
        help="Repetitions (default: %(default)s)")
    _add_format(cv_p)
    _add_common(cv_p)

    screen_p = subparsers.add_parser(
        "screen", help="Rank predictors by marginal MV index")
    screen_p.add_argument("input", help="CSV dataset")
    screen_p.add_argument(
        "--keep", type=int, required=True,
        help="Number of predictors to report")
    _add_format(screen_p)
    _add_common(screen_p)

    ns = p.parse_args(argv)
    if ns.command is None:
        p.print_help()
        return

    _configure_logging(ns.verbose)
    try:
        config = RunConfig.from_namespace(ns)
        logger.debug("Configuration: %r", asdict(config, recurse=False))
        _COMMANDS[ns.command](config)
    except MmvError as e:
        print("error: {0}".format(e), file=sys.stderr)
        sys.exit(1)
    except OSError as e:
        print("error: {0}".format(e), file=sys.stderr)
        sys.exit(1)
