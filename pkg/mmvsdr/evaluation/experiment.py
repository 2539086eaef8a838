import logging

import numpy as np

from attr import attr, attributes
from attr.validators import instance_of

from mmvsdr.core import Dataset, Purpose, RngStream
from mmvsdr.errors import InvalidConfiguration, InvalidDataset
from mmvsdr.index import MvConfig
from mmvsdr.optimize import OptimizerConfig
from mmvsdr.simulations import ModelSpec
from mmvsdr.utils import ordered_map
from .cv import _misclassified


logger = logging.getLogger(__name__)

DEFAULT_REPETITIONS = 50

_STATS_TOLERANCE = 1e-12


def _summary(errors):
    errors = np.asarray(errors, dtype=float)
    mean = float(np.mean(errors))
    sd = float(np.std(errors, ddof=1)) if len(errors) > 1 else 0.0
    return mean, sd


@attributes(frozen=True)
class ExperimentReport(object):
    """ Cross-validated errors of one method over repeated experiments.
    """
    method = attr(validator=instance_of(str))
    errors = attr(validator=instance_of(tuple))
    "Misclassification rate of each repetition, in [0, 1]."

    mean = attr(converter=float)
    sd = attr(converter=float)
    "Sample standard deviation of the errors, 0 for a single repetition."

    def __attrs_post_init__(self):
        if len(self.errors) < 1:
            raise InvalidDataset("A report needs at least one repetition")
        for error in self.errors:
            if not 0.0 <= error <= 1.0:
                raise InvalidDataset(
                    "Errors must lie in [0, 1], got {0!r}".format(error))
        mean, sd = _summary(self.errors)
        if abs(mean - self.mean) > _STATS_TOLERANCE \
                or abs(sd - self.sd) > _STATS_TOLERANCE:
            raise InvalidDataset(
                "Summary statistics of {0!r} do not match its per-repetition "
                "errors".format(self.method))

    @classmethod
    def from_errors(cls, method, errors):
        errors = tuple(float(e) for e in errors)
        mean, sd = _summary(errors)
        return cls(method, errors, mean, sd)

    @property
    def repetitions(self):
        return len(self.errors)

    @property
    def single_repetition(self):
        """ True when sd is 0 because there is only one repetition."""
        return self.repetitions == 1


def run_experiment(source, methods, plan, repetitions=DEFAULT_REPETITIONS,
                   seed=None, mv_config=None, opt=None):
    """ Repeat a cross-validation experiment and summarize each method.

    For a simulation model, each repetition draws a fresh dataset; for a
    fixed dataset, each repetition draws a fresh fold assignment. Within a
    repetition all methods see the same data and folds. Results only
    depend on ``seed``, whatever the number of worker threads.

    Parameters
    ----------
    source: ModelSpec or Dataset
    methods: list
        MethodSpec instances.
    plan: CvPlan
    repetitions: int
    seed: int, None
        Defaults to ``plan.seed``.
    mv_config: MvConfig, None
    opt: OptimizerConfig, None

    Returns
    -------
    reports: list
        One ExperimentReport per method, in the order of ``methods``.
    """
    if repetitions < 1:
        raise InvalidConfiguration(
            "repetitions must be >= 1, got {0!r}".format(repetitions))
    if len(methods) == 0:
        raise InvalidConfiguration("At least one method is required")
    if not isinstance(source, (ModelSpec, Dataset)):
        raise InvalidConfiguration(
            "Expected a ModelSpec or a Dataset, got {0!r}".format(source))
    if mv_config is None:
        mv_config = MvConfig.smoothed()
    if opt is None:
        opt = OptimizerConfig()
    root = RngStream(plan.seed if seed is None else seed)

    def run(repetition):
        if isinstance(source, ModelSpec):
            data = source.generate(root.child(Purpose.simulation, repetition))
        else:
            data = source
        totals = _misclassified(
            data, methods, plan, root.child(Purpose.repetition, repetition),
            mv_config, opt)
        errors = totals / float(data.n)
        logger.info(
            "Repetition %d/%d: %s", repetition + 1, repetitions,
            ", ".join("{0}={1:.4f}".format(m.name, e)
                      for m, e in zip(methods, errors)))
        return errors

    errors = np.array(ordered_map(run, range(repetitions)))
    return [
        ExperimentReport.from_errors(method.name, errors[:, i])
        for i, method in enumerate(methods)
    ]
