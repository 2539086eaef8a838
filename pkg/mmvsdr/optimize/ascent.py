import logging

import numpy as np

from attr import attr, attributes
from attr.validators import instance_of

from mmvsdr.core import Purpose
from mmvsdr.errors import InvalidConfiguration, StepModeGradient
from mmvsdr.index.empirical import (
    _checked_labels, _smoothed_value_and_gradient
)
from mmvsdr.utils import ordered_map
from .seeding import initial_directions
from .subspace import null_space_basis


logger = logging.getLogger(__name__)

#: Number of halvings tried by the line search before declaring that no
#: step increases the objective.
MAX_BACKTRACKS = 40


def _positive(instance, attribute, value):
    if not value > 0:
        raise InvalidConfiguration(
            "{0} must be > 0, got {1!r}".format(attribute.name, value))


def _non_negative(instance, attribute, value):
    if not value >= 0:
        raise InvalidConfiguration(
            "{0} must be >= 0, got {1!r}".format(attribute.name, value))


def _in_unit_interval(instance, attribute, value):
    if not 0 < value < 1:
        raise InvalidConfiguration(
            "{0} must lie in (0, 1), got {1!r}".format(attribute.name, value))


@attributes(frozen=True)
class OptimizerConfig(object):
    restarts = attr(default=10, validator=[instance_of(int), _positive])
    "Number of starting points per direction (moment seeds, then random)."

    max_iters = attr(default=200, validator=[instance_of(int), _positive])

    step_init = attr(default=1.0, converter=float, validator=_positive)
    "Largest step tried by the backtracking line search."

    step_shrink = attr(default=0.5, converter=float,
                       validator=_in_unit_interval)

    grad_tol = attr(default=1e-5, converter=float, validator=_positive)
    "Stop when the projected gradient norm falls below this value."

    value_tol = attr(default=1e-8, converter=float, validator=_positive)
    "Stop when an iteration improves the MV index by less than this value."

    d = attr(default=1, validator=[instance_of(int), _non_negative])
    "Number of directions requested."

    mv_floor = attr(default=1e-3, converter=float, validator=_non_negative)
    """Directions after the first whose MV index falls below this value are
    considered noise and end the extraction. A first direction below it is
    kept with a warning."""


@attributes(frozen=True)
class DirectionDiagnostics(object):
    restart_index = attr(validator=instance_of(int))
    "Index of the winning restart (0 is the moment seed)."

    iterations = attr(validator=instance_of(int))
    gradient_norm = attr(validator=instance_of(float))
    "Projected gradient norm at the returned direction."

    bandwidth = attr()
    "Bandwidth used during this direction's search."

    ascended = attr(validator=instance_of(bool))
    "False when no restart improved over its starting value."

    start_values = attr(validator=instance_of(tuple))
    "MV index at each restart's starting point."

    history = attr(validator=instance_of(tuple))
    "MV index after each accepted iteration of the winning restart."


@attributes(frozen=True, eq=False)
class DirectionFit(object):
    direction = attr()
    value = attr(validator=instance_of(float))
    diagnostics = attr(validator=instance_of(DirectionDiagnostics))


@attributes(frozen=True, eq=False)
class _RestartResult(object):
    coordinates = attr()
    value = attr()
    start_value = attr()
    iterations = attr()
    gradient_norm = attr()
    history = attr()


def _tangent(gradient, a):
    return gradient - (gradient @ a) * a


def _ascend(evaluate, start, opt):
    """ Projected gradient ascent on the unit sphere from ``start``.

    ``evaluate`` maps a point to its objective value and gradient.
    """
    a = start / np.linalg.norm(start)
    value, gradient = evaluate(a)
    start_value = value
    history = [value]

    iterations = 0
    for iterations in range(1, opt.max_iters + 1):
        tangent = _tangent(gradient, a)
        if np.linalg.norm(tangent) < opt.grad_tol:
            break

        step = opt.step_init
        candidate = None
        for _ in range(MAX_BACKTRACKS):
            trial = a + step * tangent
            trial /= np.linalg.norm(trial)
            trial_value, trial_gradient = evaluate(trial)
            if trial_value > value:
                candidate = trial
                break
            step *= opt.step_shrink

        if candidate is None:
            break
        improvement = trial_value - value
        a, value, gradient = candidate, trial_value, trial_gradient
        history.append(value)
        if improvement < opt.value_tol:
            break

    gradient_norm = float(np.linalg.norm(_tangent(gradient, a)))
    return _RestartResult(
        a, value, start_value, iterations, gradient_norm, tuple(history))


def _canonical_sign(direction):
    if direction[np.argmax(np.abs(direction))] < 0:
        return -direction
    return direction


def maximize_direction(data, prev, mv_config, opt, rng):
    """ Unit direction maximizing the smoothed MV index of the projected
    predictors, orthogonal to ``prev``.

    The search runs in coordinates of an orthonormal basis Q of the
    orthogonal complement of ``prev``: beta = Q a with |a| = 1. Each of the
    ``opt.restarts`` starting points is improved by projected gradient
    ascent with a backtracking line search, and the best final value wins,
    ties going to the lowest restart index.

    When the configuration asks for the rule of thumb bandwidth, it is
    computed once from the scores at the moment seed, and held fixed for
    all restarts and iterations.

    Returns
    -------
    fit: DirectionFit
        Unit direction, sign normalized so that its largest magnitude
        coordinate is positive, with the achieved MV index.
    """
    if not mv_config.is_smoothed:
        raise StepModeGradient()

    basis = null_space_basis(prev, data.p)
    starts = initial_directions(
        data, prev, opt.restarts, rng.child(Purpose.seeding))
    frozen_config = mv_config.freeze(data.features @ starts[0])
    reduced = data.features @ basis
    labels, counts = _checked_labels(
        reduced[:, 0], data.labels, data.n_classes)
    mode = frozen_config.resolve(reduced[:, 0])

    def evaluate(a):
        return _smoothed_value_and_gradient(
            reduced, reduced @ a, labels, counts, mode.kernel)

    def run(index):
        result = _ascend(evaluate, basis.T @ starts[index], opt)
        logger.debug(
            "restart %d: MV %.6g -> %.6g in %d iterations", index,
            result.start_value, result.value, result.iterations)
        return result

    results = ordered_map(run, range(len(starts)))
    winner = max(range(len(results)), key=lambda i: (results[i].value, -i))
    best = results[winner]

    ascended = any(r.value > r.start_value for r in results)
    if not ascended:
        logger.warning(
            "No restart improved the MV index over its starting value "
            "(%d previous directions)", len(prev))

    direction = basis @ best.coordinates
    direction = _canonical_sign(direction / np.linalg.norm(direction))
    diagnostics = DirectionDiagnostics(
        restart_index=winner,
        iterations=best.iterations,
        gradient_norm=best.gradient_norm,
        bandwidth=mode.kernel.bandwidth,
        ascended=ascended,
        start_values=tuple(r.start_value for r in results),
        history=best.history,
    )
    return DirectionFit(direction, float(best.value), diagnostics)
