import logging

from attr import attr, attributes
from attr.validators import instance_of

from mmvsdr.core import DirectionBasis, Purpose
from mmvsdr.errors import TooManyDirections
from .ascent import maximize_direction


logger = logging.getLogger(__name__)


@attributes(frozen=True, eq=False)
class ExtractionResult(object):
    basis = attr(validator=instance_of(DirectionBasis))
    diagnostics = attr(validator=instance_of(tuple))
    "One DirectionDiagnostics per direction kept in the basis."

    requested_d = attr(validator=instance_of(int))

    @property
    def effective_d(self):
        return self.basis.d


def fit_mmv(data, mv_config, opt, rng):
    """ Sequentially extract up to ``opt.d`` MMV directions.

    Direction k maximizes the MV index over unit vectors orthogonal to the
    k - 1 directions before it. Extraction stops early when a direction
    other than the first achieves an MV index below ``opt.mv_floor``; that
    direction is discarded and the number of directions kept is the
    effective dimension. The first direction is always kept, with a
    warning when it falls below the floor.

    Parameters
    ----------
    data: Dataset
    mv_config: MvConfig
        Smoothed configuration used by the search.
    opt: OptimizerConfig
    rng: RngStream
    """
    if opt.d > data.p:
        raise TooManyDirections(opt.d, data.p)

    directions = []
    values = []
    diagnostics = []
    for k in range(opt.d):
        fit = maximize_direction(
            data, directions, mv_config, opt, rng.child(Purpose.optimizer, k))
        if fit.value < opt.mv_floor:
            if k > 0:
                logger.info(
                    "Direction %d reaches MV %.3g < %.3g: effective d = %d",
                    k + 1, fit.value, opt.mv_floor, k)
                break
            logger.warning(
                "First direction only reaches MV %.3g < mv_floor = %.3g, "
                "it is kept but carries little class information",
                fit.value, opt.mv_floor)
        logger.info("Direction %d: MV %.6g (restart %d, %d iterations)",
                    k + 1, fit.value, fit.diagnostics.restart_index,
                    fit.diagnostics.iterations)
        directions.append(fit.direction)
        values.append(fit.value)
        diagnostics.append(fit.diagnostics)

    basis = DirectionBasis.from_directions(directions, values, p=data.p)
    return ExtractionResult(basis, tuple(diagnostics), opt.d)
