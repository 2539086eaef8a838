import numpy as np

from mmvsdr.errors import DegenerateScores, EmptySample


#: Exponent of n in the bandwidth rule. Any exponent in (-1/2, -1/4)
#: keeps n h^4 -> 0 while n h^2 -> infinity.
BANDWIDTH_EXPONENT = -1.0 / 3.0
BANDWIDTH_FACTOR = 3.0


def bandwidth_rule(scores):
    """ Rule of thumb bandwidth h = 3 sd(scores) n^(-1/3), sd being the
    sample standard deviation of the projected scores.
    """
    scores = np.asarray(scores, dtype=float).ravel()
    n = len(scores)
    if n < 2:
        raise EmptySample(
            "Bandwidth rule needs at least 2 scores, got {0}".format(n))
    if np.ptp(scores) == 0:
        raise DegenerateScores(
            "Cannot derive a bandwidth from {0} identical scores".format(n))
    sd = np.std(scores, ddof=1)
    return BANDWIDTH_FACTOR * sd * n ** BANDWIDTH_EXPONENT
