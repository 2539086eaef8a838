import os
import unittest

import numpy as np

from mmvsdr.core import validate_dataset


SLOW_TESTS_ENVIRONMENT_VARIABLE = "MMV_SLOW_TESTS"


def slow(test_item):
    """ Skip the decorated test (or test case) unless MMV_SLOW_TESTS=1.

    Used for the Monte-Carlo runs comparing methods on the simulation models, which
    take minutes.
    """
    enabled = os.environ.get(SLOW_TESTS_ENVIRONMENT_VARIABLE, "") == "1"
    return unittest.skipUnless(
        enabled, "set {0}=1 to run".format(SLOW_TESTS_ENVIRONMENT_VARIABLE)
    )(test_item)


def worked_example():
    """ The four-point example: scores (1, 2, 3, 4) labelled (0, 0, 1, 1),
    whose step-mode MV index is 3/32."""
    return validate_dataset([[1.0], [2.0], [3.0], [4.0]], [0, 0, 1, 1])


def direct_mv(scores, labels):
    """ Step-mode MV index by literal double summation, for small samples.
    """
    scores = list(scores)
    labels = list(labels)
    n = len(scores)
    classes = sorted(set(labels))
    total = 0.0
    for r in classes:
        members = [z for z, y in zip(scores, labels) if y == r]
        p_r = len(members) / float(n)
        for z in scores:
            cdf = sum(1 for v in scores if v <= z) / float(n)
            class_cdf = sum(1 for v in members if v <= z) / float(len(members))
            total += p_r * (cdf - class_cdf) ** 2
    return total / n


def abs_cosine(u, v):
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    return abs(u @ v) / (np.linalg.norm(u) * np.linalg.norm(v))
