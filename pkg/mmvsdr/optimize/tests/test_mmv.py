import logging
import unittest

import numpy as np
import numpy.testing as npt
import testfixtures

from mmvsdr.core import RngStream
from mmvsdr.errors import TooManyDirections
from mmvsdr.index import MvConfig
from mmvsdr.simulations import beta_1, gen_model_i, gen_model_ii
from mmvsdr.utils.testing import abs_cosine
from ..ascent import OptimizerConfig
from ..mmv import fit_mmv


SMOOTHED = MvConfig.smoothed()


class TestFitMmv(unittest.TestCase):
    def test_no_direction(self):
        # Given
        data = gen_model_ii(50, 5, RngStream(0))

        # When
        result = fit_mmv(
            data, SMOOTHED, OptimizerConfig(d=0), RngStream(1))

        # Then
        self.assertEqual(result.effective_d, 0)
        self.assertEqual(result.basis.p, 5)
        self.assertEqual(result.diagnostics, ())

    def test_identity_covariance_recovers_index(self):
        # Given
        data = gen_model_ii(400, 10, RngStream(4), covariance=np.eye(10))

        # When
        result = fit_mmv(
            data, SMOOTHED, OptimizerConfig(restarts=3), RngStream(5))

        # Then
        self.assertEqual(result.effective_d, 1)
        self.assertGreaterEqual(
            abs_cosine(result.basis.directions[0], beta_1(10)), 0.9)

    def test_second_direction_is_weak(self):
        # Given
        data = gen_model_i(400, 10, RngStream(6))
        opt = OptimizerConfig(restarts=3, d=2, mv_floor=0.0)

        # When
        result = fit_mmv(data, SMOOTHED, opt, RngStream(7))

        # Then
        first, second = result.basis.mv_values
        self.assertEqual(result.effective_d, 2)
        self.assertLess(second / first, 0.3)
        self.assertLessEqual(
            abs(result.basis.directions[0] @ result.basis.directions[1]),
            1e-6)

    def test_floor_ends_extraction(self):
        # Given
        data = gen_model_i(80, 6, RngStream(6))
        opt = OptimizerConfig(restarts=2, d=3, mv_floor=0.99)

        # When
        result = fit_mmv(data, SMOOTHED, opt, RngStream(7))

        # Then
        self.assertEqual(result.requested_d, 3)
        self.assertEqual(result.effective_d, 1)
        self.assertEqual(len(result.diagnostics), 1)

    def test_weak_first_direction_warns(self):
        # Given
        data = gen_model_i(80, 6, RngStream(6))
        opt = OptimizerConfig(restarts=2, d=1, mv_floor=0.99)

        # When
        with testfixtures.LogCapture(level=logging.WARNING) as logs:
            result = fit_mmv(data, SMOOTHED, opt, RngStream(7))

        # Then
        self.assertEqual(result.effective_d, 1)
        self.assertEqual(len(logs.records), 1)
        record = logs.records[0]
        self.assertEqual(record.name, "mmvsdr.optimize.mmv")
        self.assertIn("mv_floor = 0.99", record.getMessage())

    def test_strong_first_direction_is_silent(self):
        # Given
        data = gen_model_i(80, 6, RngStream(6))
        opt = OptimizerConfig(restarts=2, d=1)

        # When
        with testfixtures.LogCapture(level=logging.WARNING) as logs:
            fit_mmv(data, SMOOTHED, opt, RngStream(7))

        # Then
        logs.check()

    def test_too_many_directions(self):
        # Given
        data = gen_model_ii(50, 4, RngStream(0))

        # When/Then
        with self.assertRaises(TooManyDirections):
            fit_mmv(data, SMOOTHED, OptimizerConfig(d=5), RngStream(1))

    def test_full_dimension(self):
        # Given
        data = gen_model_ii(60, 4, RngStream(2))
        opt = OptimizerConfig(restarts=2, d=4, mv_floor=0.0)

        # When
        result = fit_mmv(data, SMOOTHED, opt, RngStream(3))

        # Then
        matrix = result.basis.matrix
        npt.assert_allclose(matrix.T @ matrix, np.eye(4), atol=1e-6)

    def test_deterministic(self):
        # Given
        data = gen_model_i(80, 8, RngStream(1))
        opt = OptimizerConfig(restarts=3, d=2, mv_floor=0.0)

        # When
        first = fit_mmv(data, SMOOTHED, opt, RngStream(11))
        second = fit_mmv(data, SMOOTHED, opt, RngStream(11))

        # Then
        npt.assert_array_equal(first.basis.matrix, second.basis.matrix)
        self.assertEqual(first.basis.mv_values, second.basis.mv_values)
