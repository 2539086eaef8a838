import unittest

import numpy as np

from parameterized import parameterized

from mmvsdr.core import RngStream
from mmvsdr.errors import InvalidModel, ZeroDirection
from mmvsdr.simulations import ar_covariance, gen_gaussian_two_class
from ..config import MvConfig
from ..empirical import mv_of_direction
from ..gaussian import GaussianTwoClassModel, mv_population_gaussian


class TestGaussianTwoClassModel(unittest.TestCase):
    @parameterized.expand([
        ("asymmetric", [1.0, 0.0], [[1.0, 0.5], [0.0, 1.0]], 0.5),
        ("indefinite", [1.0, 0.0], [[1.0, 2.0], [2.0, 1.0]], 0.5),
        ("p1_zero", [1.0, 0.0], np.eye(2), 0.0),
        ("p1_one", [1.0, 0.0], np.eye(2), 1.0),
    ])
    def test_invalid(self, name, mu, sigma, p1):
        # When/Then
        with self.assertRaises(InvalidModel):
            GaussianTwoClassModel(mu, sigma, p1)

    def test_optimal_direction(self):
        # Given
        sigma = ar_covariance(3, 0.5)
        mu = np.array([1.0, 0.5, 0.0])
        model = GaussianTwoClassModel(mu, sigma, 0.5)

        # When
        direction = model.optimal_direction()

        # Then
        r_direction = np.linalg.solve(sigma, mu)
        r_direction /= np.linalg.norm(r_direction)
        np.testing.assert_allclose(direction, r_direction, atol=1e-12)


class TestMvPopulationGaussian(unittest.TestCase):
    def setUp(self):
        self.model = GaussianTwoClassModel(
            [1.0, 0.0, 0.0], np.eye(3), 0.5)

    def test_orthogonal_to_mean(self):
        # When
        value = mv_population_gaussian([0.0, 1.0, -2.0], self.model)

        # Then
        self.assertAlmostEqual(value, 0.0, places=12)

    def test_increasing_in_separation(self):
        # Given
        model = GaussianTwoClassModel([1.0, 0.0], np.eye(2), 0.3)
        angles = np.linspace(np.pi / 2, 0.0, 12)

        # When
        values = [
            mv_population_gaussian([np.cos(a), np.sin(a)], model)
            for a in angles
        ]

        # Then
        self.assertTrue(np.all(np.diff(values) > 0))

    def test_depends_on_separation_only(self):
        # Given
        model = GaussianTwoClassModel(
            [1.0, 0.5, 0.0], ar_covariance(3, 0.5), 0.4)
        beta = np.array([0.3, 0.9, -0.2])

        # When
        value = mv_population_gaussian(beta, model)

        # Then
        self.assertAlmostEqual(
            mv_population_gaussian(5.0 * beta, model), value, places=12)
        self.assertAlmostEqual(
            mv_population_gaussian(-beta, model), value, places=12)

    def test_full_separation(self):
        # Given
        model = GaussianTwoClassModel([40.0, 0.0], np.eye(2), 0.25)

        # When
        value = mv_population_gaussian([1.0, 0.0], model)

        # Then
        self.assertAlmostEqual(value, 0.25 * 0.75 / 3.0, places=8)

    def test_zero_direction(self):
        # When/Then
        with self.assertRaises(ZeroDirection):
            mv_population_gaussian(np.zeros(3), self.model)

    def test_monte_carlo(self):
        # Given
        beta = np.array([1.0, 0.0, 0.0])
        r_value = mv_population_gaussian(beta, self.model)

        for seed in range(5):
            data = gen_gaussian_two_class(self.model, 5000, RngStream(seed))

            # When
            value = mv_of_direction(data, beta, MvConfig.step())

            # Then
            self.assertAlmostEqual(value, r_value, delta=0.01)
