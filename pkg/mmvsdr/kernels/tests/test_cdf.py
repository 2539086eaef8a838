import unittest

import numpy as np
import numpy.testing as npt

from parameterized import parameterized

from mmvsdr.errors import EmptyClass, EmptySample, InvalidConfiguration
from .._kernel import KernelFamily, KernelSpec
from ..cdf import (
    CdfKind, CdfMode, per_class_cdfs, smoothed_cdf, step_cdf
)


GAUSSIAN = KernelFamily.gaussian
EPANECHNIKOV = KernelFamily.epanechnikov


class TestStepCdf(unittest.TestCase):
    @parameterized.expand([
        ("middle", (1, 2, 3, 4), 2.0, 0.5),
        ("below", (1, 2, 3, 4), 0.5, 0.0),
        ("at_max", (1, 2, 3, 4), 4.0, 1.0),
        ("above", (1, 2, 3, 4), 10.0, 1.0),
        ("ties", (1, 1, 2), 1.0, 2.0 / 3.0),
    ])
    def test_values(self, name, samples, z, r_value):
        # When
        value = step_cdf(samples, z)

        # Then
        self.assertAlmostEqual(value, r_value, places=15)

    def test_vectorized(self):
        # When
        values = step_cdf([1.0, 2.0, 3.0, 4.0], [0.0, 2.0, 3.5])

        # Then
        npt.assert_array_equal(values, [0.0, 0.5, 0.75])

    def test_empty(self):
        # When/Then
        with self.assertRaises(EmptySample):
            step_cdf([], 0.0)


class TestSmoothedCdf(unittest.TestCase):
    @parameterized.expand([(0.1,), (1.0,), (25.0,)])
    def test_symmetry(self, bandwidth):
        # Given
        kernel = KernelSpec(GAUSSIAN, bandwidth)

        # When/Then
        self.assertAlmostEqual(smoothed_cdf([0.0], 0.0, kernel), 0.5)

    @parameterized.expand([(GAUSSIAN,), (EPANECHNIKOV,)])
    def test_limits(self, family):
        # Given
        kernel = KernelSpec(family, 0.7)
        samples = [1.0, 2.0, 3.0, 4.0]

        # When/Then
        self.assertAlmostEqual(smoothed_cdf(samples, 1e6, kernel), 1.0)
        self.assertAlmostEqual(smoothed_cdf(samples, -1e6, kernel), 0.0)

    @parameterized.expand([(GAUSSIAN,), (EPANECHNIKOV,)])
    def test_nondecreasing(self, family):
        # Given
        generator = np.random.default_rng(3)
        samples = generator.standard_normal(50)
        grid = np.sort(generator.uniform(-4, 4, size=500))
        kernel = KernelSpec(family, 0.3)

        # When
        values = smoothed_cdf(samples, grid, kernel)

        # Then
        self.assertTrue(np.all(np.diff(values) >= 0))
        self.assertTrue(np.all((values >= 0) & (values <= 1)))

    def test_small_bandwidth_limit(self):
        # Given
        samples = [1.0, 2.0, 3.0, 4.0]
        kernel = KernelSpec(GAUSSIAN, 1e-6)

        # When
        value = smoothed_cdf(samples, 2.5, kernel)

        # Then
        self.assertAlmostEqual(value, step_cdf(samples, 2.5), delta=1e-6)

    def test_small_bandwidth_random_points(self):
        # Given
        generator = np.random.default_rng(5)
        samples = np.sort(generator.standard_normal(30))
        midpoints = (samples[1:] + samples[:-1]) / 2.0
        kernel = KernelSpec(GAUSSIAN, 1e-6 * np.ptp(samples))

        # When
        smoothed = smoothed_cdf(samples, midpoints, kernel)

        # Then
        npt.assert_allclose(smoothed, step_cdf(samples, midpoints), atol=1e-6)

    def test_epanechnikov_closed_form(self):
        # Given
        kernel = KernelSpec(EPANECHNIKOV, 2.0)

        # When
        value = smoothed_cdf([0.0], 1.0, kernel)

        # Then
        self.assertAlmostEqual(value, 0.5 + 0.75 * 0.5 - 0.25 * 0.125)

    def test_empty(self):
        # When/Then
        with self.assertRaises(EmptySample):
            smoothed_cdf([], 0.0, KernelSpec(GAUSSIAN, 1.0))


class TestPerClassCdfs(unittest.TestCase):
    def test_step(self):
        # When
        cdf, class_cdfs = per_class_cdfs(
            [1, 2, 3, 4], [0, 0, 1, 1], 2.0, CdfMode.step())

        # Then
        self.assertEqual(cdf, 0.5)
        npt.assert_array_equal(class_cdfs, [1.0, 0.0])

    def test_constant_scores(self):
        # When
        cdf, class_cdfs = per_class_cdfs(
            [3.0, 3.0, 3.0], [0, 1, 0], 3.0, CdfMode.step())

        # Then
        self.assertEqual(cdf, 1.0)
        npt.assert_array_equal(class_cdfs, [1.0, 1.0])

    @parameterized.expand([
        ("step", CdfMode.step(), 1e-12),
        ("smoothed", CdfMode.smoothed(KernelSpec(GAUSSIAN, 0.4)), 1e-10),
    ])
    def test_mixture_identity(self, name, mode, tolerance):
        # Given
        generator = np.random.default_rng(11)
        scores = generator.standard_normal(40)
        labels = generator.integers(0, 3, size=40)
        labels[:3] = [0, 1, 2]
        proportions = np.bincount(labels) / 40.0

        for z in generator.uniform(-2, 2, size=10):
            # When
            cdf, class_cdfs = per_class_cdfs(scores, labels, z, mode)

            # Then
            self.assertAlmostEqual(
                proportions @ class_cdfs, cdf, delta=tolerance)

    def test_empty_class(self):
        # When/Then
        with self.assertRaises(EmptyClass):
            per_class_cdfs(
                [1.0, 2.0], [0, 2], 1.0, CdfMode.step(), n_classes=3)


class TestCdfMode(unittest.TestCase):
    def test_from_string(self):
        # When/Then
        self.assertEqual(CdfKind.from_string("Step"), CdfKind.step)
        self.assertEqual(CdfKind.from_string("smoothed"), CdfKind.smoothed)
        with self.assertRaises(InvalidConfiguration):
            CdfKind.from_string("spline")

    def test_smoothed_requires_kernel(self):
        # When/Then
        with self.assertRaises(InvalidConfiguration):
            CdfMode(CdfKind.smoothed)
