import unittest

import numpy as np
import numpy.testing as npt

from mmvsdr.errors import InfeasibleSubspace, RankDeficientPrev
from ..subspace import null_space_basis


class TestNullSpaceBasis(unittest.TestCase):
    def test_no_constraint(self):
        # When
        basis = null_space_basis([], 4)

        # Then
        npt.assert_array_equal(basis, np.eye(4))

    def test_coordinate(self):
        # When
        basis = null_space_basis([np.array([1.0, 0.0, 0.0])], 3)

        # Then
        self.assertEqual(basis.shape, (3, 2))
        npt.assert_allclose(basis[0], 0.0, atol=1e-12)
        npt.assert_allclose(basis.T @ basis, np.eye(2), atol=1e-12)

    def test_random_orthonormal(self):
        # Given
        generator = np.random.default_rng(0)
        prev, _ = np.linalg.qr(generator.standard_normal((10, 3)))

        # When
        basis = null_space_basis(list(prev.T), 10)

        # Then
        self.assertEqual(basis.shape, (10, 7))
        npt.assert_allclose(basis.T @ basis, np.eye(7), atol=1e-10)
        npt.assert_allclose(prev.T @ basis, 0.0, atol=1e-10)

    def test_rank_deficient(self):
        # Given
        v = np.array([1.0, 0.0, 0.0])

        # When/Then
        with self.assertRaises(RankDeficientPrev):
            null_space_basis([v, v], 3)

    def test_infeasible(self):
        # When/Then
        with self.assertRaises(InfeasibleSubspace):
            null_space_basis([np.array([1.0, 0.0]), np.array([0.0, 1.0])], 2)
