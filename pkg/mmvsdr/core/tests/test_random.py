import unittest

import numpy.testing as npt

from .._random import Purpose, RngStream


class TestRngStream(unittest.TestCase):
    def test_same_stream_same_draws(self):
        # Given
        left = RngStream(7).child(Purpose.folds, 3)
        right = RngStream(7).child(Purpose.folds, 3)

        # When/Then
        npt.assert_array_equal(
            left.generator().standard_normal(5),
            right.generator().standard_normal(5))

    def test_purpose_is_its_value(self):
        # When/Then
        self.assertEqual(
            RngStream(7).child(Purpose.folds), RngStream(7).child(2))

    def test_streams_differ(self):
        # Given
        draws = [
            RngStream(7).child(Purpose.folds, 0).generator().random(),
            RngStream(7).child(Purpose.folds, 1).generator().random(),
            RngStream(7).child(Purpose.optimizer, 0).generator().random(),
            RngStream(8).child(Purpose.folds, 0).generator().random(),
        ]

        # When/Then
        self.assertEqual(len(set(draws)), len(draws))

    def test_order_independence(self):
        # Given
        root = RngStream(11)

        # When
        first = root.child(2).generator().random()
        root.child(1).generator().random()
        again = root.child(2).generator().random()

        # Then
        self.assertEqual(first, again)

    def test_negative_seed(self):
        # When/Then
        with self.assertRaises(ValueError):
            RngStream(-1)
