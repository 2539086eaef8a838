import unittest

import numpy as np
import numpy.testing as npt

from parameterized import parameterized

from mmvsdr.classifiers import MethodSpec, predict_many
from mmvsdr.core import Purpose, RngStream, validate_dataset
from mmvsdr.errors import InvalidConfiguration, TooManyFolds
from mmvsdr.index import MvConfig
from mmvsdr.optimize import OptimizerConfig
from mmvsdr.simulations import gen_model_i
from ..cv import CvPlan, cv_error, fit_fold, kfold_indices


FAST = OptimizerConfig(restarts=2)


class TestKfoldIndices(unittest.TestCase):
    @parameterized.expand([("stratified", True), ("plain", False)])
    def test_partition(self, name, stratified):
        # Given
        labels = np.repeat([0, 1], [22, 40])
        plan = CvPlan(10, stratified)

        # When
        folds = kfold_indices(labels, plan)

        # Then
        self.assertEqual(len(folds), 10)
        tests = np.concatenate([test for _, test in folds])
        npt.assert_array_equal(np.sort(tests), np.arange(62))
        sizes = sorted(len(test) for _, test in folds)
        self.assertEqual(sizes, [6] * 8 + [7] * 2)
        for train, test in folds:
            self.assertEqual(len(np.intersect1d(train, test)), 0)
            self.assertEqual(len(train) + len(test), 62)

    def test_stratified_shares(self):
        # Given
        labels = np.repeat([0, 1, 2], [22, 30, 13])

        # When
        folds = kfold_indices(labels, CvPlan(5))

        # Then
        for _, test in folds:
            counts = np.bincount(labels[test], minlength=3)
            self.assertTrue(np.all(
                np.abs(counts - np.array([22, 30, 13]) / 5.0) < 1.0))

    def test_deterministic(self):
        # Given
        labels = np.repeat([0, 1], 20)
        plan = CvPlan(4, seed=3)

        # When
        first = kfold_indices(labels, plan)
        second = kfold_indices(labels, plan)
        other = kfold_indices(labels, CvPlan(4, seed=4))

        # Then
        for (_, a), (_, b) in zip(first, second):
            npt.assert_array_equal(a, b)
        self.assertFalse(all(
            np.array_equal(a, b) for (_, a), (_, b) in zip(first, other)))

    def test_too_many_folds(self):
        # Given
        labels = np.repeat([0, 1], 5)

        # When/Then
        with self.assertRaises(TooManyFolds):
            kfold_indices(labels, CvPlan(10))
        with self.assertRaises(TooManyFolds):
            kfold_indices(labels, CvPlan(11, stratified=False))

    def test_invalid_plan(self):
        # When/Then
        with self.assertRaises(InvalidConfiguration):
            CvPlan(1)


class TestCvError(unittest.TestCase):
    def test_majority_baseline(self):
        # Given
        features = np.random.default_rng(0).standard_normal((20, 3))
        data = validate_dataset(features, np.repeat([0, 1], 10))
        method = MethodSpec.from_string("knn", k=18)

        # When
        error = cv_error(data, method, CvPlan(10))

        # Then
        self.assertEqual(error, 0.5)

    def test_separated_classes(self):
        # Given
        generator = np.random.default_rng(1)
        labels = np.repeat([0, 1], 30)
        features = generator.standard_normal((60, 2))
        features[:, 0] += 20.0 * labels
        data = validate_dataset(features, labels)

        # When
        error = cv_error(data, MethodSpec.from_string("knn", k=1), CvPlan(5))

        # Then
        self.assertEqual(error, 0.0)

    def test_model_i(self):
        # Given
        data = gen_model_i(100, 10, RngStream(0))

        # When
        error = cv_error(
            data, MethodSpec.from_string("mmv+lda"), CvPlan(10), opt=FAST)

        # Then
        self.assertTrue(0.02 <= error <= 0.25)

    def test_fraction_of_misclassified(self):
        # Given
        data = gen_model_i(40, 5, RngStream(2))

        # When
        error = cv_error(data, MethodSpec.from_string("lda"), CvPlan(4))

        # Then
        self.assertEqual(error * 40, round(error * 40))
        self.assertTrue(0.0 <= error <= 1.0)


class TestFitFold(unittest.TestCase):
    def test_no_leakage(self):
        # Given
        data = gen_model_i(60, 6, RngStream(7))
        train, test = kfold_indices(data.labels, CvPlan(5))[0]
        methods = [
            MethodSpec.from_string("mmv+lda"),
            MethodSpec.from_string("mmv+knn", keep=4),
            MethodSpec.from_string("logistic"),
        ]
        features = np.array(data.features)
        features[test] = np.random.default_rng(8).standard_normal(
            (len(test), 6)) * 100
        perturbed = validate_dataset(
            features, [data.class_names[i] for i in data.labels],
            classes=data.class_names)
        queries = np.random.default_rng(9).standard_normal((30, 6))
        rng = RngStream(10).child(Purpose.optimizer, 0)

        # When
        fits = fit_fold(
            data, train, methods, MvConfig.smoothed(), FAST, rng)
        r_fits = fit_fold(
            perturbed, train, methods, MvConfig.smoothed(), FAST, rng)

        # Then
        for (pipeline, model), (r_pipeline, r_model) in zip(fits, r_fits):
            self.assertEqual(pipeline.columns, r_pipeline.columns)
            if pipeline.basis is not None:
                npt.assert_array_equal(
                    pipeline.basis.matrix, r_pipeline.basis.matrix)
            npt.assert_array_equal(
                predict_many(model, pipeline, queries),
                predict_many(r_model, r_pipeline, queries))

    def test_shared_reduction(self):
        # Given
        data = gen_model_i(40, 5, RngStream(11))
        train = np.arange(30)
        methods = [
            MethodSpec.from_string("mmv+lda"),
            MethodSpec.from_string("mmv+knn"),
        ]

        # When
        fits = fit_fold(
            data, train, methods, MvConfig.smoothed(), FAST, RngStream(1))

        # Then
        self.assertIs(fits[0][0].basis, fits[1][0].basis)
