import unittest

import numpy as np
import numpy.testing as npt

from parameterized import parameterized

from mmvsdr.core import DirectionBasis, RngStream
from mmvsdr.errors import DimensionMismatch, InvalidConfiguration
from mmvsdr.index import MvConfig
from mmvsdr.optimize import OptimizerConfig
from mmvsdr.simulations import gen_model_i
from .._base import ClassifierKind
from ..knn import fit_knn
from ..lda import LdaModel, fit_lda
from ..pipeline import (
    MethodSpec, Pipeline, fit_classifier, fit_pipeline, fit_reduction,
    predict, predict_many
)


FAST = OptimizerConfig(restarts=2)


class TestMethodSpec(unittest.TestCase):
    @parameterized.expand([
        ("lda", ClassifierKind.lda, False),
        ("mmv+lda", ClassifierKind.lda, True),
        ("MMV+Logistic", ClassifierKind.logistic, True),
        (" knn ", ClassifierKind.knn, False),
    ])
    def test_from_string(self, s, r_kind, r_reduce):
        # When
        method = MethodSpec.from_string(s)

        # Then
        self.assertEqual(method.classifier, r_kind)
        self.assertEqual(method.reduce, r_reduce)

    def test_name(self):
        # When/Then
        self.assertEqual(MethodSpec.from_string("mmv+knn").name, "mmv+knn")
        self.assertEqual(str(MethodSpec(ClassifierKind.lda)), "lda")

    def test_unknown(self):
        # When/Then
        with self.assertRaises(InvalidConfiguration):
            MethodSpec.from_string("mmv+svm")


class TestPipeline(unittest.TestCase):
    def setUp(self):
        self.data = gen_model_i(40, 6, RngStream(3))

    def test_raw(self):
        # Given
        pipeline = Pipeline(6)

        # When/Then
        self.assertEqual(pipeline.dimension, 6)
        npt.assert_array_equal(
            pipeline.transform(self.data.features), self.data.features)
        self.assertIsNone(pipeline.full_basis())

    def test_screened_basis(self):
        # Given
        basis = DirectionBasis.from_directions([[0.6, 0.8]], [0.1])
        pipeline = Pipeline(6, (4, 1), basis)

        # When
        transformed = pipeline.transform(self.data.features)

        # Then
        npt.assert_array_equal(
            transformed[:, 0],
            self.data.features[:, [4, 1]] @ basis.matrix[:, 0])
        npt.assert_array_equal(
            pipeline.full_basis().matrix[:, 0],
            [0.0, 0.8, 0.0, 0.0, 0.6, 0.0])

    def test_basis_dimension_mismatch(self):
        # Given
        basis = DirectionBasis.from_directions([[0.6, 0.8]], [0.1])

        # When/Then
        with self.assertRaises(DimensionMismatch):
            Pipeline(6, (4, 1, 2), basis)

    def test_predict_single(self):
        # Given
        model = LdaModel([1.0, 0.0], 0.0)
        pipeline = Pipeline(2)

        # When/Then
        self.assertEqual(predict(model, pipeline, [2.0, -5.0]), 1)
        with self.assertRaises(DimensionMismatch):
            predict(model, pipeline, [2.0, -5.0, 1.0])


class TestFitPipeline(unittest.TestCase):
    def setUp(self):
        self.data = gen_model_i(60, 6, RngStream(3))
        self.config = MvConfig.smoothed()

    @parameterized.expand([("lda",), ("logistic",), ("knn",)])
    def test_composition(self, name):
        # Given
        method = MethodSpec.from_string("mmv+" + name)
        queries = np.random.default_rng(0).standard_normal((25, 6))

        # When
        pipeline, model = fit_pipeline(
            self.data, method, self.config, FAST, RngStream(1))

        # Then
        projected = self.data.project(pipeline.basis.matrix)
        manual = fit_classifier(method.classifier, projected, method.k)
        npt.assert_array_equal(
            predict_many(model, pipeline, queries),
            manual.predict_many(queries @ pipeline.basis.matrix))

    def test_identity_basis(self):
        # Given
        basis = DirectionBasis.from_directions(list(np.eye(6)), [0.0] * 6)
        reduction = Pipeline(6, None, basis)
        method = MethodSpec.from_string("mmv+lda")
        queries = np.random.default_rng(0).standard_normal((25, 6))

        # When
        pipeline, model = fit_pipeline(
            self.data, method, self.config, FAST, RngStream(1),
            reduction=reduction)

        # Then
        raw = fit_lda(self.data)
        npt.assert_array_equal(
            predict_many(model, pipeline, queries), raw.predict_many(queries))

    def test_rotation_basis_knn(self):
        # Given
        rotation, _ = np.linalg.qr(
            np.random.default_rng(5).standard_normal((6, 6)))
        basis = DirectionBasis.from_directions(list(rotation.T), [0.0] * 6)
        method = MethodSpec.from_string("mmv+knn")
        queries = np.random.default_rng(0).standard_normal((25, 6))

        # When
        pipeline, model = fit_pipeline(
            self.data, method, self.config, FAST, RngStream(1),
            reduction=Pipeline(6, None, basis))

        # Then
        raw = fit_knn(self.data, method.k)
        npt.assert_array_equal(
            predict_many(model, pipeline, queries), raw.predict_many(queries))

    def test_screening(self):
        # Given
        method = MethodSpec.from_string("mmv+lda", keep=3)

        # When
        pipeline, model = fit_pipeline(
            self.data, method, self.config, FAST, RngStream(1))

        # Then
        self.assertEqual(len(pipeline.columns), 3)
        self.assertEqual(pipeline.basis.p, 3)
        self.assertEqual(model.dimension, 1)
        full = pipeline.full_basis().matrix[:, 0]
        self.assertEqual(np.count_nonzero(full), 3)

    def test_reduction_without_mmv(self):
        # When
        pipeline = fit_reduction(
            self.data, 2, False, self.config, FAST, RngStream(1))

        # Then
        self.assertIsNone(pipeline.basis)
        self.assertEqual(pipeline.dimension, 2)

    def test_model_i_beats_chance(self):
        # Given
        test = gen_model_i(200, 6, RngStream(99))
        method = MethodSpec.from_string("mmv+lda")

        # When
        pipeline, model = fit_pipeline(
            self.data, method, self.config, FAST, RngStream(1))

        # Then
        errors = np.mean(
            predict_many(model, pipeline, test.features) != test.labels)
        self.assertLess(errors, 0.2)
