import math
from unittest import TestCase

import numpy as np
import pytest

from habitat.discovery import NonSquare
from habitat.discovery import acyclicity_h
from habitat.discovery import least_squares_loss


def central_difference(func, W, eps=1e-6):
    grad = np.zeros_like(W)
    for idx in np.ndindex(*W.shape):
        step = np.zeros_like(W)
        step[idx] = eps
        grad[idx] = (func(W + step) - func(W - step)) / (2 * eps)
    return grad


class AcyclicityTest(TestCase):
    def test_zero_matrix(self):
        h, grad = acyclicity_h(np.zeros((4, 4)))
        self.assertEqual(h, 0.0)
        self.assertTrue(np.all(grad == 0))

    def test_two_cycle(self):
        h, _ = acyclicity_h(np.array([[0.0, 1.0], [1.0, 0.0]]))
        self.assertAlmostEqual(h, 2 * math.cosh(1) - 2, delta=1e-9)

    def test_upper_triangular(self):
        rng = np.random.default_rng(3)
        for d in (3, 5, 8):
            W = np.triu(rng.normal(scale=2.0, size=(d, d)), k=1)
            h, _ = acyclicity_h(W)
            self.assertLess(abs(h), 1e-10)

    def test_gradient(self):
        rng = np.random.default_rng(11)
        for trial in range(20):
            d = 3 if trial % 2 else 5
            W = rng.normal(scale=0.5, size=(d, d))
            _, grad = acyclicity_h(W)
            numeric = central_difference(lambda M: acyclicity_h(M)[0], W)
            rel = np.linalg.norm(grad - numeric) / np.linalg.norm(grad)
            self.assertLess(rel, 1e-5)

    def test_non_square(self):
        with pytest.raises(NonSquare):
            acyclicity_h(np.zeros((2, 3)))


class LeastSquaresTest(TestCase):
    def test_perfect_fit(self):
        X = np.array([[1.0, 2.0], [2.0, 4.0], [-1.0, -2.0]])
        W = np.array([[0.0, 2.0], [0.0, 0.0]])
        R = X - X @ W
        loss, _ = least_squares_loss(W, X)
        self.assertAlmostEqual(loss, 0.5 / 3 * float((R**2).sum()))
        self.assertAlmostEqual(loss, 0.5 / 3 * (1 + 4 + 1))

    def test_gradient(self):
        rng = np.random.default_rng(5)
        X = rng.normal(size=(50, 4))
        W = rng.normal(scale=0.3, size=(4, 4))
        _, grad = least_squares_loss(W, X)
        numeric = central_difference(lambda M: least_squares_loss(M, X)[0], W)
        np.testing.assert_allclose(grad, numeric, rtol=1e-5, atol=1e-8)
