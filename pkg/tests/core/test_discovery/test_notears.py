from unittest import TestCase

import numpy as np
import pytest

from habitat.discovery import DataMatrix
from habitat.discovery import DegenerateData
from habitat.discovery import LinearNotears
from habitat.discovery import NotearsConfig
from habitat.discovery import create_learner
from habitat.discovery import notears_fit
from habitat.discovery import structural_hamming_distance
from habitat.discovery import threshold_to_dag
from habitat.discovery import topological_order
from habitat.synth import SyntheticSpec
from habitat.synth import generate_sem


def two_variable(noise_scale, n=1000, seed=42):
    rng = np.random.default_rng(seed)
    x1 = rng.normal(size=n)
    x2 = 0.8 * x1 + rng.normal(scale=noise_scale, size=n)
    return DataMatrix(np.column_stack([x1, x2]), ["x1", "x2"])


def chain(n=1000, seed=8):
    rng = np.random.default_rng(seed)
    X = np.zeros((n, 4))
    X[:, 0] = rng.normal(size=n)
    for j in range(1, 4):
        X[:, j] = 0.8 * X[:, j - 1] + rng.normal(size=n)
    return DataMatrix(X, ["a", "b", "c", "d"])


def ols_slope(x, y):
    x = x - x.mean()
    return float(x @ (y - y.mean()) / (x @ x))


class NotearsFitTest(TestCase):
    def test_equal_noise_orientation(self):
        data = two_variable(noise_scale=1.0)
        dag = notears_fit(data)
        self.assertEqual([(i, j) for i, j, _ in dag.edges()], [(0, 1)])

    def test_weight_matches_regression(self):
        data = two_variable(noise_scale=1.0)
        dag = notears_fit(data, NotearsConfig(lambda1=0.01))
        slope = ols_slope(data.X[:, 0], data.X[:, 1])
        self.assertLess(abs(dag.W[0, 1] - slope), 0.1)
        self.assertEqual(dag.W[1, 0], 0.0)

    def test_low_noise_single_edge(self):
        # with noise sd 0.3 the effect has the smaller variance, so the
        # squared loss alone does not fix the direction
        dag = notears_fit(two_variable(noise_scale=0.3))
        self.assertEqual(len(dag.edges()), 1)
        self.assertTrue(dag.support()[0, 1] or dag.support()[1, 0])

    def test_independent_columns(self):
        rng = np.random.default_rng(1)
        data = DataMatrix(rng.normal(size=(2000, 3)), ["a", "b", "c"])
        dag = notears_fit(data)
        self.assertEqual(dag.edges(), [])

    def test_constant_column(self):
        rng = np.random.default_rng(1)
        X = np.column_stack([rng.normal(size=100), np.full(100, 3.0)])
        with pytest.raises(DegenerateData) as exc:
            notears_fit(DataMatrix(X, ["a", "b"]))
        self.assertIn("b", exc.value.description)

    def test_history_records_convergence(self):
        dag = notears_fit(chain())
        self.assertTrue(dag.history)
        self.assertLessEqual(dag.history[-1]["h"], 1e-8)
        self.assertEqual(dag.threshold_used, 0.3)
        topological_order(dag)

    def test_chain_recovery(self):
        dag = notears_fit(chain())
        self.assertEqual([(i, j) for i, j, _ in dag.edges()], [(0, 1), (1, 2), (2, 3)])

    def test_permutation_equivariance(self):
        for data, order in ((two_variable(1.0), [1, 0]), (chain(), [2, 0, 3, 1])):
            base = notears_fit(data).support()
            permuted = notears_fit(data.permute(order)).support()
            np.testing.assert_array_equal(permuted, base[np.ix_(order, order)])

    def test_standardize(self):
        dag = LinearNotears(NotearsConfig(center_only=False)).fit(chain())
        self.assertTrue(all(abs(w) >= 0.3 for _, _, w in dag.edges()))
        topological_order(dag)

    def test_registry(self):
        learner = create_learner("notears-linear", NotearsConfig(lambda1=0.05))
        self.assertIsInstance(learner, LinearNotears)
        self.assertEqual(learner.config.lambda1, 0.05)
        with pytest.raises(ValueError):
            create_learner("notears-mlp")


class ThresholdTest(TestCase):
    def test_raises_cut_until_acyclic(self):
        W = np.array([[0.0, 0.5], [0.32, 0.0]])
        W_cut, threshold = threshold_to_dag(W, 0.3)
        self.assertEqual(threshold, 0.35)
        self.assertEqual(W_cut[0, 1], 0.5)
        self.assertEqual(W_cut[1, 0], 0.0)

    def test_keeps_threshold(self):
        W = np.array([[0.0, 0.5], [0.1, 0.0]])
        W_cut, threshold = threshold_to_dag(W, 0.3)
        self.assertEqual(threshold, 0.3)
        self.assertEqual(W_cut[1, 0], 0.0)


class NotearsConfigTest(TestCase):
    def test_defaults(self):
        cfg = NotearsConfig()
        self.assertEqual((cfg.lambda1, cfg.w_threshold, cfg.h_tol, cfg.rho_max), (0.1, 0.3, 1e-8, 1e16))
        self.assertTrue(cfg.center_only)

    def test_from_dict(self):
        cfg = NotearsConfig.from_dict({"lambda1": 0.2, "unknown": 1})
        self.assertEqual(cfg.lambda1, 0.2)
        self.assertEqual(NotearsConfig.from_dict(cfg.to_dict()), cfg)

    def test_invalid(self):
        with pytest.raises(ValueError):
            NotearsConfig(lambda1=0)
        with pytest.raises(ValueError):
            NotearsConfig(h_tol=0.1)


@pytest.mark.slow
class RecoveryTest(TestCase):
    def test_random_dags(self):
        spec = SyntheticSpec(
            d=10,
            expected_edges=10,
            weight_range=(0.5, 1.5),
            noise_sigma_range=(0.5, 1.0),
            n=1000,
        )
        good = 0
        for seed in range(20):
            truth, data = generate_sem(spec.with_seed(seed))
            dag = notears_fit(data)
            topological_order(dag)
            if structural_hamming_distance(truth.W, dag.W) <= 2:
                good += 1
        self.assertGreaterEqual(good, 16)
