import os
import tempfile
from unittest import TestCase

import numpy as np
import pytest

from habitat.discovery import topological_order
from habitat.inference import point_biserial
from habitat.synth import InvalidSyntheticSpec
from habitat.synth import SyntheticSpec
from habitat.synth import build_model
from habitat.synth import generate_presence
from habitat.synth import generate_sem

from ...util import get_file_path


class SyntheticSpecTest(TestCase):
    def test_from_file(self):
        spec = SyntheticSpec.from_file(get_file_path("synth_spec.json"))
        self.assertEqual(spec.d, 5)
        self.assertEqual(spec.weight_range, (0.5, 1.5))
        self.assertEqual(spec.column_names, ["x0", "x1", "x2", "x3", "x4"])
        self.assertEqual(spec.with_seed(9).seed, 9)

    def test_invalid(self):
        for data in (
            {"d": 1},
            {"d": 3, "n": 5},
            {"d": 3, "weight_range": [0.1, 1.0]},
            {"d": 3, "expected_edges": 4},
            {"d": 3, "presence_coeffs": {"x7": 1.0}},
            {"d": 3, "forced_edges": [[0, 0, 1.0]]},
            {"d": 3, "noise_sigmas": [1.0, 1.0]},
            {"d": 3, "colour": "red"},
        ):
            with pytest.raises(InvalidSyntheticSpec):
                SyntheticSpec.from_dict(data)

    def test_unreadable_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "spec.json")
            with open(path, "w") as f:
                f.write("{not json")
            with pytest.raises(InvalidSyntheticSpec):
                SyntheticSpec.from_file(path)

    def test_forced_cycle(self):
        spec = SyntheticSpec(d=2, forced_edges=((0, 1, 1.0), (1, 0, 1.0)))
        with pytest.raises(InvalidSyntheticSpec):
            build_model(spec)


class GenerateSemTest(TestCase):
    def test_empty_graph(self):
        dag, data = generate_sem(SyntheticSpec(d=5, n=2000, seed=4))
        self.assertEqual(dag.edges(), [])
        corr = np.corrcoef(data.X, rowvar=False)
        off_diagonal = corr[~np.eye(5, dtype=bool)]
        self.assertLess(np.abs(off_diagonal).max(), 0.1)

    def test_forced_edge_correlation(self):
        spec = SyntheticSpec(d=2, n=5000, forced_edges=((0, 1, 0.8),), noise_sigmas=(1.0, 0.3))
        dag, data = generate_sem(spec)
        self.assertEqual([(i, j) for i, j, _ in dag.edges()], [(0, 1)])
        corr = np.corrcoef(data.X[:, 0], data.X[:, 1])[0, 1]
        self.assertAlmostEqual(corr, 0.8 / np.sqrt(0.64 + 0.09), delta=0.02)

    def test_acyclic(self):
        for seed in range(20):
            spec = SyntheticSpec(d=8, expected_edges=12, n=20, seed=seed)
            dag, _ = generate_sem(spec)
            topological_order(dag)
            weights = np.abs(dag.W[dag.W != 0])
            self.assertTrue(np.all((weights >= 0.5) & (weights <= 2.0)))

    def test_edge_count(self):
        spec = SyntheticSpec(d=10, expected_edges=10, n=10)
        counts = [len(build_model(spec.with_seed(seed)).to_dag().edges()) for seed in range(100)]
        p = 10 / 45
        sd = np.sqrt(45 * p * (1 - p))
        self.assertLess(abs(np.mean(counts) - 10), 3 * sd / np.sqrt(100))

    def test_deterministic(self):
        spec = SyntheticSpec.from_file(get_file_path("synth_spec.json"))
        dag_a, data_a = generate_sem(spec)
        dag_b, data_b = generate_sem(spec)
        np.testing.assert_array_equal(dag_a.W, dag_b.W)
        np.testing.assert_array_equal(data_a.X, data_b.X)
        np.testing.assert_array_equal(generate_presence(data_a, spec), generate_presence(data_b, spec))

        _, data_c = generate_sem(spec.with_seed(4))
        self.assertFalse(np.array_equal(data_a.X, data_c.X))


class GeneratePresenceTest(TestCase):
    def presence(self, **kwargs):
        spec = SyntheticSpec(d=3, n=5000, seed=2, **kwargs)
        _, data = generate_sem(spec)
        return data, generate_presence(data, spec)

    def test_symmetric_null(self):
        _, y = self.presence()
        self.assertAlmostEqual(y.mean(), 0.5, delta=0.02)

    def test_saturated_intercept(self):
        _, y = self.presence(intercept=-10.0)
        self.assertLess(y.mean(), 0.01)

    def test_planted_coefficient(self):
        data, y = self.presence(presence_coeffs={"x1": 2.0})
        self.assertGreater(point_biserial(data.column("x1"), y), 0.4)

    def test_columns_must_match(self):
        _, data = generate_sem(SyntheticSpec(d=3))
        with pytest.raises(ValueError):
            generate_presence(data, SyntheticSpec(d=4))
