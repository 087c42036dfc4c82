import math
from unittest import TestCase

import numpy as np
import pytest

from habitat.inference import CausalQuery
from habitat.inference import LabeledSamples
from habitat.inference import backdoor_adjustment_set
from habitat.inference import stratified_ate
from habitat.inference import with_outcome
from habitat.synth import SyntheticSpec
from habitat.synth import build_model
from habitat.synth import conditional_halves
from habitat.synth import generate_presence
from habitat.synth import generate_sem
from habitat.synth import oracle_ate
from habitat.synth import split_halves

# x0 ~ N(0, 1), P(y=1) = sigmoid(x0)
MEANS_CONTRAST = math.tanh(math.sqrt(2 / math.pi) / 2)
# E[tanh(|x0| / 2)]
HALVES_CONTRAST = 0.351


class OracleTest(TestCase):
    def setUp(self):
        self.randomized = SyntheticSpec(d=2, n=4000, presence_coeffs={"x0": 1.0}, seed=5)

    def test_null_model(self):
        spec = SyntheticSpec(d=3, expected_edges=2, seed=1)
        for intervention in ("means", "halves", "conditional"):
            ate = oracle_ate(spec, "x0", n_mc=20000, intervention=intervention)
            self.assertAlmostEqual(ate, 0.0, delta=0.01)

    def test_means_is_default(self):
        default = oracle_ate(self.randomized, "x0", n_mc=100000)
        means = oracle_ate(self.randomized, "x0", n_mc=100000, intervention="means")
        self.assertEqual(default, means)
        self.assertAlmostEqual(means, MEANS_CONTRAST, delta=0.01)

    def test_draw_based_interventions(self):
        halves = oracle_ate(self.randomized, "x0", intervention="halves")
        conditional = oracle_ate(self.randomized, "x0", intervention="conditional")
        self.assertAlmostEqual(halves, HALVES_CONTRAST, delta=0.01)
        # without parents the conditional law is the marginal one
        self.assertAlmostEqual(conditional, HALVES_CONTRAST, delta=0.01)
        with pytest.raises(ValueError):
            oracle_ate(self.randomized, "x0", intervention="median")

    def test_matches_randomized_estimate(self):
        _, data = generate_sem(self.randomized)
        presence = generate_presence(data, self.randomized)
        samples = LabeledSamples(data.X, list(data.column_names), presence)
        estimate = stratified_ate(samples, CausalQuery("x0", ()), bootstrap=100)
        oracle = oracle_ate(self.randomized, "x0", intervention="halves")
        self.assertLess(abs(estimate.ate - oracle), 3 * estimate.se + 0.005)

    def test_mediated_effect(self):
        spec = SyntheticSpec(
            d=3, forced_edges=((0, 1, 1.0),), presence_coeffs={"x1": 1.5}, seed=2
        )
        self.assertGreater(oracle_ate(spec, "x0", n_mc=50000), 0.1)
        self.assertAlmostEqual(oracle_ate(spec, "x2", n_mc=50000), 0.0, delta=0.01)

    def test_monte_carlo_convergence(self):
        spec = SyntheticSpec(d=4, expected_edges=3, presence_coeffs={"x2": 1.0}, seed=6)
        n_mc = 200000
        for intervention in ("means", "conditional"):
            a = oracle_ate(spec, "x2", n_mc, intervention, mc_seed=101)
            b = oracle_ate(spec, "x2", 2 * n_mc, intervention, mc_seed=202)
            self.assertLess(abs(a - b), 2 / math.sqrt(n_mc), intervention)

    def test_split_halves(self):
        lower, upper = split_halves(np.array([4.0, 1.0, 3.0, 2.0, 2.0]))
        self.assertEqual(sorted(lower.tolist()), [1.0, 2.0, 2.0])
        self.assertEqual(sorted(upper.tolist()), [3.0, 4.0])

    def test_conditional_halves_straddle_median(self):
        spec = SyntheticSpec(d=3, forced_edges=((0, 2, 1.5), (1, 2, -1.0)), seed=4)
        model = build_model(spec)
        rng = np.random.default_rng(0)
        natural = model.sample(rng.standard_normal((5000, 3)))
        high, low = conditional_halves(model, natural, 2, rng)
        median = np.median(natural[:, 2])
        self.assertEqual(high.shape, (5000,))
        self.assertTrue(np.all(high >= median - 1e-9))
        self.assertTrue(np.all(low <= median + 1e-9))
        # draws follow the unit's parents
        parents = natural @ model.W[:, 2]
        self.assertGreater(np.corrcoef(parents, high)[0, 1], 0.5)


@pytest.mark.slow
class ConfoundedOracleTest(TestCase):
    def test_stratified_estimate_matches_oracle(self):
        # weights up to 1 keep both arms in every propensity stratum
        base = SyntheticSpec(
            d=4, expected_edges=3, weight_range=(0.5, 1.0), n=4000, presence_coeffs={"x1": 1.0}
        )
        mismatches = []
        confounded = 0
        for seed in range(10):
            spec = base.with_seed(seed)
            true_dag, data = generate_sem(spec)
            adjustment = backdoor_adjustment_set(with_outcome(true_dag), "x1")
            confounded += bool(adjustment)
            samples = LabeledSamples(
                data.X, list(data.column_names), generate_presence(data, spec)
            )
            query = CausalQuery("x1", tuple(adjustment))
            estimate = stratified_ate(samples, query, bootstrap=100, rng_seed=seed)
            oracle = oracle_ate(spec, "x1", intervention="conditional")
            if abs(estimate.ate - oracle) >= 3 * estimate.se + 0.005:
                mismatches.append((seed, adjustment, estimate.ate, oracle))
        self.assertGreater(confounded, 0)
        self.assertEqual(mismatches, [])
