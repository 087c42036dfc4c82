from unittest import TestCase

import numpy as np
import pytest
from scipy.special import expit

from habitat.discovery import WeightedDag
from habitat.inference import CausalEstimate
from habitat.inference import CausalQuery
from habitat.inference import LabeledSamples
from habitat.inference import NoVariation
from habitat.inference import TooFewSamples
from habitat.inference import assign_strata
from habitat.inference import binarize
from habitat.inference import estimate_effects
from habitat.inference import naive_difference
from habitat.inference import stratified_ate


def randomized(effect, n=4000, seed=0):
    rng = np.random.default_rng(seed)
    z = rng.normal(size=n)
    t = rng.integers(0, 2, n)
    y = rng.binomial(1, 0.3 + effect * t)
    return LabeledSamples(np.column_stack([z, t]), ["Z", "T"], y)


def confounded(n=4000, seed=0):
    rng = np.random.default_rng(seed)
    z = rng.normal(size=n)
    t = (z + rng.normal(scale=0.5, size=n) > 0).astype(int)
    y = rng.binomial(1, expit(z))
    return LabeledSamples(np.column_stack([z, t]), ["Z", "T"], y)


ADJUST_Z = CausalQuery(treatment="T", adjustment_set=("Z",))


class StratifiedAteTest(TestCase):
    def test_randomized_effect(self):
        estimate = stratified_ate(randomized(0.2), ADJUST_Z, bootstrap=100, rng_seed=1)
        self.assertLess(abs(estimate.ate - 0.2), 0.04)
        self.assertLess(abs(estimate.ate - estimate.naive_diff), 0.02)
        self.assertLessEqual(estimate.ci95[0], estimate.ate)
        self.assertLessEqual(estimate.ate, estimate.ci95[1])
        self.assertEqual(estimate.n_strata_used, 5)
        self.assertEqual(estimate.n_dropped, 0)
        self.assertFalse(estimate.fallback)

    def test_null_effect(self):
        estimate = stratified_ate(randomized(0.0, seed=3), ADJUST_Z, bootstrap=100)
        self.assertLess(abs(estimate.ate), 0.04)

    @pytest.mark.slow
    def test_null_coverage(self):
        covered = 0
        for seed in range(20):
            estimate = stratified_ate(
                randomized(0.0, seed=100 + seed), ADJUST_Z, bootstrap=100, rng_seed=seed
            )
            self.assertLess(abs(estimate.ate), 0.04)
            covered += estimate.ci95[0] <= 0 <= estimate.ci95[1]
        self.assertGreaterEqual(covered, 18)

    def test_deconfounding(self):
        estimate = stratified_ate(confounded(), ADJUST_Z, bootstrap=20)
        self.assertGreater(estimate.naive_diff, 0.1)
        self.assertLess(abs(estimate.ate), 0.05)

    def test_row_permutation(self):
        samples = confounded(n=600, seed=5)
        shuffled = samples.take(np.random.default_rng(0).permutation(samples.n))
        a = stratified_ate(samples, ADJUST_Z, bootstrap=30, rng_seed=7)
        b = stratified_ate(shuffled, ADJUST_Z, bootstrap=30, rng_seed=7)
        self.assertEqual(a.ate, b.ate)
        self.assertEqual(a.se, b.se)
        self.assertEqual(a.ci95, b.ci95)

    def test_seeded_bootstrap(self):
        samples = randomized(0.1, n=500)
        a = stratified_ate(samples, ADJUST_Z, bootstrap=30, rng_seed=7)
        b = stratified_ate(samples, ADJUST_Z, bootstrap=30, rng_seed=7)
        self.assertEqual(a.to_dict(), b.to_dict())

    def test_empty_adjustment(self):
        rng = np.random.default_rng(6)
        x = rng.normal(size=400)
        y = rng.binomial(1, expit(x))
        samples = LabeledSamples(x.reshape(-1, 1), ["BIO1"], y)
        estimate = stratified_ate(samples, CausalQuery("BIO1", ()), bootstrap=10)
        t = binarize(x)
        self.assertAlmostEqual(estimate.ate, naive_difference(y.astype(float), t), delta=1e-12)
        self.assertEqual(estimate.n_strata_used, 1)

    def test_separated_propensity_falls_back(self):
        rng = np.random.default_rng(2)
        z = rng.normal(size=200)
        t = (z > 0).astype(int)
        y = rng.integers(0, 2, 200)
        samples = LabeledSamples(np.column_stack([z, t]), ["Z", "T"], y)
        estimate = stratified_ate(samples, ADJUST_Z, bootstrap=5)
        self.assertTrue(estimate.fallback)
        self.assertEqual(estimate.ate, estimate.naive_diff)

    def test_too_few_samples(self):
        with pytest.raises(TooFewSamples):
            stratified_ate(randomized(0.1, n=49), ADJUST_Z)

    def test_constant_treatment(self):
        samples = LabeledSamples(np.ones((100, 1)), ["BIO1"], np.arange(100) % 2)
        with pytest.raises(NoVariation):
            stratified_ate(samples, CausalQuery("BIO1", ()), bootstrap=0)


class HelpersTest(TestCase):
    def test_binarize(self):
        self.assertEqual(binarize([1.0, 2.0, 3.0, 4.0]).tolist(), [0, 0, 1, 1])
        self.assertEqual(binarize([1.0, 2.0, 3.0]).tolist(), [0, 0, 1])
        self.assertEqual(binarize([0, 1, 1]).tolist(), [0, 1, 1])

    def test_assign_strata(self):
        labels = assign_strata(np.arange(100, dtype=float), 5)
        self.assertEqual(np.bincount(labels).tolist(), [20] * 5)
        self.assertEqual(set(assign_strata(np.full(10, 0.5), 5)), {4})

    def test_estimate_bounds(self):
        with pytest.raises(ValueError):
            CausalEstimate("BIO1", 0.5, 0.01, (0.6, 0.7), 5, 0, 0.5)
        with pytest.raises(ValueError):
            CausalEstimate("BIO1", 1.5, 0.01, (1.4, 1.6), 5, 0, 0.5)

    def test_estimate_json(self):
        estimate = CausalEstimate("BIO1", 0.1, float("nan"), (0.1, 0.1), 5, 0, 0.1, ("BIO6",))
        data = estimate.to_dict()
        self.assertIsNone(data["se"])
        self.assertEqual(data["adjustment_set"], ["BIO6"])
        self.assertEqual(CausalEstimate.from_dict(data).adjustment_set, ("BIO6",))

    def test_query(self):
        with pytest.raises(ValueError):
            CausalQuery("BIO1", ("BIO1",))


class EstimateEffectsTest(TestCase):
    def test_ordered_by_magnitude(self):
        rng = np.random.default_rng(12)
        n = 1000
        a = rng.normal(size=n)
        b = 0.8 * a + rng.normal(size=n)
        c = rng.normal(size=n)
        y = rng.binomial(1, expit(1.5 * b + 0.3 * c))
        samples = LabeledSamples(np.column_stack([a, b, c]), ["A", "B", "C"], y)
        W = np.zeros((3, 3))
        W[0, 1] = 0.8
        dag = WeightedDag(W, ["A", "B", "C"])

        estimates = estimate_effects(samples, dag, k=3, bootstrap=10)
        self.assertEqual(len(estimates), 3)
        magnitudes = [abs(e.ate) for e in estimates]
        self.assertEqual(magnitudes, sorted(magnitudes, reverse=True))
        by_name = {e.treatment: e for e in estimates}
        self.assertEqual(by_name["B"].adjustment_set, ("A",))
        self.assertEqual(by_name["A"].adjustment_set, ())
        self.assertEqual(estimates[0].treatment, "B")
