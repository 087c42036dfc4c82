"""habitat.synth.benchmark.
~~~~~~~~~~~~~~~~~~~~~~~~~

Repeated trials of structure learning and effect estimation against the
synthetic ground truth.
"""

import logging
from dataclasses import asdict
from dataclasses import dataclass

import numpy as np

from habitat.common.errors import NumericalError
from habitat.discovery import notears_fit
from habitat.discovery import structural_hamming_distance
from habitat.inference import CausalQuery
from habitat.inference import LabeledSamples
from habitat.inference import backdoor_adjustment_set
from habitat.inference import stratified_ate
from habitat.inference import with_outcome

from .generate import generate_presence
from .generate import generate_sem
from .oracle import oracle_ate

log = logging.getLogger(__name__)


@dataclass
class TrialResult:
    seed: int
    shd: int = None
    n_true_edges: int = None
    n_learned_edges: int = None
    treatment: str = None
    ate: float = None
    oracle: float = None
    ate_error: float = None
    covered: bool = None
    error: str = None

    def to_dict(self):
        return asdict(self)


@dataclass
class BenchmarkResult:
    trials: list

    @property
    def completed(self):
        return [t for t in self.trials if t.error is None]

    def summary(self):
        done = self.completed
        if not done:
            return {"trials": len(self.trials), "completed": 0}
        shd = np.array([t.shd for t in done])
        errors = np.array([abs(t.ate_error) for t in done])
        return {
            "trials": len(self.trials),
            "completed": len(done),
            "mean_shd": float(shd.mean()),
            "shd_at_most_2": float(np.mean(shd <= 2)),
            "mean_abs_ate_error": float(errors.mean()),
            "coverage": float(np.mean([t.covered for t in done])),
        }

    def to_dict(self):
        return {
            "summary": self.summary(),
            "trials": [t.to_dict() for t in self.trials],
        }

    def format_table(self):
        lines = [f"{'seed':>6} {'shd':>4} {'ate':>8} {'oracle':>8} {'error':>8} covered"]
        for t in self.trials:
            if t.error:
                lines.append(f"{t.seed:>6} failed: {t.error}")
                continue
            lines.append(
                f"{t.seed:>6} {t.shd:>4} {t.ate:>+8.3f} {t.oracle:>+8.3f} "
                f"{t.ate_error:>+8.3f} {'yes' if t.covered else 'no'}"
            )
        summary = self.summary()
        if summary["completed"]:
            lines.append(
                f"mean SHD {summary['mean_shd']:.2f}, "
                f"SHD<=2 in {summary['shd_at_most_2']:.0%}, "
                f"mean |ATE error| {summary['mean_abs_ate_error']:.3f}, "
                f"coverage {summary['coverage']:.0%}"
            )
        return "\n".join(lines)


def default_treatment(spec):
    if spec.presence_coeffs:
        key = next(iter(spec.presence_coeffs))
        return spec.column_names[spec.column_index(key)]
    return spec.column_names[0]


def run_trial(
    spec,
    treatment,
    notears_config=None,
    n_strata=5,
    bootstrap=100,
    n_mc=200000,
    intervention="conditional",
):
    result = TrialResult(seed=spec.seed, treatment=treatment)
    true_dag, data = generate_sem(spec)
    presence = generate_presence(data, spec)
    try:
        learned = notears_fit(data, notears_config)
        graph = with_outcome(learned)
        adjustment = backdoor_adjustment_set(graph, treatment)
        samples = LabeledSamples(data.X, list(data.column_names), presence)
        query = CausalQuery(treatment=treatment, adjustment_set=tuple(adjustment))
        estimate = stratified_ate(samples, query, n_strata, bootstrap, spec.seed)
    except NumericalError as error:
        log.warning("Trial with seed %d failed: %s", spec.seed, error)
        result.error = str(error)
        return result

    oracle = oracle_ate(spec, treatment, n_mc, intervention)
    lo, hi = estimate.ci95
    result.shd = structural_hamming_distance(true_dag.W, learned.W)
    result.n_true_edges = int((true_dag.W != 0).sum())
    result.n_learned_edges = int((learned.W != 0).sum())
    result.ate = estimate.ate
    result.oracle = oracle
    result.ate_error = estimate.ate - oracle
    result.covered = bool(lo <= oracle <= hi)
    return result


def run_benchmark(spec, trials=20, treatment=None, **kwargs):
    """Run ``trials`` independent problems with seeds ``spec.seed``,
    ``spec.seed + 1``, ...

    :return: :class:`BenchmarkResult`
    """
    treatment = treatment or default_treatment(spec)
    results = []
    for trial in range(trials):
        trial_spec = spec.with_seed(spec.seed + trial)
        result = run_trial(trial_spec, treatment, **kwargs)
        log.info("Trial %d/%d (seed %d): SHD %s", trial + 1, trials, trial_spec.seed, result.shd)
        results.append(result)
    return BenchmarkResult(results)
