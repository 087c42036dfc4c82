"""habitat.inference.estimators.
~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~

Average treatment effect of a climate variable on presence by stratified
propensity score adjustment. Continuous treatments are split at their
median: values above it are "treated".
"""

import logging

import numpy as np

from .errors import AllStrataDropped
from .errors import NoVariation
from .errors import Separation
from .errors import TooFewSamples
from .graph import backdoor_adjustment_set
from .graph import with_outcome
from .models import CausalEstimate
from .models import CausalQuery
from .propensity import fit_propensity
from .treatments import select_treatments

log = logging.getLogger(__name__)

MIN_SAMPLES = 50
Z_95 = 1.959963984540054


def binarize(values):
    """Binary treatment: already-binary columns pass through, others are
    split at the median (strictly above is 1).
    """
    values = np.asarray(values, dtype=float)
    if np.isin(values, (0.0, 1.0)).all():
        return values.astype(int)
    return (values > np.median(values)).astype(int)


def naive_difference(y, t):
    return float(y[t == 1].mean() - y[t == 0].mean())


def assign_strata(scores, n_strata):
    """Quantile strata of the propensity scores; tied scores share a stratum."""
    edges = np.quantile(scores, np.linspace(0, 1, n_strata + 1))
    return np.searchsorted(edges[1:-1], scores, side="right")


def _stratified_contrast(y, t, scores, n_strata):
    labels = assign_strata(scores, n_strata)
    strata = []
    kept_total = 0
    weighted = 0.0
    for k in np.unique(labels):
        mask = labels == k
        n_k = int(mask.sum())
        treated = mask & (t == 1)
        control = mask & (t == 0)
        n_t, n_c = int(treated.sum()), int(control.sum())
        stratum = {"stratum": int(k), "n": n_k, "n_treated": n_t, "n_control": n_c}
        if n_t == 0 or n_c == 0:
            stratum["dropped"] = True
            strata.append(stratum)
            continue
        diff = float(y[treated].mean() - y[control].mean())
        stratum.update(dropped=False, diff=diff)
        strata.append(stratum)
        kept_total += n_k
        weighted += n_k * diff

    if kept_total == 0:
        raise AllStrataDropped()
    return weighted / kept_total, strata


def _point_estimate(y, t, z, n_strata):
    """Returns ``(ate, strata, fallback)``."""
    if t.min() == t.max():
        raise NoVariation()
    try:
        scores = fit_propensity(z, t)
    except Separation:
        return naive_difference(y, t), [], True
    ate, strata = _stratified_contrast(y, t, scores, n_strata)
    return ate, strata, False


def _canonical_order(y, t, z):
    keys = [z[:, j] for j in reversed(range(z.shape[1]))] + [t, y]
    return np.lexsort(keys)


def stratified_ate(samples, query, n_strata=5, bootstrap=200, rng_seed=0):
    """Estimate the effect named by ``query`` on ``samples``.

    Standard error and a normal 95% interval come from a nonparametric
    bootstrap over rows; each replicate refits the propensity model and
    draws from its own generator spawned from ``rng_seed``.

    :param samples: :class:`LabeledSamples`
    :param query: :class:`CausalQuery`
    """
    if samples.n < MIN_SAMPLES:
        raise TooFewSamples(description=f"{samples.n} samples, at least {MIN_SAMPLES} required")

    y = samples.presence.astype(float)
    t = binarize(samples.column(query.treatment))
    z = samples.columns(list(query.adjustment_set))

    # estimates must not depend on row order
    order = _canonical_order(y, t, z)
    y, t, z = y[order], t[order], z[order]

    ate, strata, fallback = _point_estimate(y, t, z, n_strata)
    naive = naive_difference(y, t)
    if fallback:
        log.warning("Propensity model for %s separated; using the naive difference", query.treatment)

    replicates = []
    n = len(y)
    for child in np.random.SeedSequence(rng_seed).spawn(bootstrap):
        rows = np.random.default_rng(child).integers(0, n, n)
        try:
            value, _, _ = _point_estimate(y[rows], t[rows], z[rows], n_strata)
        except (NoVariation, AllStrataDropped):
            continue
        replicates.append(value)

    if len(replicates) >= 2:
        se = float(np.std(replicates, ddof=1))
    else:
        se = float("nan") if bootstrap else 0.0
    half = Z_95 * se if np.isfinite(se) else 0.0
    ci95 = (max(-1.0, ate - half), min(1.0, ate + half))

    used = [s for s in strata if not s.get("dropped")]
    n_dropped = sum(s["n"] for s in strata if s.get("dropped"))
    return CausalEstimate(
        treatment=query.treatment,
        ate=float(ate),
        se=se,
        ci95=ci95,
        n_strata_used=len(used) if strata else 0,
        n_dropped=n_dropped,
        naive_diff=naive,
        adjustment_set=tuple(query.adjustment_set),
        fallback=fallback,
        strata=strata,
    )


def estimate_effects(samples, dag, k=5, n_strata=5, bootstrap=200, rng_seed=0):
    """Select treatments, identify their adjustment sets on ``dag`` and
    estimate each effect. Results are ordered by ``|ate|`` descending.
    """
    graph = with_outcome(dag)
    estimates = []
    for treatment in select_treatments(samples, k):
        adjustment = backdoor_adjustment_set(graph, treatment)
        query = CausalQuery(treatment=treatment, adjustment_set=tuple(adjustment))
        estimate = stratified_ate(samples, query, n_strata, bootstrap, rng_seed)
        log.info(
            "ATE of %s: %+.3f (95%% CI %+.3f..%+.3f, adjusting for %s)",
            treatment,
            estimate.ate,
            estimate.ci95[0],
            estimate.ci95[1],
            ", ".join(adjustment) or "nothing",
        )
        estimates.append(estimate)
    estimates.sort(key=lambda e: -abs(e.ate))
    return estimates
