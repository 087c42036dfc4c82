import logging

import numpy as np
from scipy.special import expit
from scipy.stats import truncnorm

from .generate import ORACLE_STREAM
from .generate import build_model
from .generate import presence_logits
from .generate import spawn_rng

log = logging.getLogger(__name__)

INTERVENTIONS = ("means", "halves", "conditional")


def split_halves(values):
    """Values at or below the median, and values above it, matching the
    estimator's median split.
    """
    values = np.asarray(values, dtype=float)
    upper = values > np.median(values)
    return values[~upper], values[upper]


def conditional_halves(model, natural, column, rng):
    """Per-unit treatment draws above and below the marginal median, each
    from the unit's own distribution given its parents.

    :return: ``(high, low)`` arrays, one value per row of ``natural``
    """
    median = np.median(natural[:, column])
    parents = natural @ model.W[:, column]
    sigma = model.sigmas[column]
    cut = (median - parents) / sigma
    high = truncnorm.rvs(cut, np.inf, random_state=rng)
    low = truncnorm.rvs(-np.inf, cut, random_state=rng)
    return parents + sigma * high, parents + sigma * low


def oracle_ate(spec, treatment, n_mc=200000, intervention="means", mc_seed=None):
    """Interventional contrast ``E[P(y=1) | do(t=1)] - E[P(y=1) | do(t=0)]``
    under the true SEM, with the treatment binarized at its median.

    Both arms share the exogenous noise. ``"means"`` clamps the treatment at
    the mean of its upper and lower half. ``"halves"`` draws each Monte
    Carlo unit's treatment from the natural upper or lower half.
    ``"conditional"`` draws it from the unit's distribution given its
    parents, truncated at the marginal median; this is the contrast the
    propensity-stratified estimator targets when it adjusts for the
    parents. Descendants of the treatment are propagated, the rest of the
    system is left untouched.

    :param mc_seed: seed of the Monte Carlo draws, ``spec.seed`` by default;
        the SEM itself always comes from ``spec.seed``
    """
    if intervention not in INTERVENTIONS:
        raise ValueError(f"unknown intervention {intervention!r}")
    column = spec.column_index(treatment)
    model = build_model(spec)
    rng = spawn_rng(spec.seed if mc_seed is None else mc_seed, ORACLE_STREAM)
    noise = rng.standard_normal((n_mc, spec.d))

    natural = model.sample(noise)
    if intervention == "conditional":
        high, low = conditional_halves(model, natural, column, rng)
    else:
        lower, upper = split_halves(natural[:, column])
        if intervention == "means":
            high, low = upper.mean(), lower.mean()
        else:
            high = rng.choice(upper, n_mc)
            low = rng.choice(lower, n_mc)
    p_high = expit(presence_logits(model.sample(noise, clamp=(column, high)), spec))
    p_low = expit(presence_logits(model.sample(noise, clamp=(column, low)), spec))
    ate = float(np.mean(p_high - p_low))
    log.debug("Oracle ATE of %s (%s): %+.4f", treatment, intervention, ate)
    return ate
