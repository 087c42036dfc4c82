import logging
from dataclasses import dataclass

import numpy as np
from scipy.special import expit

from .errors import NoVariation
from .errors import Separation

log = logging.getLogger(__name__)

RIDGE = 1e-6
MAX_ITERATIONS = 100
TOLERANCE = 1e-8


@dataclass
class LogisticFit:
    intercept: float
    coef: np.ndarray
    #: asymptotic standard errors of ``coef``
    se: np.ndarray
    probabilities: np.ndarray
    iterations: int


def _check_inputs(z, t):
    t = np.asarray(t, dtype=float).ravel()
    z = np.asarray(z, dtype=float)
    if z.ndim == 1:
        z = z.reshape(-1, 1) if z.size else np.empty((len(t), 0))
    if z.shape[0] != len(t):
        raise ValueError("z and t have different lengths")
    if not np.isin(t, (0.0, 1.0)).all():
        raise ValueError("t must be binary")
    if t.min() == t.max():
        raise NoVariation()
    if not np.all(np.isfinite(z)):
        raise ValueError("z must be finite")
    return z, t


def fit_logistic(z, t):
    """Logistic regression of ``t`` on ``z`` by iteratively reweighted least
    squares, ridge-penalised on the coefficients only.
    """
    z, t = _check_inputs(z, t)
    n, k = z.shape
    mean = z.mean(axis=0)
    A = np.column_stack([np.ones(n), z - mean])
    penalty = np.full(k + 1, RIDGE)
    penalty[0] = 0.0

    p0 = t.mean()
    beta = np.zeros(k + 1)
    beta[0] = np.log(p0 / (1 - p0))
    for iteration in range(1, MAX_ITERATIONS + 1):
        eta = A @ beta
        p = expit(eta)
        w = np.clip(p * (1 - p), 1e-12, None)
        H = (A.T * w) @ A + np.diag(penalty)
        g = A.T @ (t - p) - penalty * beta
        try:
            step = np.linalg.solve(H, g)
        except np.linalg.LinAlgError:
            step = np.linalg.lstsq(H, g, rcond=None)[0]
        beta = beta + step
        if not np.all(np.isfinite(beta)):
            raise Separation()
        if np.max(np.abs(step)) < TOLERANCE:
            break
    else:
        raise Separation(description="IRLS did not converge")

    eta = A @ beta
    if k and eta[t == 0].max() < eta[t == 1].min():
        raise Separation()

    p = expit(eta)
    w = p * (1 - p)
    H = (A.T * w) @ A + np.diag(penalty)
    try:
        cov = np.linalg.inv(H)
        se = np.sqrt(np.clip(np.diag(cov)[1:], 0, None))
    except np.linalg.LinAlgError:
        se = np.full(k, np.nan)

    coef = beta[1:]
    log.debug("IRLS converged in %d iterations", iteration)
    return LogisticFit(
        intercept=float(beta[0] - mean @ coef),
        coef=coef,
        se=se,
        probabilities=p,
        iterations=iteration,
    )


def fit_propensity(z, t):
    """Fitted ``P(t = 1 | z)`` per row."""
    return fit_logistic(z, t).probabilities
