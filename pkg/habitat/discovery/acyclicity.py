import numpy as np
import scipy.linalg as slin

from .errors import NonSquare


def acyclicity_h(W):
    """Continuous acyclicity measure and its gradient.

    ``h(W) = tr(exp(W * W)) - d`` is zero iff the support of ``W`` is
    acyclic; ``grad = exp(W * W).T * 2W``. The matrix exponential uses
    scaling and squaring.

    :return: ``(h, grad)``
    """
    W = np.asarray(W, dtype=float)
    if W.ndim != 2 or W.shape[0] != W.shape[1]:
        raise NonSquare(W.shape)
    E = slin.expm(W * W)
    h = float(np.trace(E) - W.shape[0])
    return h, E.T * W * 2


def least_squares_loss(W, X):
    """``(1/2n) ||X - XW||_F^2`` and its gradient with respect to ``W``."""
    n = X.shape[0]
    R = X - X @ W
    loss = 0.5 / n * float((R**2).sum())
    return loss, -1.0 / n * X.T @ R
