"""habitat.discovery.notears.
~~~~~~~~~~~~~~~~~~~~~~~~~~~

Linear structure learning as continuous optimization::

    min_W  (1/2n) ||X - XW||_F^2 + lambda1 ||W||_1
    s.t.   h(W) = tr(exp(W * W)) - d = 0

solved by an augmented Lagrangian. ``W`` is split into ``W+ - W-`` with
both parts non-negative, which makes the L1 term linear, and every inner
problem is handed to L-BFGS-B.
"""

import logging

import numpy as np
import scipy.optimize as sopt

from .acyclicity import acyclicity_h
from .acyclicity import least_squares_loss
from .errors import DegenerateData
from .errors import DidNotConverge
from .graph import is_acyclic
from .models import DataMatrix
from .models import NotearsConfig
from .models import WeightedDag

log = logging.getLogger(__name__)

#: rho grows by this factor when h did not shrink enough
RHO_FACTOR = 10.0
#: required shrink factor of h between accepted outer iterations
PROGRESS_RATE = 0.25


def preprocess(data, standardize=False):
    """Center columns, and scale them to unit variance if ``standardize``."""
    X = data.X - data.X.mean(axis=0, keepdims=True)
    std = X.std(axis=0)
    constant = [data.column_names[i] for i in np.nonzero(std == 0)[0]]
    if constant:
        raise DegenerateData(description=f"zero-variance columns: {', '.join(constant)}")
    if standardize:
        X = X / std
    return DataMatrix(X, list(data.column_names))


def threshold_to_dag(W, w_threshold, step=0.05):
    """Zero weights below ``w_threshold`` in magnitude, raising the cut in
    ``step`` increments until the support is acyclic.
    """
    W = np.array(W, dtype=float)
    threshold = w_threshold
    while True:
        W_cut = np.where(np.abs(W) < threshold, 0.0, W)
        if is_acyclic(W_cut):
            return W_cut, threshold
        threshold = round(threshold + step, 10)


class StructureLearner:
    """Interface for structure learners over a :class:`DataMatrix`."""

    name = None

    def fit(self, data):
        """Learn a :class:`WeightedDag` whose support is acyclic."""
        raise NotImplementedError()


class LinearNotears(StructureLearner):
    name = "notears-linear"

    def __init__(self, config=None):
        self.config = config or NotearsConfig()

    def _objective(self, X, rho, alpha):
        cfg = self.config
        d = X.shape[1]

        def func(w):
            W = (w[: d * d] - w[d * d :]).reshape(d, d)
            loss, G_loss = least_squares_loss(W, X)
            h, G_h = acyclicity_h(W)
            obj = loss + 0.5 * rho * h * h + alpha * h + cfg.lambda1 * w.sum()
            G_smooth = G_loss + (rho * h + alpha) * G_h
            g_obj = np.concatenate(
                (G_smooth + cfg.lambda1, -G_smooth + cfg.lambda1), axis=None
            )
            return obj, g_obj

        return func

    def _solve_inner(self, X, w, rho, alpha, bounds):
        sol = sopt.minimize(
            self._objective(X, rho, alpha),
            w,
            jac=True,
            method="L-BFGS-B",
            bounds=bounds,
            options={"maxiter": self.config.max_inner_iters, "gtol": self.config.gtol},
        )
        return sol.x

    def fit(self, data):
        cfg = self.config
        data = preprocess(data, standardize=not cfg.center_only)
        X = data.X
        d = data.d

        # diagonal pinned to zero through the bounds
        bounds = [
            (0, 0) if i == j else (0, None)
            for _ in range(2)
            for i in range(d)
            for j in range(d)
        ]
        w_est = np.zeros(2 * d * d)
        rho, alpha, h = cfg.rho_init, 0.0, np.inf
        history = []

        for iteration in range(cfg.max_dual_iters):
            w_new, h_new = None, None
            while rho < cfg.rho_max:
                w_new = self._solve_inner(X, w_est, rho, alpha, bounds)
                h_new, _ = acyclicity_h((w_new[: d * d] - w_new[d * d :]).reshape(d, d))
                if h_new > PROGRESS_RATE * h:
                    rho *= RHO_FACTOR
                else:
                    break
            if w_new is None:
                break

            w_est, h = w_new, h_new
            alpha += rho * h
            history.append({"iteration": iteration, "rho": rho, "alpha": alpha, "h": h})
            log.debug("Outer iteration %d: rho=%.1e alpha=%.3e h=%.3e", iteration, rho, alpha, h)
            if h <= cfg.h_tol or rho >= cfg.rho_max:
                break

        if not h <= cfg.h_tol:
            raise DidNotConverge(h, rho)

        W_est = (w_est[: d * d] - w_est[d * d :]).reshape(d, d)
        np.fill_diagonal(W_est, 0.0)
        W_cut, threshold = threshold_to_dag(W_est, cfg.w_threshold, cfg.threshold_step)
        log.info(
            "Learned %d edges over %d variables (threshold %.2f)",
            int((W_cut != 0).sum()),
            d,
            threshold,
        )
        return WeightedDag(W_cut, list(data.column_names), threshold, history)


LEARNERS_REGISTRY = {}


def register_learner(learner_cls):
    if not learner_cls.name:
        raise ValueError(f"Invalid structure learner, {learner_cls!r}")
    LEARNERS_REGISTRY[learner_cls.name] = learner_cls


def create_learner(name="notears-linear", config=None):
    if name not in LEARNERS_REGISTRY:
        raise ValueError(f'Unknown structure learner "{name}"')
    return LEARNERS_REGISTRY[name](config)


def notears_fit(data, cfg=None):
    """Fit linear NOTEARS on ``data`` with ``cfg`` (defaults when None)."""
    return LinearNotears(cfg).fit(data)


register_learner(LinearNotears)
