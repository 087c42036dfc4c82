import logging

import numpy as np

log = logging.getLogger(__name__)


def point_biserial(x, y):
    """Pearson correlation between a continuous ``x`` and a binary ``y``;
    zero when either is constant.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    sx = x.std()
    sy = y.std()
    if sx == 0 or sy == 0:
        return 0.0
    return float(((x - x.mean()) * (y - y.mean())).mean() / (sx * sy))


def rank_variables(samples):
    """``(name, r)`` pairs ordered by ``|r|`` descending, then by column."""
    samples.check_outcome()
    scores = [
        (name, point_biserial(samples.X[:, i], samples.presence))
        for i, name in enumerate(samples.column_names)
    ]
    order = sorted(range(len(scores)), key=lambda i: (-abs(scores[i][1]), i))
    return [scores[i] for i in order]


def select_treatments(samples, k=5):
    """Top ``k`` variables by absolute point-biserial correlation with
    presence.
    """
    if not 1 <= k <= len(samples.column_names):
        raise ValueError(f'"k" must be in [1, {len(samples.column_names)}]')
    ranked = rank_variables(samples)[:k]
    log.info("Treatments: %s", ", ".join(f"{name} (r={r:+.3f})" for name, r in ranked))
    return [name for name, _ in ranked]
