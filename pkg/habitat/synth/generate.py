"""habitat.synth.generate.
~~~~~~~~~~~~~~~~~~~~~~~~

Linear Gaussian SEMs with known DAGs and logistic presence models with
planted effects. Every random stream is derived from ``spec.seed``.
"""

import logging
from dataclasses import dataclass

import networkx as nx
import numpy as np
from scipy.special import expit

from habitat.discovery import DataMatrix
from habitat.discovery import WeightedDag

from .errors import InvalidSyntheticSpec

log = logging.getLogger(__name__)

GRAPH_STREAM = 0
DATA_STREAM = 1
PRESENCE_STREAM = 2
ORACLE_STREAM = 3


def spawn_rng(seed, stream):
    return np.random.default_rng(np.random.SeedSequence([seed, stream]))


@dataclass(eq=False)
class SyntheticModel:
    """Sampled structure of a :class:`SyntheticSpec`: weights, noise scales
    and the topological order used for ancestral sampling.
    """

    W: np.ndarray
    sigmas: np.ndarray
    order: list
    column_names: list

    def sample(self, noise, clamp=None):
        """Propagate standard normal ``noise`` (``n x d``) through the SEM.

        :param clamp: optional ``(column, values)`` held fixed, as in ``do()``;
            ``values`` is a scalar or one value per row
        """
        X = np.zeros_like(noise)
        for j in self.order:
            if clamp is not None and j == clamp[0]:
                X[:, j] = clamp[1]
            else:
                X[:, j] = X @ self.W[:, j] + self.sigmas[j] * noise[:, j]
        return X

    def to_dag(self):
        return WeightedDag(self.W.copy(), list(self.column_names))


def _sampling_order(spec, rng):
    order = [int(node) for node in rng.permutation(spec.d)]
    if not spec.forced_edges:
        return order
    rank = {node: pos for pos, node in enumerate(order)}
    graph = nx.DiGraph()
    graph.add_nodes_from(order)
    graph.add_edges_from((i, j) for i, j, _ in spec.forced_edges)
    try:
        return list(nx.lexicographical_topological_sort(graph, key=rank.__getitem__))
    except nx.NetworkXUnfeasible as error:
        raise InvalidSyntheticSpec(description="forced edges contain a cycle") from error


def build_model(spec):
    """Random topological order, then each forward pair becomes an edge
    with probability ``expected_edges / C(d, 2)`` and a weight uniform in
    ``+-weight_range``.
    """
    rng = spawn_rng(spec.seed, GRAPH_STREAM)
    d = spec.d
    order = _sampling_order(spec, rng)
    p = spec.expected_edges / spec.max_edges
    lo, hi = spec.weight_range

    W = np.zeros((d, d))
    for a in range(d):
        for b in range(a + 1, d):
            include = rng.random() < p
            weight = rng.uniform(lo, hi) * rng.choice((-1.0, 1.0))
            if include:
                W[order[a], order[b]] = weight
    for i, j, weight in spec.forced_edges:
        W[i, j] = weight

    if spec.noise_sigmas:
        sigmas = np.array(spec.noise_sigmas, dtype=float)
    else:
        sigmas = rng.uniform(*spec.noise_sigma_range, size=d)
    return SyntheticModel(W, sigmas, order, spec.column_names)


def generate_sem(spec):
    """Sample the true DAG and ``spec.n`` rows of data.

    :return: ``(WeightedDag, DataMatrix)``
    """
    model = build_model(spec)
    noise = spawn_rng(spec.seed, DATA_STREAM).standard_normal((spec.n, spec.d))
    X = model.sample(noise)
    log.debug("Generated SEM with %d edges over %d variables", int((model.W != 0).sum()), spec.d)
    return model.to_dag(), DataMatrix(X, list(spec.column_names))


def presence_logits(X, spec):
    eta = np.full(X.shape[0], float(spec.intercept))
    for key, coeff in spec.presence_coeffs.items():
        eta += coeff * X[:, spec.column_index(key)]
    return eta


def generate_presence(data, spec):
    """Bernoulli presence labels with ``P(y=1) = sigmoid(intercept + sum of
    coeff_j * x_j)``.
    """
    if list(data.column_names) != spec.column_names:
        raise ValueError("data columns do not match the synthetic spec")
    probabilities = expit(presence_logits(data.X, spec))
    draws = spawn_rng(spec.seed, PRESENCE_STREAM).random(len(probabilities))
    return (draws < probabilities).astype(int)
