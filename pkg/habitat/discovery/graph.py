import heapq

import networkx as nx
import numpy as np

from .errors import CycleDetected


def _support(dag):
    W = dag.W if hasattr(dag, "W") else dag
    return np.asarray(W) != 0


def topological_order(dag):
    """Kahn's algorithm over the support of ``dag``; ties go to the
    smallest index.

    :param dag: :class:`WeightedDag` or adjacency matrix
    :return: list of variable indices
    """
    support = _support(dag)
    d = support.shape[0]
    indegree = support.sum(axis=0).astype(int)
    ready = [i for i in range(d) if indegree[i] == 0]
    heapq.heapify(ready)
    order = []
    while ready:
        i = heapq.heappop(ready)
        order.append(i)
        for j in np.nonzero(support[i])[0]:
            indegree[j] -= 1
            if indegree[j] == 0:
                heapq.heappush(ready, int(j))

    if len(order) < d:
        raise CycleDetected(find_cycle(support, exclude=set(order)))
    return order


def find_cycle(support, exclude=()):
    """Return the nodes of one cycle in the support, or an empty list."""
    graph = nx.DiGraph()
    rows, cols = np.nonzero(support)
    graph.add_edges_from(
        (int(i), int(j)) for i, j in zip(rows, cols) if i not in exclude and j not in exclude
    )
    if not graph:
        return []
    try:
        edges = nx.find_cycle(graph)
    except nx.NetworkXNoCycle:
        return []
    cycle = [u for u, _ in edges]
    start = cycle.index(min(cycle))
    return cycle[start:] + cycle[:start]


def is_acyclic(dag):
    try:
        topological_order(dag)
    except CycleDetected:
        return False
    return True
