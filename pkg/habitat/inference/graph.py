import logging

import networkx as nx

from habitat.consts import OUTCOME

from .errors import BackdoorViolation
from .errors import UnknownNode

log = logging.getLogger(__name__)


def with_outcome(dag, outcome=OUTCOME):
    """Climate graph plus an outcome node with an edge from every climate
    variable. Presence never points back into climate.
    """
    graph = dag.to_networkx() if hasattr(dag, "to_networkx") else nx.DiGraph(dag)
    variables = list(graph.nodes)
    graph.add_node(outcome)
    graph.add_edges_from((var, outcome) for var in variables)
    return graph


def _check_nodes(graph, *nodes):
    for node in nodes:
        if node not in graph:
            raise UnknownNode(node)


def d_separated(graph, x, y, z=()):
    """Whether ``z`` blocks every path between ``x`` and ``y``. Decided on
    the moral graph of the ancestral set of ``{x, y} | z``.
    """
    z = set(z)
    _check_nodes(graph, x, y, *z)
    if x == y:
        raise ValueError("x and y must be distinct")
    if x in z or y in z:
        raise ValueError("z must not contain x or y")

    relevant = {x, y} | z
    for node in list(relevant):
        relevant |= nx.ancestors(graph, node)
    moral = nx.moral_graph(graph.subgraph(relevant))
    moral.remove_nodes_from(z)
    return not nx.has_path(moral, x, y)


def backdoor_adjustment_set(graph, treatment, outcome=OUTCOME):
    """Parents of ``treatment`` among the climate variables, verified
    against the backdoor criterion.

    :param graph: climate graph with the outcome node, see :func:`with_outcome`
    :return: list of variable names in graph order
    """
    _check_nodes(graph, treatment, outcome)
    adjustment = [node for node in graph.predecessors(treatment) if node != outcome]
    order = {node: i for i, node in enumerate(graph.nodes)}
    adjustment.sort(key=order.__getitem__)

    descendants = nx.descendants(graph, treatment)
    offending = [node for node in adjustment if node in descendants]
    if offending:
        raise BackdoorViolation(
            description=f"{offending} descend from {treatment}; the graph is cyclic"
        )

    truncated = graph.copy()
    truncated.remove_edges_from(list(graph.out_edges(treatment)))
    if not d_separated(truncated, treatment, outcome, adjustment):
        raise BackdoorViolation(
            description=f"{adjustment} leaves a backdoor path from {treatment} to {outcome}"
        )
    log.debug("Adjustment set for %s: %s", treatment, adjustment)
    return adjustment
