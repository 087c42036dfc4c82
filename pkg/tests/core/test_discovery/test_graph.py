from unittest import TestCase

import numpy as np
import pytest

from habitat.discovery import CycleDetected
from habitat.discovery import WeightedDag
from habitat.discovery import find_cycle
from habitat.discovery import is_acyclic
from habitat.discovery import structural_hamming_distance
from habitat.discovery import topological_order


def dag_from_edges(d, edges, names=None):
    W = np.zeros((d, d))
    for i, j, *w in edges:
        W[i, j] = w[0] if w else 1.0
    return WeightedDag(W, names or [f"v{i}" for i in range(d)])


class TopologicalOrderTest(TestCase):
    def test_chain(self):
        self.assertEqual(topological_order(dag_from_edges(3, [(0, 1), (1, 2)])), [0, 1, 2])

    def test_tie_break(self):
        self.assertEqual(topological_order(dag_from_edges(3, [])), [0, 1, 2])
        self.assertEqual(topological_order(dag_from_edges(4, [(3, 0), (2, 1)])), [2, 1, 3, 0])

    def test_two_cycle(self):
        W = np.array([[0.0, 1.0], [1.0, 0.0]])
        with pytest.raises(CycleDetected) as exc:
            topological_order(W)
        self.assertEqual(exc.value.cycle, [0, 1])
        self.assertFalse(is_acyclic(W))

    def test_cycle_behind_a_root(self):
        W = np.zeros((4, 4))
        W[0, 1] = W[1, 2] = W[2, 3] = W[3, 1] = 1.0
        with pytest.raises(CycleDetected) as exc:
            topological_order(W)
        self.assertEqual(exc.value.cycle, [1, 2, 3])

    def test_find_cycle_none(self):
        self.assertEqual(find_cycle(np.zeros((3, 3), dtype=bool)), [])


class WeightedDagTest(TestCase):
    def test_json(self):
        dag = dag_from_edges(3, [(0, 2, 0.5), (1, 2, -1.25)], ["BIO1", "BIO6", "BIO11"])
        data = dag.to_json()
        self.assertEqual(data["variables"], ["BIO1", "BIO6", "BIO11"])
        self.assertEqual(data["edges"][1], {"from": 1, "to": 2, "weight": -1.25})
        copy = WeightedDag.from_json(data)
        np.testing.assert_array_equal(copy.W, dag.W)
        self.assertEqual(copy.parents(2), [0, 1])

    def test_dot(self):
        dag = dag_from_edges(2, [(0, 1, 0.8)], ["BIO11", "BIO6"])
        self.assertEqual(
            dag.to_dot(),
            'digraph habitat {\n  "BIO11";\n  "BIO6";\n  "BIO11" -> "BIO6" [label="0.800"];\n}\n',
        )

    def test_networkx(self):
        graph = dag_from_edges(3, [(0, 1, 2.0)], ["a", "b", "c"]).to_networkx()
        self.assertEqual(set(graph.nodes), {"a", "b", "c"})
        self.assertEqual(graph["a"]["b"]["weight"], 2.0)

    def test_invalid(self):
        with pytest.raises(ValueError):
            WeightedDag(np.eye(2), ["a", "b"])
        with pytest.raises(ValueError):
            WeightedDag(np.zeros((2, 2)), ["a"])


class HammingDistanceTest(TestCase):
    def test_counts(self):
        truth = dag_from_edges(3, [(0, 1), (1, 2)]).W
        self.assertEqual(structural_hamming_distance(truth, truth), 0)
        self.assertEqual(structural_hamming_distance(truth, dag_from_edges(3, [(1, 0), (1, 2)]).W), 1)
        self.assertEqual(structural_hamming_distance(truth, dag_from_edges(3, [(0, 1)]).W), 1)
        self.assertEqual(structural_hamming_distance(truth, dag_from_edges(3, [(0, 1), (1, 2), (0, 2)]).W), 1)
        self.assertEqual(structural_hamming_distance(truth, np.zeros((3, 3))), 2)
