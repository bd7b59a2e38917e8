import os
import random
import sys
from itertools import combinations

import networkx as nx
import pytest

# Adiciona o diretório raiz ao path para importação
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from graphs.enumeration import canonical_form, enumerate_all, enumerate_connected, relabel
from graphs.generators import cycle, petersen
from tests.helpers import to_networkx
from utils.errors import GraphError


class TestEnumeration:
    @pytest.mark.parametrize("n,count", [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34), (6, 156)])
    def test_all_graphs(self, n, count):
        assert len(enumerate_all(n)) == count

    @pytest.mark.parametrize("n,count", [(1, 1), (2, 1), (3, 2), (4, 6), (5, 21), (6, 112)])
    def test_connected_graphs(self, n, count):
        assert len(list(enumerate_connected(n))) == count

    @pytest.mark.slow
    def test_seven_vertices(self):
        assert len(enumerate_all(7)) == 1044
        assert len(list(enumerate_connected(7))) == 853

    def test_atlas_agrees(self):
        # o atlas do networkx lista todos os grafos com até 7 vértices
        atlas = nx.graph_atlas_g()
        for n in range(1, 6):
            assert len(enumerate_all(n)) == sum(1 for g in atlas if g.number_of_nodes() == n)

    def test_pairwise_non_isomorphic(self):
        graphs = [to_networkx(g) for g in enumerate_all(5)]
        for a, b in combinations(graphs, 2):
            assert not nx.is_isomorphic(a, b)

    def test_bounds(self):
        with pytest.raises(GraphError):
            enumerate_all(0)
        with pytest.raises(GraphError):
            enumerate_all(8)


class TestCanonicalForm:
    @pytest.mark.parametrize("g", [cycle(6), petersen()])
    def test_invariant_under_relabelling(self, g):
        rng = random.Random(7)
        code, _ = canonical_form(g)
        for _ in range(5):
            order = list(range(g.n))
            rng.shuffle(order)
            assert canonical_form(relabel(g, tuple(order)))[0] == code

    def test_representatives_are_canonical(self):
        for g in enumerate_all(4):
            _, order = canonical_form(g)
            assert relabel(g, order) == g
