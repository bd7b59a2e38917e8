import os
import sys

import networkx as nx
import pytest
from hypothesis import given, settings

# Adiciona o diretório raiz ao path para importação
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from graphs.enumeration import enumerate_connected
from graphs.generators import cartesian, complete, cycle, empty, icosahedron, path, petersen, star
from graphs.graph import Graph, popcount
from graphs.invariants import (
    bipartition,
    chromatic_number,
    hamiltonian_path,
    independence_number,
    independent_sets_of_size,
    is_connected,
    product_ham_path,
    structure_checks,
)
from tests.helpers import graphs, to_networkx
from utils.errors import SearchCapExceeded


def _is_ham_path(g: Graph, walk) -> bool:
    return sorted(walk) == list(range(g.n)) and all(g.has_edge(a, b) for a, b in zip(walk, walk[1:]))


class TestIndependence:
    def test_cycle5(self):
        alpha, maximum = independence_number(cycle(5))
        assert alpha == 2
        assert len(maximum) == 5
        assert maximum == sorted(maximum)

    def test_star_and_complete(self):
        assert independence_number(star(4)) == (4, [0b11110])
        assert independence_number(complete(5))[0] == 1
        assert independence_number(empty(3)) == (3, [0b111])

    def test_sets_of_size(self):
        assert list(independent_sets_of_size(path(4), 2)) == [0b0101, 0b1001, 0b1010]
        assert list(independent_sets_of_size(path(4), 3)) == []

    def test_cap(self):
        with pytest.raises(SearchCapExceeded):
            independence_number(path(5), cap=4)

    @settings(max_examples=120, deadline=None)
    @given(graphs(max_n=10))
    def test_matches_complement_cliques(self, g):
        alpha, maximum = independence_number(g)
        cliques = [c for c in nx.find_cliques(nx.complement(to_networkx(g)))]
        best = max(len(c) for c in cliques)
        assert alpha == best
        assert len(maximum) == sum(1 for c in cliques if len(c) == best)
        assert all(g.is_independent(s) and popcount(s) == alpha for s in maximum)


class TestColoringAndStructure:
    @pytest.mark.parametrize(
        "g,chi",
        [(complete(4), 4), (cycle(5), 3), (cycle(6), 2), (petersen(), 3), (empty(3), 1), (icosahedron(), 4)],
    )
    def test_chromatic_number(self, g, chi):
        assert chromatic_number(g) == chi

    @pytest.mark.parametrize("n", [1, 2, 3, 4, pytest.param(5, marks=pytest.mark.slow)])
    @pytest.mark.parametrize("k", [2, 3, 4])
    def test_clique_product_covers_every_copy_iff_colourable(self, n, k):
        # α(G□K_k) = |V(G)| exatamente quando G tem coloração própria com k cores
        for g in enumerate_connected(n):
            alpha, _ = independence_number(cartesian(g, complete(k))[0])
            assert alpha <= g.n
            assert (alpha == g.n) == (chromatic_number(g) <= k), g.edges()

    def test_connectivity(self):
        assert is_connected(path(4))
        assert not is_connected(empty(2))
        assert is_connected(Graph(0, []))

    def test_bipartition(self):
        assert bipartition(path(3)) == (0b101, 0b010)
        assert bipartition(cycle(5)) is None

    @settings(max_examples=80, deadline=None)
    @given(graphs(max_n=10))
    def test_bipartition_matches_networkx(self, g):
        assert (bipartition(g) is not None) == nx.is_bipartite(to_networkx(g))


class TestHamiltonianPaths:
    def test_ladder(self):
        ladder, _ = cartesian(path(2), path(3))
        assert hamiltonian_path(ladder) == [0, 1, 2, 5, 4, 3]

    def test_no_path(self):
        assert hamiltonian_path(star(3)) is None
        assert hamiltonian_path(empty(2)) is None
        assert hamiltonian_path(empty(1)) == [0]

    def test_cap(self):
        with pytest.raises(SearchCapExceeded):
            hamiltonian_path(path(5), cap=4)

    def test_snake_in_product(self):
        walk = product_ham_path([0, 1], 3)
        assert walk == [0, 3, 4, 1, 2, 5]
        ladder, _ = cartesian(path(2), path(3))
        assert _is_ham_path(ladder, walk)

    @pytest.mark.parametrize("k", [2, 3, 4])
    def test_snake_for_cycle(self, k):
        g = cycle(4)
        product, _ = cartesian(g, path(k))
        assert _is_ham_path(product, product_ham_path(hamiltonian_path(g), k))

    def test_structure_checks(self):
        report = structure_checks(cycle(4))
        assert report.connected
        assert report.bipartition == ([0, 2], [1, 3])
        assert _is_ham_path(cycle(4), report.ham_path)

        capped = structure_checks(cycle(4), hampath_cap=3)
        assert capped.ham_path is None
        assert capped.ham_path_error is not None
