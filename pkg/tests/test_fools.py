import os
import random
import sys

import pytest

# Adiciona o diretório raiz ao path para importação
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from engine.fools import fools_number, is_dead, terminal_states, upper_bound_check
from engine.models import single_hole
from engine.search import PegSolver
from graphs.enumeration import enumerate_connected
from graphs.generators import cartesian, complete, complete_bipartite, cycle, empty, path, star
from graphs.graph import popcount
from graphs.invariants import independence_number, independent_sets_of_size
from strategies.certificates import replay
from utils.errors import DisconnectedGraphError, SearchCapExceeded


def _connected_up_to(n):
    return [g for k in range(1, n + 1) for g in enumerate_connected(k) if g.n >= 2]


class TestFoolsNumber:
    def test_path3(self):
        report = fools_number(path(3))
        assert report.f_value == 2
        assert report.terminal == [0, 2]
        assert report.witness_hole == 1
        assert report.witness_sequence == []
        assert report.method == "forward"

    def test_path4(self):
        assert fools_number(path(4)).f_value == 2

    def test_k2(self):
        assert fools_number(complete(2)).f_value == 1

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
    def test_complete(self, n):
        assert fools_number(complete(n)).f_value == 1

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_star(self, n):
        assert fools_number(star(n)).f_value == n

    @pytest.mark.parametrize("n,m", [(2, 2), (3, 2), (3, 3), (4, 2), (4, 3)])
    def test_complete_bipartite(self, n, m):
        assert fools_number(complete_bipartite(n, m)).f_value == n - 1

    @pytest.mark.parametrize("method", ["forward", "dual"])
    @pytest.mark.parametrize("g", [path(5), cycle(5), cycle(6), star(3), complete_bipartite(3, 2)])
    def test_witness_replays_to_dead_terminal(self, g, method):
        report = fools_number(g, method=method)
        end = replay(g, single_hole(g, report.witness_hole), report.jumps)
        assert end == report.terminal_mask
        assert is_dead(g, end)
        assert popcount(end) == report.f_value

    def test_dual_reuses_solver(self):
        g = cycle(6)
        solver = PegSolver(g)
        assert fools_number(g, method="dual", solver=solver).f_value == fools_number(g).f_value

    def test_errors(self):
        with pytest.raises(ValueError):
            fools_number(path(3), method="sideways")
        with pytest.raises(DisconnectedGraphError):
            fools_number(empty(2))
        with pytest.raises(SearchCapExceeded):
            fools_number(path(6), cap=5)


class TestDualAgreement:
    def test_forward_equals_dual_up_to_six(self):
        for g in _connected_up_to(6):
            assert fools_number(g, method="forward").f_value == fools_number(g, method="dual").f_value

    @pytest.mark.slow
    def test_forward_equals_dual_seven(self):
        for g in enumerate_connected(7):
            assert fools_number(g, method="forward").f_value == fools_number(g, method="dual").f_value


class TestTerminalStates:
    def test_path3(self):
        assert terminal_states(path(3)) == {2: [0b101], 1: [0b001, 0b100]}

    def test_largest_group_is_f(self):
        for g in (path(5), cycle(5), star(4)):
            assert max(terminal_states(g)) == fools_number(g).f_value

    def test_dead_states_are_independent(self):
        for g in _connected_up_to(6):
            for states in terminal_states(g).values():
                assert all(g.is_independent(s) for s in states)

    @pytest.mark.slow
    def test_dead_states_are_independent_seven(self):
        rng = random.Random(11)
        sample = rng.sample(list(enumerate_connected(7)), 120)
        for g in sample:
            for states in terminal_states(g).values():
                assert all(g.is_independent(s) for s in states)

    def test_is_dead(self):
        assert is_dead(path(3), 0b101)
        assert not is_dead(path(3), 0b110)
        # sem buraco não há salto, mesmo com pinos vizinhos
        assert is_dead(complete(2), 0b11)

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6, pytest.param(7, marks=pytest.mark.slow)])
    def test_every_dead_configuration_with_a_hole_is_independent(self, n):
        for g in enumerate_connected(n):
            for c in range(g.full_mask):
                if is_dead(g, c):
                    assert g.is_independent(c), (g.edges(), c)


class TestUpperBound:
    def test_star_does_not_apply(self):
        report = upper_bound_check(star(3))
        assert report.alpha == 3
        assert not report.prop2_applies
        assert report.maximum_sets == 1

    def test_square(self):
        report = upper_bound_check(cycle(4))
        assert report.alpha == 2
        assert report.prop2_applies
        assert report.maximum_sets == 2

    def test_ladder(self):
        ladder, _ = cartesian(path(2), path(4))
        report = upper_bound_check(ladder)
        assert report.alpha == 4
        assert report.maximum_sets == len(list(independent_sets_of_size(ladder, 4))) == 2
        assert report.prop2_applies

    def test_bounds_hold_up_to_six(self):
        for g in _connected_up_to(6):
            f = fools_number(g).f_value
            report = upper_bound_check(g)
            assert f <= report.alpha == independence_number(g)[0]
            if report.prop2_applies:
                assert f <= report.alpha - 1
