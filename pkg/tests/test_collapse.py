"""The concentration procedure: pair selection, chain moves, witnesses, audits."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coverpebbling import (
    Distribution,
    GoalDistribution,
    Graph,
    NodeStatus,
    ProofViolationError,
    ValuedDistribution,
    build_graph,
    can_cover,
    chain_move,
    classify,
    collapse_witness,
    cost_from,
    cycle_graph,
    efficiency_audit,
    path_graph,
    select_fat_thin_pair,
)

from .conftest import connected_graphs, distributions_on, goals_on

PROPERTY_SETTINGS = settings(max_examples=60, deadline=None)


def _unit(counts) -> ValuedDistribution:
    return ValuedDistribution.unit(Distribution(counts))


class TestSelectPair:
    def test_nearest_pair_wins(self):
        g = path_graph(4)
        vd = _unit((0, 1, 3, 1))
        assert select_fat_thin_pair(g, vd, GoalDistribution.ones(4)) == (2, 0)
        vd = _unit((0, 3, 1, 1))
        assert select_fat_thin_pair(g, vd, GoalDistribution.ones(4)) == (1, 0)

    def test_distance_ties_break_to_least_fat_then_least_thin(self):
        g = cycle_graph(4)
        w = GoalDistribution.ones(4)
        # fat at 1 and 3, thin at 0 and 2, all at distance 1
        assert select_fat_thin_pair(g, _unit((0, 2, 0, 2)), w) == (1, 0)
        # single fat node adjacent to two thin nodes
        assert select_fat_thin_pair(g, _unit((0, 4, 0, 1)), w) == (1, 0)

    def test_none_without_a_fat_or_thin_node(self):
        g = path_graph(3)
        w = GoalDistribution.ones(3)
        assert select_fat_thin_pair(g, _unit((1, 1, 1)), w) is None
        assert select_fat_thin_pair(g, _unit((0, 1, 1)), w) is None
        assert select_fat_thin_pair(g, _unit((2, 1, 1)), w) is None

    def test_directed_distances_steer_selection(self, two_branch_digraph):
        w = GoalDistribution.ones(5)
        vd = _unit((1, 1, 1, 1, 4))
        # node 4's nearest thin... none are thin; make node 0 thin instead
        vd = _unit((0, 1, 1, 1, 4))
        # d(4,0)=3 via the stem even though 0 feeds 4 directly
        assert select_fat_thin_pair(two_branch_digraph, vd, w) == (4, 0)


class TestChainMove:
    def test_single_edge_chain(self):
        g = path_graph(2)
        step = chain_move(g, _unit((0, 2)), GoalDistribution.ones(2), 1, 0)
        assert step.path == (1, 0)
        assert step.arrival_value == 2
        assert step.distribution.values == ((2,), ())

    def test_long_chain_sweeps_inner_pebbles(self):
        g = path_graph(5)
        step = chain_move(g, _unit((17, 1, 1, 1, 0)), GoalDistribution.ones(5), 0, 4)
        counts = step.distribution.counts()
        assert counts == Distribution((15, 0, 0, 0, 1))
        assert step.arrival_value == 5
        assert step.arrival_value <= 2 ** 4

    def test_arrival_value_sums_parents_and_residents(self):
        g = path_graph(3)
        step = chain_move(g, _unit((4, 1, 0)), GoalDistribution.ones(3), 0, 2)
        assert step.arrival_value == 3
        assert step.distribution.values == ((1, 1), (), (3,))

    def test_source_must_be_fat(self):
        g = path_graph(2)
        with pytest.raises(ProofViolationError):
            chain_move(g, _unit((1, 0)), GoalDistribution.ones(2), 0, 1)

    def test_target_must_be_thin(self):
        g = path_graph(2)
        with pytest.raises(ProofViolationError):
            chain_move(g, _unit((3, 1)), GoalDistribution.ones(2), 0, 1)

    def test_inner_nodes_must_be_perfect(self):
        g = path_graph(3)
        with pytest.raises(ProofViolationError):
            chain_move(g, _unit((4, 0, 0)), GoalDistribution.ones(3), 0, 2)

    def test_departing_pebbles_must_be_unit_valued(self):
        g = path_graph(2)
        vd = ValuedDistribution(((2, 2), ()))
        with pytest.raises(ProofViolationError):
            chain_move(g, vd, GoalDistribution.ones(2), 0, 1)

    def test_directed_chain_follows_arcs(self, two_branch_digraph):
        w = GoalDistribution.ones(5)
        step = chain_move(two_branch_digraph, _unit((0, 1, 1, 1, 4)), w, 4, 0)
        assert step.path == (4, 3, 2, 0)
        assert step.distribution.counts() == Distribution((1, 1, 0, 0, 2))
        assert step.arrival_value == 4


class TestEfficiencyAudit:
    def test_unit_lift_is_efficient(self):
        g = path_graph(3)
        assert efficiency_audit(g, _unit((4, 1, 0)), GoalDistribution.ones(3))

    def test_vacuous_without_fat_nodes(self):
        g = path_graph(2)
        vd = ValuedDistribution(((), (16,)))
        assert efficiency_audit(g, vd, GoalDistribution.ones(2))

    def test_heavy_pebble_on_a_fat_node_fails(self):
        g = path_graph(2)
        vd = ValuedDistribution(((3, 1), (1,)))
        assert not efficiency_audit(g, vd, GoalDistribution.ones(2))

    def test_bound_grows_with_distance_from_fat(self):
        g = path_graph(3)
        w = GoalDistribution.ones(3)
        assert efficiency_audit(g, ValuedDistribution(((1, 1), (2,), (4,))), w)
        assert not efficiency_audit(g, ValuedDistribution(((1, 1), (2,), (8,))), w)

    def test_holds_after_every_chain_in_a_run(self):
        g = path_graph(4)
        report = collapse_witness(g, Distribution((14, 0, 0, 0)))
        assert report.iterations
        assert all(flags["efficiency_condition"] for flags in report.audit)


class TestCollapseWitness:
    def test_edge_graph(self):
        report = collapse_witness(path_graph(2), Distribution((0, 2)))
        assert report.witness == 1
        assert cost_from(path_graph(2), 1) == 3 > 2
        assert [it.pair for it in report.iterations] == [(1, 0)]
        assert report.audit_passed

    def test_no_fat_node_falls_back_to_least_id(self):
        report = collapse_witness(path_graph(2), Distribution((1, 0)))
        assert report.witness == 0
        assert report.iterations == ()

    def test_fat_but_nothing_thin_stops_immediately(self):
        report = collapse_witness(path_graph(2), Distribution((3, 1)))
        assert report.iterations == ()
        assert report.witness == 0

    def test_two_branch_digraph_simple_distribution(self, two_branch_digraph):
        dist = Distribution.simple(5, 4, 22)
        assert not can_cover(two_branch_digraph, dist).coverable
        report = collapse_witness(two_branch_digraph, dist)
        assert report.witness == 4
        assert cost_from(two_branch_digraph, 4) == 23 > 22
        assert report.audit_passed

    def test_value_is_conserved_to_the_end(self):
        dist = Distribution((6, 0, 0, 8))
        report = collapse_witness(path_graph(4), dist)
        assert report.final_distribution.total_value == dist.total
        assert all(flags["total_value_conserved"] for flags in report.audit)

    def test_fat_pebble_total_strictly_decreases(self):
        report = collapse_witness(path_graph(4), Distribution((14, 0, 0, 0)))
        totals = [it.fat_pebble_total_before for it in report.iterations]
        totals.append(report.iterations[-1].fat_pebble_total_after)
        assert all(a > b for a, b in zip(totals, totals[1:]))

    def test_iteration_count_bounded_by_half_the_pebbles(self):
        dist = Distribution((20, 0, 1, 0))
        report = collapse_witness(path_graph(4), dist)
        assert len(report.iterations) <= dist.total // 2

    def test_terminates_on_coverable_input_without_a_guarantee(self):
        # one chain fills node 1; the surplus on node 0 then has nowhere to go
        report = collapse_witness(path_graph(2), Distribution((9, 0)))
        assert report.witness == 0
        assert report.audit_passed
        assert [it.pair for it in report.iterations] == [(0, 1)]
        assert report.final_distribution.counts() == Distribution((7, 1))

    def test_weighted_goal(self):
        # covering (1,2,1) from the middle costs 6, so 5 pebbles there fail
        w = GoalDistribution([1, 2, 1])
        dist = Distribution((0, 5, 0))
        assert not can_cover(path_graph(3), dist, w).coverable
        report = collapse_witness(path_graph(3), dist, w)
        assert report.witness == 1
        assert cost_from(path_graph(3), report.witness, w) > dist.total
        assert report.audit_passed

    def test_report_serializes_to_plain_json_types(self):
        report = collapse_witness(path_graph(3), Distribution((6, 0, 0)))
        doc = report.as_dict()
        assert set(doc) == {"witness", "iterations", "final_distribution", "audit"}
        assert doc["witness"] == report.witness
        assert all(
            set(it) == {
                "pair",
                "path",
                "new_pebble_value",
                "fat_pebble_total_before",
                "fat_pebble_total_after",
            }
            for it in doc["iterations"]
        )
        assert doc["final_distribution"] == [list(vs) for vs in report.final_distribution.values]

    @given(data=st.data(), g=connected_graphs(max_nodes=4))
    @PROPERTY_SETTINGS
    def test_run_invariants_on_random_inputs(self, data, g: Graph):
        dist = data.draw(distributions_on(g.node_count, max_total=8))
        goal = data.draw(goals_on(g.node_count, max_entry=2))
        report = collapse_witness(g, dist, goal)
        assert report.audit_passed
        assert len(report.iterations) <= dist.total // 2
        assert report.final_distribution.total_value == dist.total
        final = report.final_distribution.counts()
        # ran to exhaustion: nothing fat remains, or nothing thin ever existed
        no_fat = all(
            classify(final, goal, v) is not NodeStatus.FAT for v in range(g.node_count)
        )
        no_thin = all(
            classify(final, goal, v) is not NodeStatus.THIN for v in range(g.node_count)
        )
        assert no_fat or no_thin
        if not can_cover(g, dist, goal).coverable:
            assert cost_from(g, report.witness, goal) > dist.total

    @given(data=st.data())
    @PROPERTY_SETTINGS
    def test_simple_distribution_witness_is_its_own_node(self, data):
        # one pebble short of the cost from v, all on v: v must be the witness
        g = data.draw(connected_graphs(min_nodes=2, max_nodes=5))
        v = data.draw(st.integers(0, g.node_count - 1))
        need = cost_from(g, v)
        dist = Distribution.simple(g.node_count, v, need - 1)
        report = collapse_witness(g, dist)
        assert report.witness == v
