"""Structural criteria for the neighborhood and complemented-neighborhood labelings.

Every criterion here has a second, definitional route: build the actual
labeling and run the interference predicate.  The tests keep both routes in
play so neither can drift.
"""

import random

import pytest

import interfere as itf
from interfere import (
    Graph,
    complemented_complete,
    complemented_interference_of,
    complemented_labeling,
    complete,
    cycle,
    is_complete_interference,
    is_interference,
    mask_of,
    matching,
    neighborhood_all_but_one,
    neighborhood_complete,
    neighborhood_interference_of,
    neighborhood_labeling,
    neighborhood_singleton,
    path,
    two_path_complete,
    wheel,
)


def oracle_interferes(G, D, labeling_report):
    return labeling_report.valid and is_interference(
        complete(G.n), D, labeling_report.labeling
    )


class TestLabelingReports:
    def test_square_is_not_injective(self):
        rep = neighborhood_labeling(cycle(4))
        assert not rep.injective and not rep.valid
        u, v = rep.witness
        assert u != v and cycle(4).adj[u] == cycle(4).adj[v]

    def test_isolated_vertex_gives_empty_label(self):
        rep = neighborhood_labeling(complete(1))
        assert rep.has_empty_label and not rep.valid

    def test_pentagon_is_clean_both_ways(self):
        assert neighborhood_labeling(cycle(5)).valid
        assert complemented_labeling(cycle(5)).valid

    def test_complemented_never_has_empty_label(self):
        for G in (complete(4), cycle(4), matching(2)):
            assert not complemented_labeling(G).has_empty_label

    def test_complemented_injective_iff_plain_injective(self):
        for G in itf.graphs_upto(5):
            assert (
                complemented_labeling(G).injective
                == neighborhood_labeling(G).injective
                == itf.is_point_determining(G)
            )


class TestOpenRouteEquivalence:
    @pytest.mark.parametrize("n", range(2, 6))
    def test_exhaustive_small(self, n):
        for G in itf.connected_graphs(n):
            rep = neighborhood_labeling(G)
            for D in range(1, 1 << n):
                assert neighborhood_interference_of(G, D) == oracle_interferes(
                    G, D, rep
                ), (itf.to_graph6(G), bin(D))

    def test_seeded_order_six(self):
        rng = random.Random(2026)
        for G in itf.connected_graphs(6):
            rep = neighborhood_labeling(G)
            for _ in range(40):
                D = rng.randrange(1, 1 << 6)
                assert neighborhood_interference_of(G, D) == oracle_interferes(
                    G, D, rep
                )

    def test_rejects_empty_target(self):
        with pytest.raises(ValueError):
            neighborhood_interference_of(path(3), 0)

    def test_distance_condition_fails_plainly(self):
        # far end of a path is out of reach of the target
        assert not neighborhood_interference_of(path(5), mask_of([0]))


class TestCompleteness:
    def test_wheels(self):
        for n in range(3, 9):
            assert neighborhood_complete(wheel(n)) == (n != 4)

    def test_wheel_four_fails_by_duplicate_neighborhoods(self):
        W = wheel(4)
        assert W.adj[0] == W.adj[2]
        assert not itf.is_point_determining(W)
        assert not neighborhood_labeling(W).valid

    def test_windmills_and_block_stars(self):
        for n in (3, 4):
            for m in (2, 3):
                assert neighborhood_complete(itf.windmill(n, m))
        assert neighborhood_complete(itf.husimi([3, 3]))
        assert neighborhood_complete(itf.husimi([3, 4, 5]))

    def test_pentagon_fails_for_lack_of_triangles(self):
        assert not neighborhood_complete(cycle(5))

    @pytest.mark.parametrize("n", range(2, 7))
    def test_matches_definitional_oracle(self, n):
        for G in itf.all_graphs(n):
            rep = neighborhood_labeling(G)
            want = rep.valid and is_complete_interference(rep.labeling)
            assert neighborhood_complete(G) == want, itf.to_graph6(G)


class TestTargetFamilies:
    @pytest.mark.parametrize("n", range(3, 7))
    def test_helm_crown_star_polygon(self, n):
        cases = (
            (itf.helm(n), range(n), range(n + 1, 2 * n + 1)),
            (itf.crown(n), range(n), range(n, 2 * n)),
            (itf.star_polygon(n), range(n), range(n, 2 * n)),
        )
        for G, cycle_vertices, pendant_like in cases:
            rep = neighborhood_labeling(G)
            for D in (mask_of(cycle_vertices), mask_of(pendant_like)):
                assert neighborhood_interference_of(G, D)
                assert oracle_interferes(G, D, rep)


class TestSingletonAndAllButOne:
    def test_singleton_against_oracle(self):
        for G in itf.connected_graphs_upto(5):
            if G.n < 2:
                continue
            rep = neighborhood_labeling(G)
            for v in G.vertices():
                assert neighborhood_singleton(G, v) == oracle_interferes(
                    G, 1 << v, rep
                )

    def test_all_but_one_against_oracle(self):
        for G in itf.connected_graphs_upto(5):
            if G.n < 2:
                continue
            rep = neighborhood_labeling(G)
            for v in G.vertices():
                D = G.full_mask & ~(1 << v)
                assert neighborhood_all_but_one(G, v) == oracle_interferes(G, D, rep)

    def test_wheel_four_center_fails_despite_rich_neighborhood(self):
        # the center's neighborhood induces a cycle, yet the labeling itself
        # is not injective, so no target set works
        assert neighborhood_singleton(wheel(4), 4) is False

    def test_path_end_all_but_one(self):
        assert neighborhood_all_but_one(path(5), 0)

    def test_all_but_one_requires_connected(self):
        with pytest.raises(ValueError):
            neighborhood_all_but_one(matching(2), 0)

    def test_vertex_bounds(self):
        with pytest.raises(ValueError):
            neighborhood_singleton(path(3), 3)


class TestTwoPathComplete:
    @staticmethod
    def _join_k2(H):
        """K2 on {0, 1} joined to a shifted copy of H."""
        edges = [(0, 1)] + [(a, b + 2) for a in (0, 1) for b in range(H.n)]
        edges += [(u + 2, v + 2) for u, v in H.edges]
        return Graph(H.n + 2, edges)

    def test_join_with_edge_pair_is_two_path_complete(self):
        # K2 joined to anything: both joined vertices see every other vertex
        for H in (path(3), path(4), cycle(5)):
            assert two_path_complete(self._join_k2(H))

    def test_join_completeness_still_needs_distinct_neighborhoods(self):
        # joining K2 to P3 leaves the two path ends interchangeable, so the
        # labeling is not injective and completeness fails
        G = self._join_k2(path(3))
        assert two_path_complete(G)
        assert not itf.is_point_determining(G)
        assert not neighborhood_complete(G)
        # P4 has pairwise distinct neighborhoods and the join keeps them so
        G = self._join_k2(path(4))
        assert itf.is_point_determining(G)
        assert neighborhood_complete(G)

    def test_diamond_shows_injectivity_is_needed(self):
        diamond = Graph(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
        assert two_path_complete(diamond)
        assert not itf.is_point_determining(diamond)
        assert not neighborhood_complete(diamond)

    def test_implication_with_injectivity_restored(self):
        for G in itf.connected_graphs_upto(6):
            if G.n < 2:
                continue
            if two_path_complete(G) and itf.is_point_determining(G):
                assert neighborhood_complete(G), itf.to_graph6(G)


class TestComplementedRoute:
    @pytest.mark.parametrize("n", range(2, 6))
    def test_exhaustive_small(self, n):
        for G in itf.connected_graphs(n):
            rep = complemented_labeling(G)
            for D in range(1, 1 << n):
                assert complemented_interference_of(G, D) == oracle_interferes(
                    G, D, rep
                ), (itf.to_graph6(G), bin(D))

    def test_seeded_order_six(self):
        rng = random.Random(99)
        for G in itf.connected_graphs(6):
            rep = complemented_labeling(G)
            for _ in range(40):
                D = rng.randrange(1, 1 << 6)
                assert complemented_interference_of(G, D) == oracle_interferes(
                    G, D, rep
                )

    def test_anchors(self):
        assert complemented_interference_of(cycle(5), mask_of([0]))
        assert not complemented_interference_of(cycle(3), mask_of([0]))
        assert not complemented_interference_of(cycle(4), mask_of([0]))

    @pytest.mark.parametrize("n", range(3, 11))
    def test_cycle_completeness_boundary(self, n):
        assert complemented_complete(cycle(n)) == (n >= 5)

    @pytest.mark.parametrize("n", range(2, 7))
    def test_completeness_matches_oracle(self, n):
        for G in itf.all_graphs(n):
            rep = complemented_labeling(G)
            want = rep.valid and is_complete_interference(rep.labeling)
            assert complemented_complete(G) == want, itf.to_graph6(G)


class TestSufficientRules:
    def test_exemplars(self):
        assert itf.complemented_sufficient_rule(cycle(5)) == itf.REGULAR_RULE
        assert itf.complemented_sufficient_rule(path(5)) == itf.DEGREE_SUM_RULE
        anchor = itf.from_graph6("G?Ca|W")  # two degree-4 hubs at distance two
        assert itf.complemented_sufficient_rule(anchor) == itf.DISTANCE2_RULE

    def test_rules_guard_injectivity(self):
        square_plus_isolated = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 0)])
        assert itf.complemented_sufficient_rule(square_plus_isolated) is None

    def test_fired_rule_implies_completeness(self):
        fired = 0
        for G in itf.graphs_upto(6):
            rule = itf.complemented_sufficient_rule(G)
            if rule is None:
                continue
            fired += 1
            assert complemented_complete(G), (itf.to_graph6(G), rule)
        assert fired > 0

    def test_rules_are_not_necessary(self):
        # completeness can hold while every sufficient rule stays silent;
        # the smallest such graphs have six vertices
        examples = [
            G
            for G in itf.connected_graphs(6)
            if complemented_complete(G) and itf.complemented_sufficient_rule(G) is None
        ]
        assert len(examples) == 7
        assert itf.to_graph6(examples[0]) == "E@UW"
        for n in (2, 3, 4, 5):
            assert all(
                itf.complemented_sufficient_rule(G) is not None
                for G in itf.connected_graphs(n)
                if complemented_complete(G)
            )


class TestClosedSelfcheck:
    def test_equivalence_with_closed_injectivity(self):
        for G in itf.graphs_upto(5):
            sc = itf.closed_neighborhood_selfcheck(G)
            closed = {itf.closed_neighborhood(G, u) for u in G.vertices()}
            assert sc.ok == (len(closed) == G.n)

    def test_failure_reason(self):
        sc = itf.closed_neighborhood_selfcheck(complete(2))
        assert not sc.ok and sc.reason == "NOT_INJECTIVE"

    def test_path_passes(self):
        sc = itf.closed_neighborhood_selfcheck(path(3))
        assert sc.ok and sc.reason is None
