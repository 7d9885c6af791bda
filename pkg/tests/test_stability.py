"""Chromatic stability: verdicts, stability numbers, exhaustive small corpora."""

from __future__ import annotations

import itertools

import pytest

from chromatic_zagreb.coloring import chromatic_number, _bipartition
from chromatic_zagreb.corpus import (
    connected_bipartite_graphs,
    labeled_connected_bipartite_graphs,
)
from chromatic_zagreb.graph import Graph
from chromatic_zagreb.stability import (
    StabilityBudgetExceeded,
    is_chromatically_stable,
    is_complete_bipartite,
    stability_number_bipartite,
    stability_number_bruteforce,
    stability_report,
)

from conftest import complete, cycle, path, star


def double_star_3_4() -> Graph:
    """Two adjacent centers, one with three leaves, one with two."""
    return Graph(7, [(0, 3), (0, 4), (0, 5), (0, 6), (1, 6), (2, 6)])


class TestCompleteBipartite:
    @pytest.mark.parametrize("g,expected", [
        (cycle(4), True),        # C4 is the balanced complete bipartite graph on 4
        (path(4), False),
        (Graph(5, [(i, j) for i in (0, 1) for j in (2, 3, 4)]), True),  # K_{2,3}
        (complete(3), False),
        (star(5), True),         # stars are complete bipartite
        (Graph(4, [(0, 1), (2, 3)]), False),
        (Graph(1), False),
    ])
    def test_known(self, g, expected):
        assert is_complete_bipartite(g) == expected


class TestStabilityVerdict:
    def test_complete_bipartite_unstable(self):
        for a, b in [(1, 3), (2, 2), (2, 3), (3, 3), (1, 6)]:
            g = Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])
            assert is_chromatically_stable(g) is False

    def test_p4_stable(self):
        assert is_chromatically_stable(path(4)) is True

    def test_complete_minus_edge_unstable(self):
        for n in (3, 4, 5):
            g = Graph(n, [e for e in complete(n).edges if e != (0, 1)])
            assert is_chromatically_stable(g) is False

    def test_complete_returns_none(self):
        assert is_chromatically_stable(complete(4)) is None

    def test_even_cycles_stable_odd_not_two_chromatic(self):
        assert is_chromatically_stable(cycle(4)) is False  # = K_{2,2}
        assert is_chromatically_stable(cycle(6)) is True
        assert chromatic_number(cycle(5)) == 3

    def test_order_one_rejected(self):
        with pytest.raises(ValueError):
            is_chromatically_stable(Graph(1))


class TestStabilityNumber:
    @pytest.mark.parametrize("g,rho", [(path(4), 1), (path(5), 2), (cycle(6), 3)])
    def test_closed_form(self, g, rho):
        assert stability_number_bipartite(g) == rho

    @pytest.mark.parametrize("g,rho", [(path(4), 1), (path(5), 2), (cycle(6), 3)])
    def test_bruteforce(self, g, rho):
        assert stability_number_bruteforce(g) == rho

    def test_closed_form_preconditions(self):
        with pytest.raises(ValueError):
            stability_number_bipartite(cycle(4))  # already complete bipartite
        with pytest.raises(ValueError):
            stability_number_bipartite(complete(3))  # not 2-chromatic
        with pytest.raises(ValueError):
            stability_number_bipartite(Graph(4, [(0, 1), (2, 3)]))  # disconnected

    def test_bruteforce_preconditions(self):
        with pytest.raises(ValueError):
            stability_number_bruteforce(star(4))  # unstable input
        with pytest.raises(StabilityBudgetExceeded):
            stability_number_bruteforce(path(12))
        with pytest.raises(StabilityBudgetExceeded):
            stability_number_bruteforce(path(7), max_subsets=3)

    def test_double_star_breaks_the_closed_form(self):
        # completing the two centers against all leaves yields the
        # unstable complete tripartite graph after 5 additions, one
        # fewer than the cross-partition count 3*4 - 6 = 6
        g = double_star_3_4()
        assert stability_number_bipartite(g) == 6
        assert stability_number_bruteforce(g) == 5

    def test_closed_form_never_below_bruteforce(self):
        for _, g in connected_bipartite_graphs(6):
            if is_complete_bipartite(g):
                continue
            assert stability_number_bipartite(g) >= stability_number_bruteforce(g)


class TestExhaustiveCorpora:
    def test_bipartite_class_counts(self):
        # counts cross-checked below against a labeled enumeration
        counts = {}
        for label, g in connected_bipartite_graphs(8):
            counts[g.order] = counts.get(g.order, 0) + 1
            assert g.is_connected()
            assert _bipartition(g.adjacency_masks, g.order) is not None
        assert counts == {2: 1, 3: 1, 4: 3, 5: 5, 6: 17, 7: 44, 8: 182}

    def test_class_enumeration_matches_labeled_dedup(self):
        # independent route: every labeled connected bipartite graph,
        # canonicalized by minimizing over all vertex permutations
        for n in range(2, 7):
            classes = set()
            for g in labeled_connected_bipartite_graphs(n):
                canon = min(
                    tuple(sorted(
                        tuple(sorted((p[u], p[v]))) for u, v in g.edges))
                    for p in itertools.permutations(range(n)))
                classes.add(canon)
            ours = sum(1 for _, g in connected_bipartite_graphs(n) if g.order == n)
            assert len(classes) == ours

    def test_characterization_exhaustive_to_order_8(self):
        for label, g in connected_bipartite_graphs(8):
            if g.size == g.order * (g.order - 1) // 2:
                continue  # K2: no non-edge to test
            assert is_chromatically_stable(g) == (not is_complete_bipartite(g)), label

    def test_intra_partition_addition_forces_chi_3(self):
        for _, g in connected_bipartite_graphs(7):
            sides = _bipartition(g.adjacency_masks, g.order)
            for side in sides:
                for u, v in itertools.combinations(sorted(side), 2):
                    if not g.has_edge(u, v):
                        assert chromatic_number(g.with_extra_edges([(u, v)])) == 3


class TestStabilityReport:
    def test_p4(self):
        r = stability_report(path(4))
        assert (r.stable, r.rho, r.method, r.rho_status) == (True, 1, "closed_form", "exact")

    def test_complete(self):
        r = stability_report(complete(5))
        assert r.perfectly_stable and r.stable is None
        assert r.method == "not_applicable" and r.rho is None

    def test_double_star_reports_true_value(self):
        r = stability_report(double_star_3_4())
        assert (r.rho, r.method, r.rho_status) == (5, "brute_force", "exact")

    def test_budget_degrades_to_upper_bound(self):
        r = stability_report(path(9))
        assert (r.rho, r.method, r.rho_status) == (20 - 8, "closed_form", "upper_bound")

    def test_unstable_has_no_rho(self):
        r = stability_report(star(4))
        assert r.stable is False and r.rho is None

    def test_chi3_stable_uses_bruteforce(self):
        # odd cycle: chi = 3; some addition preserves 3, so it is stable
        r = stability_report(cycle(5))
        assert r.chi == 3 and r.stable is True
        assert r.method == "brute_force" and r.rho is not None

    def test_disconnected_flagged(self):
        r = stability_report(Graph(4, [(0, 1), (2, 3)]))
        assert not r.connected

    def test_json_schema(self, schema_validator):
        for g in (path(4), complete(4), star(5), cycle(5)):
            schema_validator(stability_report(g).to_json_dict(),
                             "stability_report.schema.json")

    def test_verdict_lines(self):
        assert "perfectly stable" in stability_report(complete(4)).verdict_line()
        assert "unstable" in stability_report(star(4)).verdict_line()
        assert "rho=1" in stability_report(path(4)).verdict_line()
