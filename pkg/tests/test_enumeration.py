from math import gcd

import pytest

from curvesig import (
    Cusp,
    DeformationScenario,
    SearchBudget,
    candidate_cusps,
    count_admissible,
    enumerate_admissible,
    full_report,
    milnor_number,
)

A2 = Cusp(2, 3)


def all_multisets_with_bounded_milnor_sum(candidates, max_milnor_sum):
    """Independent oracle: every multiset of candidates with Milnor sum at
    most the bound, generated by per-candidate multiplicity counting."""
    multisets = []

    def extend(index, remaining, current):
        if index == len(candidates):
            multisets.append(tuple(current))
            return
        cusp = candidates[index]
        mu = milnor_number(cusp)
        for count in range(remaining // mu + 1):
            extend(index + 1, remaining - count * mu, current + [cusp] * count)

    extend(0, max_milnor_sum, [])
    return multisets


def brute_force_results(budget, candidates=None):
    """Unpruned reference enumeration: materialise the whole box, filter by
    the full report, sort by the canonical key."""
    if candidates is None:
        candidates = candidate_cusps(milnor_number(budget.central))
    rows = []
    for cusps in all_multisets_with_bounded_milnor_sum(
        sorted(set(candidates)), milnor_number(budget.central)
    ):
        for genus in range(budget.max_genus + 1):
            for double_points in range(budget.max_double_points + 1):
                scenario = DeformationScenario(budget.central, cusps, double_points, genus)
                report = full_report(scenario)
                if budget.require_genus_formula:
                    emitted = report.admissible
                else:
                    emitted = (
                        report.signature_bound.holds
                        and report.one_sided_bound.holds
                        and report.m_number_bound.holds
                    )
                if emitted:
                    rows.append(scenario)
    rows.sort(key=lambda s: (s.cusps, s.genus, s.double_points))
    return rows


class TestCandidateCusps:
    def test_small_bounds(self):
        assert candidate_cusps(2) == (Cusp(2, 3),)
        assert candidate_cusps(4) == (Cusp(2, 3), Cusp(2, 5))

    def test_milnor_twelve_universe(self):
        expected = {
            Cusp(2, 3), Cusp(2, 5), Cusp(2, 7), Cusp(2, 9), Cusp(2, 11), Cusp(2, 13),
            Cusp(3, 4), Cusp(3, 5), Cusp(3, 7), Cusp(4, 5),
        }
        assert set(candidate_cusps(12)) == expected

    def test_sorted_and_within_bound(self):
        pool = candidate_cusps(20)
        assert list(pool) == sorted(pool)
        assert all(milnor_number(c) <= 20 for c in pool)

    def test_misses_nothing(self):
        pool = set(candidate_cusps(24))
        for p in range(2, 27):
            for q in range(p + 1, 30):
                if gcd(p, q) == 1 and (p - 1) * (q - 1) <= 24:
                    assert Cusp(p, q) in pool


class TestEnumerateAdmissible:
    def test_trefoil_unit_budget(self):
        budget = SearchBudget(A2, max_genus=0, max_double_points=1)
        results = list(enumerate_admissible(budget))
        configs = [
            (r.scenario.cusps, r.scenario.genus, r.scenario.double_points) for r in results
        ]
        assert configs == [((), 0, 1), ((A2,), 0, 0)]

    def test_a6_budget_includes_itself_excludes_three_a2(self):
        budget = SearchBudget(Cusp(2, 7), max_genus=0, max_double_points=0)
        cusp_lists = [r.scenario.cusps for r in enumerate_admissible(budget)]
        assert (Cusp(2, 7),) in cusp_lists
        assert (A2, A2, A2) not in cusp_lists

    def test_empty_stream_without_candidates(self):
        # with the central cusp removed from the universe nothing can reach
        # the Milnor number 2 required by the genus formula at g = R = 0
        budget = SearchBudget(A2, max_genus=0, max_double_points=0)
        assert list(enumerate_admissible(budget, candidates=[])) == []

    def test_only_admissible_reports_are_emitted(self):
        budget = SearchBudget(Cusp(2, 9), max_genus=1, max_double_points=1)
        for result in enumerate_admissible(budget):
            assert result.report.admissible
            assert result.report == full_report(result.scenario)

    def test_candidate_order_does_not_matter(self):
        budget = SearchBudget(Cusp(2, 7), max_genus=0, max_double_points=1)
        forward = list(enumerate_admissible(budget, candidates=candidate_cusps(6)))
        backward = list(enumerate_admissible(budget, candidates=candidate_cusps(6)[::-1]))
        assert forward == backward


class TestCanonicalOrder:
    def test_strictly_increasing_keys(self):
        budget = SearchBudget(Cusp(2, 9), max_genus=1, max_double_points=2)
        keys = [
            (r.scenario.cusps, r.scenario.genus, r.scenario.double_points)
            for r in enumerate_admissible(budget)
        ]
        assert keys == sorted(keys)
        assert len(keys) == len(set(keys))

    def test_rerun_is_identical(self):
        budget = SearchBudget(Cusp(3, 4), max_genus=1, max_double_points=1)
        assert list(enumerate_admissible(budget)) == list(enumerate_admissible(budget))


class TestOracleEquivalence:
    @pytest.mark.parametrize("central", [A2, Cusp(2, 5), Cusp(2, 7), Cusp(3, 4)])
    def test_pruned_equals_brute_force(self, central):
        budget = SearchBudget(central, max_genus=1, max_double_points=2)
        pruned = [r.scenario for r in enumerate_admissible(budget)]
        assert pruned == brute_force_results(budget)

    def test_pruned_equals_brute_force_without_genus_formula(self):
        budget = SearchBudget(
            Cusp(2, 5), max_genus=0, max_double_points=1, require_genus_formula=False
        )
        # without the genus filter the Milnor sum is not capped, so restrict
        # both sides to the same explicit candidate pool for comparability
        pool = (A2,)
        pruned = [r.scenario for r in enumerate_admissible(budget, candidates=pool)]
        brute = brute_force_results(budget, candidates=pool)
        assert set(brute).issubset(set(pruned))
        for scenario in pruned:
            report = full_report(scenario)
            assert report.signature_bound.holds
            assert report.one_sided_bound.holds
            assert report.m_number_bound.holds


class TestCountAdmissible:
    def test_matches_examples(self):
        assert count_admissible(SearchBudget(A2, 0, 1)) == 2
        assert count_admissible(SearchBudget(A2, 0, 0, True), candidates=[]) == 0

    @pytest.mark.parametrize("central", [A2, Cusp(2, 7), Cusp(3, 4)])
    def test_equals_stream_length(self, central):
        budget = SearchBudget(central, max_genus=1, max_double_points=1)
        assert count_admissible(budget) == len(list(enumerate_admissible(budget)))


class TestBudgetValidation:
    def test_rejects_negative_limits(self):
        with pytest.raises(ValueError):
            SearchBudget(A2, -1, 0)
        with pytest.raises(ValueError):
            SearchBudget(A2, 0, -1)

    def test_rejects_non_cusp_central(self):
        with pytest.raises(TypeError):
            SearchBudget("A2", 0, 0)
