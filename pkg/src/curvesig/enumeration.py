"""Search over generic-fiber configurations for a fixed central cusp.

Candidate cusps are the coprime pairs whose Milnor number does not exceed
that of the central singularity.  Multisets of candidates are explored
depth-first in lexicographic order and paired with every genus and
double-point count inside the budget box; a configuration is emitted when it
passes the obstruction checks.  Two prunings cut the tree, both sound
because every cusp has positive Milnor number and positive M number, so both
running sums only grow along a branch:

  * when the genus formula is required, a branch whose Milnor sum already
    exceeds the central Milnor number can never satisfy it;
  * a branch whose M-number sum already violates the M-number bound at the
    most generous budget point (max_genus, max_double_points) violates it
    for every budget point and every extension.

Output order is canonical and deterministic: multisets non-decreasing
lexicographically, then genus, then double points.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterator, Sequence

from .deformation import (
    M_BOUND_SLACK,
    DeformationScenario,
    ObstructionReport,
    full_report,
)
from .singularities import Cusp, m_number, milnor_number

__all__ = [
    "SearchBudget",
    "SearchResult",
    "candidate_cusps",
    "enumerate_admissible",
    "count_admissible",
]


@dataclass(frozen=True)
class SearchBudget:
    """Search box for one central cusp.

    With `require_genus_formula` (the default) only fully admissible
    scenarios are emitted.  Without it the genus-formula equality is dropped
    from the emission filter: emitted reports then still carry its verdict,
    and may be marked obstructed by that check alone.
    """

    central: Cusp
    max_genus: int
    max_double_points: int
    require_genus_formula: bool = True

    def __post_init__(self) -> None:
        if not isinstance(self.central, Cusp):
            raise TypeError(f"central singularity must be a Cusp, got {self.central!r}")
        if not isinstance(self.max_genus, int) or self.max_genus < 0:
            raise ValueError(f"max_genus must be a non-negative integer, got {self.max_genus!r}")
        if not isinstance(self.max_double_points, int) or self.max_double_points < 0:
            raise ValueError(
                f"max_double_points must be a non-negative integer, got {self.max_double_points!r}"
            )


@dataclass(frozen=True)
class SearchResult:
    scenario: DeformationScenario
    report: ObstructionReport


def candidate_cusps(max_milnor: int) -> tuple[Cusp, ...]:
    """All cusps with Milnor number (p-1)(q-1) <= max_milnor, sorted by (p, q)."""
    found = []
    p = 2
    while (p - 1) * p <= max_milnor:  # smallest partner is q = p + 1
        for q in range(p + 1, max_milnor // (p - 1) + 2):
            if (p - 1) * (q - 1) <= max_milnor and gcd(p, q) == 1:
                found.append(Cusp(p, q))
        p += 1
    return tuple(sorted(found))


def _emit_filter(report: ObstructionReport, budget: SearchBudget) -> bool:
    if budget.require_genus_formula:
        return report.admissible
    return (
        report.signature_bound.holds
        and report.one_sided_bound.holds
        and report.m_number_bound.holds
    )


def enumerate_admissible(
    budget: SearchBudget, candidates: Sequence[Cusp] | None = None
) -> Iterator[SearchResult]:
    """Yield every non-obstructed configuration inside the budget box.

    `candidates` optionally restricts the cusp universe (it is deduplicated
    and sorted, so the emitted order never depends on the order given); by
    default it is every cusp with Milnor number at most the central one.
    Re-running produces identical output.
    """
    central = budget.central
    mu_central = milnor_number(central)
    if candidates is None:
        pool = candidate_cusps(mu_central)
    else:
        pool = tuple(sorted(set(candidates)))
        for c in pool:
            if not isinstance(c, Cusp):
                raise TypeError(f"candidates must be Cusp descriptors, got {c!r}")
    m_central = m_number(central)
    loosest_m_bound = 8 * budget.max_genus + 2 * budget.max_double_points + M_BOUND_SLACK

    def walk(chosen: list[Cusp], start: int, mu_sum: int, m_sum: Fraction) -> Iterator[SearchResult]:
        if budget.require_genus_formula and mu_sum > mu_central:
            return
        if m_sum - m_central >= loosest_m_bound:
            return
        for genus in range(budget.max_genus + 1):
            for double_points in range(budget.max_double_points + 1):
                scenario = DeformationScenario(central, tuple(chosen), double_points, genus)
                report = full_report(scenario)
                if _emit_filter(report, budget):
                    yield SearchResult(scenario, report)
        for i in range(start, len(pool)):
            chosen.append(pool[i])
            yield from walk(chosen, i, mu_sum + milnor_number(pool[i]), m_sum + m_number(pool[i]))
            chosen.pop()

    yield from walk([], 0, 0, Fraction(0))


def count_admissible(budget: SearchBudget, candidates: Sequence[Cusp] | None = None) -> int:
    """Number of configurations enumerate_admissible would emit."""
    return sum(1 for _ in enumerate_admissible(budget, candidates))
