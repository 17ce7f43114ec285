"""Deformation scenarios and the obstruction inequalities they must satisfy.

A scenario pairs a central cusp with the singularity content of a nearby
generic fiber: its cusps, its number R of ordinary double points, and its
geometric genus g.  Four necessary conditions are evaluated, each with exact
witness values:

  * genus formula        mu_0 = 2g + 2R + sum_k mu_k        (integer equality)
  * signature bound      |sigma_0(x) - (sum_k sigma_k(x) - R)| <= 2g + R
  * one-sided bound      sum_k(-sigma_k(x)) + sigma_0(x) <= 2g
  * M-number bound       sum_k M_k - M_0 < 8g + 2R + 2/9    (strict)

The two signature conditions hold for almost all x; since all functions
involved are step functions, checking them at the midpoints of the common
breakpoint refinement is equivalent and exact.  Ordinary double points
contribute the constant -1 to every signature sum.

Passing all checks never certifies that a deformation exists; the verdict
"admissible" only means "not obstructed by these criteria".
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .signature import torus_signature_function
from .singularities import Cusp, m_number, milnor_number

__all__ = [
    "DOUBLE_POINT_SIGNATURE",
    "M_BOUND_SLACK",
    "DeformationScenario",
    "EqualityVerdict",
    "SweepVerdict",
    "RationalVerdict",
    "ObstructionReport",
    "betti_number",
    "check_genus_formula",
    "check_signature_bound",
    "check_one_sided_bound",
    "check_m_number_bound",
    "full_report",
    "bmy_check",
]

# Hopf link contribution: a double point adds the constant -1 at every x.
DOUBLE_POINT_SIGNATURE = -1

# Additive slack of the strict M-number inequalities.
M_BOUND_SLACK = Fraction(2, 9)


@dataclass(frozen=True)
class DeformationScenario:
    """Central cusp plus the singularities, double points and genus of a
    nearby generic fiber.  The order of the cusp list is irrelevant: every
    check is permutation-invariant."""

    central: Cusp
    cusps: tuple[Cusp, ...]
    double_points: int
    genus: int

    def __post_init__(self) -> None:
        if not isinstance(self.central, Cusp):
            raise TypeError(f"central singularity must be a Cusp, got {self.central!r}")
        cusps = tuple(self.cusps)
        for c in cusps:
            if not isinstance(c, Cusp):
                raise TypeError(f"fiber singularities must be Cusp, got {c!r}")
        object.__setattr__(self, "cusps", cusps)
        if not isinstance(self.double_points, int) or self.double_points < 0:
            raise ValueError(f"double_points must be a non-negative integer, got {self.double_points!r}")
        if not isinstance(self.genus, int) or self.genus < 0:
            raise ValueError(f"genus must be a non-negative integer, got {self.genus!r}")


@dataclass(frozen=True)
class EqualityVerdict:
    """Integer equality check; left and right are the two exact sides."""

    holds: bool
    left: int
    right: int


@dataclass(frozen=True)
class SweepVerdict:
    """Pointwise bound left(x) <= right checked at every midpoint of the
    common breakpoint refinement; witness is the midpoint with the largest
    left side (first such midpoint on ties), left its value there."""

    holds: bool
    witness: Fraction
    left: int
    right: int

    @property
    def margin(self) -> int:
        return self.right - self.left


@dataclass(frozen=True)
class RationalVerdict:
    """Exact strict inequality left < right between rationals."""

    holds: bool
    left: Fraction
    right: Fraction

    @property
    def margin(self) -> Fraction:
        return self.right - self.left


@dataclass(frozen=True)
class ObstructionReport:
    """All verdicts for one scenario; overall is "admissible" exactly when
    every individual check holds."""

    betti: int
    genus_formula: EqualityVerdict
    signature_bound: SweepVerdict
    one_sided_bound: SweepVerdict
    m_number_bound: RationalVerdict
    overall: str

    def __post_init__(self) -> None:
        if self.overall not in ("admissible", "obstructed"):
            raise ValueError(f"overall must be 'admissible' or 'obstructed', got {self.overall!r}")
        all_hold = (
            self.genus_formula.holds
            and self.signature_bound.holds
            and self.one_sided_bound.holds
            and self.m_number_bound.holds
        )
        expected = "admissible" if all_hold else "obstructed"
        if self.overall != expected:
            raise ValueError("overall verdict inconsistent with the individual checks")

    @property
    def admissible(self) -> bool:
        return self.overall == "admissible"


def betti_number(scenario: DeformationScenario) -> int:
    """First Betti number of the generic fiber: 2g + R."""
    return 2 * scenario.genus + scenario.double_points


def check_genus_formula(scenario: DeformationScenario) -> EqualityVerdict:
    """mu(central) = 2g + 2R + sum of mu over the fiber cusps, exactly."""
    left = milnor_number(scenario.central)
    right = (
        2 * scenario.genus
        + 2 * scenario.double_points
        + sum(milnor_number(c) for c in scenario.cusps)
    )
    return EqualityVerdict(left == right, left, right)


def _sweep_midpoints(scenario: DeformationScenario) -> list[Fraction]:
    """Midpoints of the maximal intervals cut out of (0, 1) by the union of
    all breakpoints of the central and fiber cusp signature functions.

    Step functions are constant on each such interval, so evaluating a
    pointwise bound at these midpoints decides it everywhere off the
    breakpoints.  Double points are constant in x and contribute none.
    """
    points: set[Fraction] = set()
    for cusp in {scenario.central, *scenario.cusps}:
        points.update(torus_signature_function(cusp).breakpoints)
    grid = [Fraction(0), *sorted(points), Fraction(1)]
    return [(grid[i] + grid[i + 1]) / 2 for i in range(len(grid) - 1)]


def _signatures_at(scenario: DeformationScenario, x: Fraction) -> tuple[int, int]:
    """(sigma at x of the central knot, sum of sigma at x over fiber cusps)."""
    central = torus_signature_function(scenario.central).value_at(x)
    fiber = sum(torus_signature_function(c).value_at(x) for c in scenario.cusps)
    return central, fiber


def _sweep(scenario: DeformationScenario, left_of, bound: int) -> SweepVerdict:
    worst_x = None
    worst_left = None
    for x in _sweep_midpoints(scenario):
        central, fiber = _signatures_at(scenario, x)
        left = left_of(central, fiber)
        if worst_left is None or left > worst_left:
            worst_x, worst_left = x, left
    return SweepVerdict(worst_left <= bound, worst_x, worst_left, bound)


def check_signature_bound(scenario: DeformationScenario) -> SweepVerdict:
    """|sigma_0(x) - (sum_k sigma_k(x) - R)| <= 2g + R at every midpoint of
    the common refinement; each double point contributes -1 to the fiber sum."""
    r = scenario.double_points
    return _sweep(
        scenario,
        lambda central, fiber: abs(central - (fiber + DOUBLE_POINT_SIGNATURE * r)),
        betti_number(scenario),
    )


def check_one_sided_bound(scenario: DeformationScenario) -> SweepVerdict:
    """sum_k(-sigma_k(x)) + sigma_0(x) <= 2g at every midpoint.

    Double points drop out: their -1 cancels against the R part of the
    Betti number, leaving only the genus on the right side.
    """
    return _sweep(
        scenario,
        lambda central, fiber: central - fiber,
        2 * scenario.genus,
    )


def check_m_number_bound(scenario: DeformationScenario) -> RationalVerdict:
    """sum of fiber-cusp M numbers minus the central M number < 8g + 2R + 2/9,
    strictly; equality counts as violated."""
    left = sum((m_number(c) for c in scenario.cusps), Fraction(0)) - m_number(scenario.central)
    right = 8 * scenario.genus + 2 * scenario.double_points + M_BOUND_SLACK
    return RationalVerdict(left < right, left, right)


def full_report(scenario: DeformationScenario) -> ObstructionReport:
    """Run all four checks and aggregate the verdicts."""
    genus_formula = check_genus_formula(scenario)
    signature_bound = check_signature_bound(scenario)
    one_sided_bound = check_one_sided_bound(scenario)
    m_number_bound = check_m_number_bound(scenario)
    all_hold = (
        genus_formula.holds
        and signature_bound.holds
        and one_sided_bound.holds
        and m_number_bound.holds
    )
    return ObstructionReport(
        betti=betti_number(scenario),
        genus_formula=genus_formula,
        signature_bound=signature_bound,
        one_sided_bound=one_sided_bound,
        m_number_bound=m_number_bound,
        overall="admissible" if all_hold else "obstructed",
    )


def bmy_check(p: int, q: int, cusps: Iterable[Cusp], double_points: int = 0) -> RationalVerdict:
    """Bound on the cuspidal content of a parametric curve of bidegree (p, q).

    For coprime p, q >= 2, a curve parametrised by polynomials of degrees p
    and q with the given cusps and `double_points` ordinary double points
    must satisfy, strictly,

        sum_k M_k < p + q - p/q - q/p - 7/9 + 2 * double_points.

    The right side equals M((p, q) cusp) + 2 * double_points + 2/9.
    """
    target = Cusp(p, q)  # validates coprimality and p, q >= 2
    cusps = tuple(cusps)
    for c in cusps:
        if not isinstance(c, Cusp):
            raise TypeError(f"cusps must be Cusp descriptors, got {c!r}")
    if not isinstance(double_points, int) or double_points < 0:
        raise ValueError(f"double_points must be a non-negative integer, got {double_points!r}")
    left = sum((m_number(c) for c in cusps), Fraction(0))
    right = m_number(target) + 2 * double_points + M_BOUND_SLACK
    return RationalVerdict(left < right, left, right)
