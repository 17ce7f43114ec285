"""Tristram-Levine signatures of torus knots, exactly.

The signature of the (p, q) torus knot at zeta = exp(2*pi*i*x) is computed
by a counting formula: with the jump multiset

    Sigma = {i/p + j/q : 1 <= i <= p-1, 1 <= j <= q-1}  inside (0, 2),

the value at a non-jump x in (0, 1) is the number of elements of Sigma
outside the open window (x, x+1) minus the number inside.  The function of
x is assembled as an integer step function with exact rational breakpoints,
so its integral over (0, 1) is an exact rational.  Values at the jumps
themselves are undefined: evaluating there raises `BreakpointEvaluation`
rather than picking one of the competing averaging conventions.

A second, floating-point route evaluates the signature of the Hermitian
form (1 - z) V + (1 - conj(z)) V^T for a Seifert matrix V.  Only the (2, q)
family has a matrix generator here; the route exists to cross-check the
counting formula, never to replace it.
"""

from __future__ import annotations

import cmath
import math
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from operator import index

import numpy as np

from .singularities import Cusp

__all__ = [
    "BreakpointEvaluation",
    "NearSingularForm",
    "JumpSet",
    "StepFunction",
    "SeifertMatrix",
    "jump_set",
    "torus_signature_at",
    "torus_signature_function",
    "integral",
    "bidiagonal_seifert",
    "seifert_signature_at",
    "DEFAULT_DEGENERACY_TOLERANCE",
]


class BreakpointEvaluation(ValueError):
    """Evaluation of a signature or step function exactly at a jump point."""

    def __init__(self, point: Fraction):
        super().__init__(f"value undefined at jump point {point}")
        self.point = point


class NearSingularForm(ArithmeticError):
    """The numeric Hermitian form has an eigenvalue too close to zero."""


def _exact(x) -> Fraction:
    # floats are binary approximations; exactness is the point of this module
    if isinstance(x, float):
        raise TypeError(f"expected an exact rational, got float {x!r}")
    return Fraction(x)


@dataclass(frozen=True)
class JumpSet:
    """Sorted multiset of signature jump locations inside (0, 2).

    Kept as a multiset even though the locations are pairwise distinct for
    coprime (p, q): multiplicity bookkeeping keeps "cardinality equals the
    Milnor number" a checkable fact rather than an assumption.
    """

    elements: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        for e in self.elements:
            if not isinstance(e, Fraction):
                raise TypeError(f"jump locations must be Fraction, got {e!r}")
            if not 0 < e < 2:
                raise ValueError(f"jump location {e} outside the open interval (0, 2)")
        object.__setattr__(self, "elements", tuple(sorted(self.elements)))

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x) -> bool:
        i = bisect_left(self.elements, x)
        return i < len(self.elements) and self.elements[i] == x

    def count_strictly_between(self, lo: Fraction, hi: Fraction) -> int:
        """Number of elements in the open interval (lo, hi), with multiplicity."""
        return bisect_left(self.elements, hi) - bisect_right(self.elements, lo)


@dataclass(frozen=True)
class StepFunction:
    """Integer-valued piecewise constant function on (0, 1).

    `values[i]` is the value on the i-th open interval cut out of (0, 1) by
    the breakpoints, so there is exactly one more value than breakpoints.
    The value at a breakpoint itself is undefined; evaluating there raises
    `BreakpointEvaluation`.  Duplicate breakpoints (a multiple jump) are
    merged at construction by dropping the empty intervals between them.
    """

    breakpoints: tuple[Fraction, ...]
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        breakpoints = tuple(self.breakpoints)
        values = tuple(self.values)
        if len(values) != len(breakpoints) + 1:
            raise ValueError(
                f"{len(breakpoints)} breakpoints require {len(breakpoints) + 1} "
                f"interval values, got {len(values)}"
            )
        for b in breakpoints:
            if not isinstance(b, Fraction):
                raise TypeError(f"breakpoints must be Fraction, got {b!r}")
            if not 0 < b < 1:
                raise ValueError(f"breakpoint {b} outside the open interval (0, 1)")
        for v in values:
            if not isinstance(v, int):
                raise TypeError(f"interval values must be int, got {v!r}")
        if any(b2 < b1 for b1, b2 in zip(breakpoints, breakpoints[1:])):
            raise ValueError("breakpoints must be sorted")
        merged_b: list[Fraction] = []
        merged_v: list[int] = [values[0]]
        for b, right_value in zip(breakpoints, values[1:]):
            if merged_b and b == merged_b[-1]:
                # the interval between equal breakpoints is empty; drop its value
                merged_v[-1] = right_value
                continue
            merged_b.append(b)
            merged_v.append(right_value)
        object.__setattr__(self, "breakpoints", tuple(merged_b))
        object.__setattr__(self, "values", tuple(merged_v))

    def value_at(self, x) -> int:
        """Value on the open interval containing x, for x in (0, 1)."""
        x = _exact(x)
        if not 0 < x < 1:
            raise ValueError(f"argument {x} outside the open interval (0, 1)")
        i = bisect_left(self.breakpoints, x)
        if i < len(self.breakpoints) and self.breakpoints[i] == x:
            raise BreakpointEvaluation(x)
        return self.values[i]

    def integral(self) -> Fraction:
        """Exact integral over (0, 1); breakpoints carry no measure."""
        grid = (Fraction(0), *self.breakpoints, Fraction(1))
        total = Fraction(0)
        for i, v in enumerate(self.values):
            total += v * (grid[i + 1] - grid[i])
        return total


@lru_cache(maxsize=None)
def jump_set(cusp: Cusp) -> JumpSet:
    """Jump multiset {i/p + j/q : 1 <= i < p, 1 <= j < q} of the (p, q) torus knot."""
    return JumpSet(
        tuple(
            Fraction(i, cusp.p) + Fraction(j, cusp.q)
            for i in range(1, cusp.p)
            for j in range(1, cusp.q)
        )
    )


def torus_signature_at(cusp: Cusp, x) -> int:
    """Tristram-Levine signature of the (p, q) torus knot at exp(2*pi*i*x).

    x must be a rational in (0, 1) such that neither x nor x + 1 is a jump
    location; at jumps the value is undefined and `BreakpointEvaluation` is
    raised.  The result is minus the number of jump locations inside the
    open window (x, x + 1) plus the number outside it.
    """
    x = _exact(x)
    if not 0 < x < 1:
        raise ValueError(f"argument {x} outside the open interval (0, 1)")
    jumps = jump_set(cusp)
    if x in jumps or x + 1 in jumps:
        raise BreakpointEvaluation(x)
    inside = jumps.count_strictly_between(x, x + 1)
    return len(jumps) - 2 * inside


@lru_cache(maxsize=None)
def torus_signature_function(cusp: Cusp) -> StepFunction:
    """The map x -> signature at exp(2*pi*i*x) as an exact step function.

    Breakpoints are the jump locations folded into (0, 1): s for jumps
    s < 1 and s - 1 for jumps s > 1 (no jump sits at 1 when p and q are
    coprime).  Interval values come from the counting formula evaluated at
    interval midpoints.
    """
    folded = sorted({s if s < 1 else s - 1 for s in jump_set(cusp)})
    grid = (Fraction(0), *folded, Fraction(1))
    values = tuple(
        torus_signature_at(cusp, (grid[i] + grid[i + 1]) / 2)
        for i in range(len(grid) - 1)
    )
    return StepFunction(tuple(folded), values)


def integral(f: StepFunction) -> Fraction:
    """Exact integral of a step function over (0, 1)."""
    return f.integral()


@dataclass(frozen=True)
class SeifertMatrix:
    """Square integer matrix; no symmetry is assumed."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        # operator.index accepts any true integer type but refuses floats
        rows = tuple(tuple(index(e) for e in row) for row in self.entries)
        if not rows:
            raise ValueError("matrix must have at least one row")
        if any(len(row) != len(rows) for row in rows):
            raise ValueError("matrix must be square")
        object.__setattr__(self, "entries", rows)

    @property
    def size(self) -> int:
        return len(self.entries)


def bidiagonal_seifert(q: int) -> SeifertMatrix:
    """Seifert matrix of the (2, q) torus knot for odd q >= 3.

    The matrix is (q-1) x (q-1) with -1 on the diagonal, +1 on the
    superdiagonal and 0 elsewhere.
    """
    if not isinstance(q, int) or q < 3 or q % 2 == 0:
        raise ValueError(f"q must be an odd integer >= 3, got {q!r}")
    n = q - 1
    rows = tuple(
        tuple(-1 if j == i else 1 if j == i + 1 else 0 for j in range(n))
        for i in range(n)
    )
    return SeifertMatrix(rows)


DEFAULT_DEGENERACY_TOLERANCE = 1e-9


def seifert_signature_at(
    matrix: SeifertMatrix, x, tolerance: float = DEFAULT_DEGENERACY_TOLERANCE
) -> int:
    """Signature of (1 - z) V + (1 - conj(z)) V^T at z = exp(2*pi*i*x).

    This is the floating-point cross-check of the exact counting route: the
    eigenvalues of the Hermitian form are computed numerically and counted
    by sign.  Raises `NearSingularForm` when the smallest eigenvalue
    magnitude falls below `tolerance` times the largest (or the form
    vanishes outright), which signals that x sits too close to a jump of
    the signature function; the caller should perturb x.
    """
    x = _exact(x)
    if not 0 < x < 1:
        raise ValueError(f"argument {x} outside the open interval (0, 1)")
    if tolerance <= 0:
        raise ValueError(f"tolerance must be positive, got {tolerance!r}")
    z = cmath.exp(2j * math.pi * float(x))
    v = np.array(matrix.entries, dtype=np.complex128)
    form = (1 - z) * v + (1 - z.conjugate()) * v.T
    eigenvalues = np.linalg.eigvalsh(form)
    magnitudes = np.abs(eigenvalues)
    largest = float(magnitudes.max())
    if largest == 0.0 or float(magnitudes.min()) < tolerance * largest:
        raise NearSingularForm(
            f"Hermitian form numerically degenerate at x = {x}; perturb x away from jumps"
        )
    return int((eigenvalues > 0).sum() - (eigenvalues < 0).sum())
