"""
Exact two-phase simplex method over Fractions, with Farkas certificates
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Set, Tuple

from ..errors import CertificateError, DimensionMismatchError
from ..linalg import Vector, dot

Matrix = Sequence[Sequence[Fraction]]


class LPStatus(Enum):
    FEASIBLE = "feasible"
    INFEASIBLE = "infeasible"


@dataclass(frozen=True)
class LPResult:
    """Outcome of lp_feasible.

    `point` is set for feasible systems (the optimizer when an objective was
    given and is bounded), `farkas` for infeasible ones. `optimum` is the
    maximum of the objective, or None when there is no objective or it is
    unbounded.
    """

    status: LPStatus
    point: Optional[Vector] = None
    farkas: Optional[Vector] = None
    optimum: Optional[Fraction] = None
    bounded: bool = True

    @property
    def feasible(self) -> bool:
        return self.status is LPStatus.FEASIBLE


def _shape(A: Matrix, b: Sequence, num_vars: Optional[int]) -> Tuple[int, int]:
    rows = len(A)
    if len(b) != rows:
        raise DimensionMismatchError(
            f"{rows} constraint rows but {len(b)} right-hand sides"
        )
    cols = len(A[0]) if rows else (num_vars or 0)
    if num_vars is not None and cols != num_vars:
        raise DimensionMismatchError(f"rows have {cols} columns, expected {num_vars}")
    for row in A:
        if len(row) != cols:
            raise DimensionMismatchError("constraint rows have different lengths")
    return rows, cols


def check_point(A: Matrix, b: Sequence, nonneg: Iterable[int], x: Sequence) -> bool:
    """Exact substitution: A x = b and x_i >= 0 for i in nonneg."""
    if any(len(row) != len(x) for row in A):
        return False
    if any(x[i] < 0 for i in nonneg):
        return False
    return all(dot(row, x) == rhs for row, rhs in zip(A, b))


def check_farkas(A: Matrix, b: Sequence, nonneg: Iterable[int], y: Sequence) -> bool:
    """Exact check that y proves {A x = b, x_i >= 0 on nonneg} empty.

    Needs y^T A_j <= 0 for constrained columns, y^T A_j = 0 for free ones and
    y^T b > 0.
    """
    if len(y) != len(A):
        return False
    cols = len(A[0]) if A else 0
    constrained = set(nonneg)
    for j in range(cols):
        value = sum((y[i] * A[i][j] for i in range(len(A))), Fraction(0))
        if j in constrained and value > 0:
            return False
        if j not in constrained and value != 0:
            return False
    return dot(y, b) > 0


class _Tableau:
    """Dense tableau kept in canonical form for its basis."""

    def __init__(self, rows: List[List[Fraction]], basis: List[int]):
        self.rows = rows
        self.basis = basis

    @property
    def width(self) -> int:
        return len(self.rows[0]) - 1 if self.rows else 0

    def pivot(self, r: int, c: int) -> None:
        lead = self.rows[r][c]
        self.rows[r] = [v / lead for v in self.rows[r]]
        for i, row in enumerate(self.rows):
            if i != r and row[c] != 0:
                factor = row[c]
                self.rows[i] = [a - factor * p for a, p in zip(row, self.rows[r])]
        self.basis[r] = c

    def reduced_cost(self, costs: Sequence[Fraction], j: int) -> Fraction:
        basic = (costs[self.basis[i]] * row[j] for i, row in enumerate(self.rows))
        return costs[j] - sum(basic, Fraction(0))

    def maximize(
        self, costs: Sequence[Fraction], allowed: Set[int], ncols: int
    ) -> bool:
        """Run simplex iterations with Bland's rule; False when unbounded."""
        while True:
            entering = next(
                (
                    j
                    for j in range(ncols)
                    if j in allowed and self.reduced_cost(costs, j) > 0
                ),
                None,
            )
            if entering is None:
                return True
            leaving = None
            best_ratio = None
            for i, row in enumerate(self.rows):
                if row[entering] > 0:
                    ratio = row[-1] / row[entering]
                    if (
                        best_ratio is None
                        or ratio < best_ratio
                        or (ratio == best_ratio and self.basis[i] < self.basis[leaving])
                    ):
                        best_ratio = ratio
                        leaving = i
            if leaving is None:
                return False
            self.pivot(leaving, entering)

    def values(self, ncols: int) -> List[Fraction]:
        x = [Fraction(0)] * ncols
        for i, var in enumerate(self.basis):
            if var < ncols:
                x[var] = self.rows[i][-1]
        return x


def lp_feasible(
    A_eq: Matrix,
    b_eq: Sequence,
    nonneg: Optional[Iterable[int]] = None,
    objective: Optional[Sequence] = None,
    num_vars: Optional[int] = None,
) -> LPResult:
    """Exact feasibility, and the maximum of `objective` when given, of
    {x : A_eq x = b_eq, x_i >= 0 for i in nonneg}.

    `nonneg=None` constrains every variable. Free variables are split into a
    difference of two non-negative ones; phase one minimizes the sum of
    artificial variables and its final duals give the Farkas vector.
    """
    if objective is not None and num_vars is None:
        num_vars = len(objective)
    m, n = _shape(A_eq, b_eq, num_vars)
    A = [[Fraction(v) for v in row] for row in A_eq]
    b = [Fraction(v) for v in b_eq]
    constrained = set(range(n)) if nonneg is None else {int(i) for i in nonneg}
    if any(i < 0 or i >= n for i in constrained):
        raise DimensionMismatchError("non-negativity index outside the variable range")
    if objective is not None and len(objective) != n:
        raise DimensionMismatchError(
            f"objective has {len(objective)} entries, expected {n}"
        )

    # standard-form columns: (original variable, sign)
    columns: List[Tuple[int, int]] = []
    for j in range(n):
        columns.append((j, 1))
        if j not in constrained:
            columns.append((j, -1))
    width = len(columns)
    signs = [1 if rhs >= 0 else -1 for rhs in b]

    rows = []
    for i in range(m):
        structural = [signs[i] * sign * A[i][j] for j, sign in columns]
        artificial = [Fraction(1 if k == i else 0) for k in range(m)]
        rows.append(structural + artificial + [signs[i] * b[i]])
    tableau = _Tableau(rows, [width + i for i in range(m)])

    phase_one = [Fraction(0)] * width + [Fraction(-1)] * m
    tableau.maximize(phase_one, set(range(width)), width + m)
    shortfall = sum(
        (row[-1] for i, row in enumerate(tableau.rows) if tableau.basis[i] >= width),
        Fraction(0),
    )

    if shortfall > 0:
        duals = [
            sum(
                (
                    phase_one[tableau.basis[r]] * row[width + k]
                    for r, row in enumerate(tableau.rows)
                ),
                Fraction(0),
            )
            for k in range(m)
        ]
        farkas = tuple(-signs[k] * duals[k] for k in range(m))
        if not check_farkas(A, b, constrained, farkas):
            raise CertificateError("phase one produced an invalid Farkas certificate")
        return LPResult(LPStatus.INFEASIBLE, farkas=farkas)

    # drive artificial variables out of the basis at level zero
    for r in range(len(tableau.rows) - 1, -1, -1):
        if tableau.basis[r] < width:
            continue
        pivot_col = next((j for j in range(width) if tableau.rows[r][j] != 0), None)
        if pivot_col is None:
            del tableau.rows[r]
            del tableau.basis[r]
        else:
            tableau.pivot(r, pivot_col)
    tableau.rows = [row[:width] + [row[-1]] for row in tableau.rows]

    bounded = True
    optimum = None
    if objective is not None:
        costs = [Fraction(sign) * Fraction(objective[j]) for j, sign in columns]
        bounded = tableau.maximize(costs, set(range(width)), width)

    split = tableau.values(width)
    point = [Fraction(0)] * n
    for (j, sign), value in zip(columns, split):
        point[j] += sign * value
    x = tuple(point)
    if not check_point(A, b, constrained, x):
        raise CertificateError("simplex produced a point violating the constraints")
    if objective is not None:
        if not bounded:
            return LPResult(LPStatus.FEASIBLE, point=x, bounded=False)
        optimum = dot([Fraction(c) for c in objective], x)
    return LPResult(LPStatus.FEASIBLE, point=x, optimum=optimum)
