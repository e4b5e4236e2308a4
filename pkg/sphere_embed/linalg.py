"""
Exact rational linear algebra on tuples of Fractions

Row reduction runs on sympy's exact matrices over QQ; values cross the boundary
as Fractions in both directions.
"""

from fractions import Fraction
from math import gcd
from typing import Iterable, List, Sequence, Tuple

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

Vector = Tuple[Fraction, ...]


def vector(values: Iterable) -> Vector:
    return tuple(Fraction(v) for v in values)


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def sub(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def add(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def scale(c: Fraction, u: Sequence[Fraction]) -> Vector:
    return tuple(c * a for a in u)


def squared_norm(u: Sequence[Fraction]) -> Fraction:
    return dot(u, u)


def centroid(points: Sequence[Sequence[Fraction]]) -> Vector:
    count = len(points)
    return tuple(sum(column, Fraction(0)) / count for column in zip(*points))


def rref(
    rows: Sequence[Sequence[Fraction]], ncols: int
) -> Tuple[List[List[Fraction]], List[int]]:
    """Reduced row echelon form and the pivot columns among the first `ncols`.

    Columns past `ncols` (a right-hand side, say) are carried along; the
    reduced left block is the same as when reducing it alone.
    """
    matrix = [[Fraction(v) for v in row] for row in rows]
    if not matrix or not matrix[0]:
        return matrix, []
    reduced, pivots = _to_domain(matrix).rref()
    return _from_domain(reduced), [p for p in pivots if p < ncols]


def _to_domain(matrix: List[List[Fraction]]) -> DomainMatrix:
    elements = [[QQ(v.numerator, v.denominator) for v in row] for row in matrix]
    return DomainMatrix(elements, (len(matrix), len(matrix[0])), QQ)


def _from_domain(dm: DomainMatrix) -> List[List[Fraction]]:
    rows = dm.to_Matrix().tolist()
    return [[Fraction(int(x.p), int(x.q)) for x in row] for row in rows]


def rank(rows: Sequence[Sequence[Fraction]]) -> int:
    if not rows:
        return 0
    return len(rref(rows, len(rows[0]))[1])


def affine_rank(points: Sequence[Sequence[Fraction]]) -> int:
    """Dimension of the affine hull (-1 for no points)."""
    if not points:
        return -1
    base = points[0]
    return rank([sub(p, base) for p in points[1:]])


def nullspace(rows: Sequence[Sequence[Fraction]], ncols: int) -> List[Vector]:
    matrix, pivots = rref(rows, ncols)
    basis = []
    for free in (c for c in range(ncols) if c not in pivots):
        values = [Fraction(0)] * ncols
        values[free] = Fraction(1)
        for i, p in enumerate(pivots):
            values[p] = -matrix[i][free]
        basis.append(tuple(values))
    return basis


def primitive(values: Sequence[Fraction]) -> Vector:
    """Positive rescaling to coprime integers (zero vectors are returned unchanged)."""
    lcm = 1
    for v in values:
        lcm = lcm * v.denominator // gcd(lcm, v.denominator)
    ints = [int(v * lcm) for v in values]
    common = 0
    for i in ints:
        common = gcd(common, abs(i))
    if common == 0:
        return tuple(Fraction(v) for v in values)
    return tuple(Fraction(i // common) for i in ints)


def format_rational(value: Fraction) -> str:
    """Reduced "p/q" text, with "0/1" for zero."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"
