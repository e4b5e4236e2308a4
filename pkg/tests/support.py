"""
Shared builders for the test suite
"""

from fractions import Fraction
from typing import Dict, Sequence

from sphere_embed.complex_core import (
    FaceFamily,
    SimplicialComplex,
    complex_of,
    from_facets,
    full_simplex,
    skeleton,
)
from sphere_embed.placement import Placement
from sphere_embed.prng import SplitMix64

OCTAHEDRON_FAMILY = ((1, 4), (2, 5), (3, 6))


def octahedron() -> SimplicialComplex:
    return complex_of(6, FaceFamily(6, OCTAHEDRON_FAMILY))


def octahedron_minus_facet() -> SimplicialComplex:
    K = octahedron()
    return from_facets(6, [f for f in K.facets if f != (1, 2, 3)])


def k5() -> SimplicialComplex:
    return skeleton(full_simplex(5), 1)


def bipyramid() -> SimplicialComplex:
    return complex_of(5, FaceFamily(5, ((1, 2, 3), (4, 5))))


def cross_polytope_placement() -> Placement:
    coords: Dict[int, Sequence[int]] = {
        1: (1, 0, 0),
        2: (0, 1, 0),
        3: (0, 0, 1),
        4: (-1, 0, 0),
        5: (0, -1, 0),
        6: (0, 0, -1),
    }
    return Placement(3, coords, on_sphere=True)


def plane_placement(points: Sequence[Sequence[int]]) -> Placement:
    return Placement(2, {i + 1: p for i, p in enumerate(points)})


def random_placement(labels: Sequence[int], dim: int, seed: int) -> Placement:
    """Seeded rational points with coordinates in [-10, 10] and denominator 7."""
    rng = SplitMix64(seed)
    coords = {
        v: tuple(rng.rational(-10, 10, 7) for _ in range(dim)) for v in labels
    }
    return Placement(dim, coords)


def frac_tuple(*values) -> tuple:
    return tuple(Fraction(v) for v in values)
