"""
Exact constructions: join placements on the unit sphere, hull facets and Schlegel
projection
"""

import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .combinatorics import Decision, Matching, decide_embeddability, matching_number
from .complex_core import (
    Face,
    FaceFamily,
    SimplicialComplex,
    face_to_mask,
    minimal_nonfaces,
)
from .errors import (
    ConstructionFailedError,
    DegenerateHullError,
    DimensionMismatchError,
    InvalidParameterError,
    OutOfScopeError,
    ViewpointSearchFailedError,
)
from .linalg import Vector, affine_rank, centroid, dot, nullspace, primitive, rank, sub
from .placement import Placement
from .verify.lp import lp_feasible

__all__ = [
    "Facet",
    "FacetList",
    "JoinLayout",
    "LinearizeResult",
    "LinearizeStatus",
    "Placement",
    "choose_projection_facet",
    "construct_embedding",
    "facet_enumeration",
    "linearize",
    "origin_in_interior",
    "pad_placement",
    "rational_sphere_point",
    "schlegel_project",
    "simplex_on_sphere",
]

RETRY_PRIMES = 16
VIEWPOINT_STEPS = 64


def rational_sphere_point(u: Sequence) -> Vector:
    """Inverse stereographic projection: (2u, |u|^2 - 1) / (|u|^2 + 1)."""
    coords = [Fraction(x) for x in u]
    s = sum((x * x for x in coords), Fraction(0))
    return tuple(2 * x / (s + 1) for x in coords) + ((s - 1) / (s + 1),)


def origin_in_interior(vectors: Sequence[Sequence[Fraction]]) -> bool:
    """True when the vectors span their space and some strictly positive
    combination of them is zero."""
    if not vectors:
        return False
    dim = len(vectors[0])
    if rank(vectors) != dim:
        return False
    # sum (1 + w_i) v_i = 0 with w >= 0
    A = [[Fraction(v[axis]) for v in vectors] for axis in range(dim)]
    b = [-sum((Fraction(v[axis]) for v in vectors), Fraction(0)) for axis in range(dim)]
    return lp_feasible(A, b, num_vars=len(vectors)).feasible


def _primes() -> Iterator[int]:
    found: List[int] = []
    candidate = 2
    while True:
        if all(candidate % p for p in found):
            found.append(candidate)
            yield candidate
        candidate += 1


def _height_parameter(m: int) -> Fraction:
    t = Fraction(math.sqrt((m - 1) / (m + 1))).limit_denominator(m)
    if not 0 < t < 1:
        t = Fraction(1, 2)
    return t


def _lift(t: Fraction, base: Sequence[Vector], m: int) -> Tuple[Vector, ...]:
    c, minus_h = rational_sphere_point((t,))
    top = (Fraction(1),) + (Fraction(0),) * (m - 1)
    return (top,) + tuple((minus_h,) + tuple(c * x for x in w) for w in base)


@lru_cache(maxsize=None)
def simplex_on_sphere(m: int) -> Tuple[Vector, ...]:
    """m+1 rational unit vectors in dimension m with the origin inside their hull.

    e_1 together with (-h, c*w) for the vectors w of simplex_on_sphere(m-1),
    where (c, -h) = rational_sphere_point((t,)) and t approximates the
    regular-simplex value; t is perturbed by (1 + 1/p) for successive primes p
    until the origin check passes.
    """
    if m < 1:
        raise InvalidParameterError("simplex_on_sphere needs m >= 1")
    if m == 1:
        return ((Fraction(1),), (Fraction(-1),))
    base = simplex_on_sphere(m - 1)
    t = _height_parameter(m)
    candidates = [t]
    primes = _primes()
    for _ in range(RETRY_PRIMES):
        candidates.append(t * (1 + Fraction(1, next(primes))))
    for candidate in candidates:
        if not 0 < candidate < 1:
            continue
        vectors = _lift(candidate, base, m)
        if origin_in_interior(vectors):
            return vectors
    raise ConstructionFailedError(f"no rational simplex on the {m}-sphere found")


@dataclass(frozen=True)
class JoinLayout:
    """Coordinate blocks (1-based axes) of a join placement.

    Each matching set S gets |S| - 1 axes carrying simplex_on_sphere(|S| - 1);
    uncovered vertices get one axis each, after all blocks.
    """

    matching: Matching
    subspace_assignment: Dict[Face, Tuple[int, ...]] = field(default_factory=dict)
    leftover_axes: Dict[int, int] = field(default_factory=dict)

    @property
    def dim(self) -> int:
        blocks = sum(len(axes) for axes in self.subspace_assignment.values())
        return blocks + len(self.leftover_axes)


def _check_matching(F: FaceFamily, matching: Matching) -> None:
    members = set(F.sets)
    used = 0
    for s in matching.sets:
        if s not in members:
            raise InvalidParameterError(
                f"matching set {s} is not a member of the family"
            )
        mask = face_to_mask(s)
        if mask & used:
            raise InvalidParameterError("matching sets must be pairwise disjoint")
        used |= mask


def construct_embedding(
    n: int, F: FaceFamily, matching: Optional[Matching] = None
) -> Tuple[Placement, JoinLayout]:
    """Place complex_of(n, F) on the unit sphere of dimension n - |matching| - 1.

    Without an explicit matching the lexicographically least maximum matching
    is used. Vertices in singleton members of F are not vertices of the
    complex and get no coordinates.
    """
    if F.n != n:
        F = FaceFamily(n, F.sets)
    if not F.is_antichain():
        raise InvalidParameterError("construct_embedding needs an antichain")
    if matching is None:
        _, matching = matching_number(F)
    else:
        _check_matching(F, matching)
    non_vertices = {s[0] for s in F.sets if len(s) == 1}

    dim = n - matching.size
    coords: Dict[int, Vector] = {}
    blocks: Dict[Face, Tuple[int, ...]] = {}
    axis = 0
    for s in matching.sets:
        width = len(s) - 1
        blocks[s] = tuple(range(axis + 1, axis + width + 1))
        if width:
            for v, w in zip(s, simplex_on_sphere(width)):
                point = [Fraction(0)] * dim
                point[axis:axis + width] = w
                coords[v] = tuple(point)
        axis += width

    covered = set(matching.covered_vertices())
    leftover: Dict[int, int] = {}
    for v in range(1, n + 1):
        if v in covered:
            continue
        leftover[v] = axis + 1
        if v not in non_vertices:
            point = [Fraction(0)] * dim
            point[axis] = Fraction(1)
            coords[v] = tuple(point)
        axis += 1

    layout = JoinLayout(matching, blocks, leftover)
    return Placement(dim, coords, on_sphere=True), layout


@dataclass(frozen=True)
class Facet:
    """Hull facet: normal . x <= offset for every point, with equality on `vertices`."""

    vertices: Face
    normal: Vector
    offset: Fraction

    def side(self, point: Sequence[Fraction]) -> Fraction:
        return dot(self.normal, point) - self.offset


@dataclass(frozen=True)
class FacetList:
    facets: Tuple[Facet, ...]

    def __iter__(self) -> Iterator[Facet]:
        return iter(self.facets)

    def __len__(self) -> int:
        return len(self.facets)

    def vertex_sets(self) -> List[Face]:
        return [f.vertices for f in self.facets]


def facet_enumeration(P: Placement) -> FacetList:
    """All facets of the convex hull of the placed points, by brute force
    over dim-subsets with exact side tests."""
    labels = sorted(P.coords)
    points = [P[v] for v in labels]
    dim = P.dim
    if dim < 1 or affine_rank(points) != dim:
        raise DegenerateHullError("the points do not affinely span the ambient space")

    found: Dict[Face, Facet] = {}
    for subset in combinations(range(len(labels)), dim):
        chosen = [points[i] for i in subset]
        if affine_rank(chosen) != dim - 1:
            continue
        base = chosen[0]
        normal = nullspace([sub(p, base) for p in chosen[1:]], dim)[0]
        offset = dot(normal, base)
        sides = [dot(normal, p) - offset for p in points]
        if all(s >= 0 for s in sides):
            normal = tuple(-x for x in normal)
            offset = -offset
        elif not all(s <= 0 for s in sides):
            continue
        vertices = tuple(labels[i] for i, s in enumerate(sides) if s == 0)
        if vertices in found:
            continue
        scaled = primitive(normal + (offset,))
        found[vertices] = Facet(vertices, scaled[:-1], scaled[-1])
    return FacetList(tuple(found[key] for key in sorted(found)))


def choose_projection_facet(
    K: SimplicialComplex, facets: FacetList
) -> Optional[Facet]:
    """Lexicographically least hull facet whose vertex set is not a face of K."""
    for facet in sorted(facets, key=lambda f: f.vertices):
        if not K.contains_mask(face_to_mask(facet.vertices)):
            return facet
    return None


def _viewpoint(P: Placement, facet: Facet, facets: FacetList) -> Vector:
    hull_center = centroid([P[v] for v in sorted(P.coords)])
    facet_center = centroid([P[v] for v in facet.vertices])
    direction = sub(facet_center, hull_center)
    others = [g for g in facets if g.vertices != facet.vertices]
    t = Fraction(1)
    for _ in range(VIEWPOINT_STEPS):
        v = tuple(c + t * d for c, d in zip(facet_center, direction))
        if facet.side(v) > 0 and all(g.side(v) < 0 for g in others):
            return v
        t /= 2
    raise ViewpointSearchFailedError("no viewpoint beyond the facet was found")


def schlegel_project(
    P: Placement, facet: Facet, facets: Optional[FacetList] = None
) -> Placement:
    """Central projection from a point just beyond `facet` onto its hyperplane.

    The result drops the first coordinate in which the facet normal is
    non-zero, so it lives in dimension P.dim - 1; facet vertices stay fixed.
    """
    if facets is None:
        facets = facet_enumeration(P)
    v = _viewpoint(P, facet, facets)
    height = dot(facet.normal, v)
    dropped = next(i for i, a in enumerate(facet.normal) if a != 0)
    coords: Dict[int, Vector] = {}
    for label, p in P.coords.items():
        s = (facet.offset - height) / (dot(facet.normal, p) - height)
        image = [vi + s * (pi - vi) for vi, pi in zip(v, p)]
        del image[dropped]
        coords[label] = tuple(image)
    return Placement(P.dim - 1, coords)


def pad_placement(P: Placement, dim: int) -> Placement:
    """Append zero coordinates up to `dim`."""
    if dim < P.dim:
        raise DimensionMismatchError(
            f"cannot pad a {P.dim}-dimensional placement to {dim}"
        )
    extra = (Fraction(0),) * (dim - P.dim)
    coords = {v: p + extra for v, p in P.coords.items()}
    return Placement(dim, coords, on_sphere=P.on_sphere)


def _drop_last_axis(P: Placement) -> Placement:
    return Placement(P.dim - 1, {v: p[:-1] for v, p in P.coords.items()})


class LinearizeStatus(Enum):
    LINEAR = "linear"
    SPHERE_ONLY = "sphere_only"
    NOT_EMBEDDABLE = "not_embeddable"


@dataclass(frozen=True)
class LinearizeResult:
    status: LinearizeStatus
    placement: Optional[Placement] = None
    layout: Optional[JoinLayout] = None
    projection_facet: Optional[Facet] = None


def linearize(K: SimplicialComplex, d: int) -> LinearizeResult:
    """Straight-line placement of K in R^d, or its sphere placement when K is
    the whole boundary of the constructed polytope.

    Complexes on more than d+3 vertices are still handled when the join
    construction already lands in S^d (n - nu - 1 <= d).
    """
    verdict = decide_embeddability(K, d)
    if verdict.decision is Decision.NOT_EMBEDDABLE:
        return LinearizeResult(LinearizeStatus.NOT_EMBEDDABLE)
    family = minimal_nonfaces(K)
    if verdict.decision is Decision.OUT_OF_SCOPE:
        nu, _ = matching_number(family)
        if K.n - nu - 1 > d:
            raise OutOfScopeError(
                f"{K.n} vertices exceed d+3 = {d + 3} and the join construction "
                f"needs S^{K.n - nu - 1}"
            )

    P, layout = construct_embedding(K.n, family)
    points = [P[v] for v in sorted(P.coords)]
    if points and affine_rank(points) < P.dim:
        # only unit basis vectors: K is a simplex, already flat after one axis goes
        P = _drop_last_axis(P)
    if P.dim <= d:
        return LinearizeResult(LinearizeStatus.LINEAR, pad_placement(P, d), layout)
    if P.dim != d + 1:
        raise ConstructionFailedError(f"placement of dimension {P.dim} for d = {d}")

    facets = facet_enumeration(P)
    facet = choose_projection_facet(K, facets)
    if facet is None:
        return LinearizeResult(LinearizeStatus.SPHERE_ONLY, P, layout)
    projected = schlegel_project(P, facet, facets)
    return LinearizeResult(LinearizeStatus.LINEAR, projected, layout, facet)
