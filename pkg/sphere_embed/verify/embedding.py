"""
Pairwise-face certification of geodesic and linear embeddings
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

from ..complex_core import Face, SimplicialComplex
from ..errors import NotOnSphereError, UnplacedVertexError, VoidComplexError
from ..linalg import Vector, affine_rank, rank
from ..placement import Placement
from .lp import lp_feasible


class Mode(Enum):
    GEODESIC = "geodesic"
    LINEAR = "linear"


class PairStatus(Enum):
    INDEPENDENT = "independent"
    INFEASIBLE = "infeasible"
    PROPER = "proper"
    OVERLAP = "overlap"
    UNBOUNDED = "unbounded"


PASSING = {PairStatus.INDEPENDENT, PairStatus.INFEASIBLE, PairStatus.PROPER}


@dataclass(frozen=True)
class RankCheck:
    face: Face
    rank: int
    required: int

    @property
    def passed(self) -> bool:
        return self.rank == self.required


@dataclass(frozen=True)
class PairCheck:
    """One face pair: status plus the LP evidence behind it.

    `optimum` is the largest weight found off the shared face, `point` the
    weights (lambda then mu) attaining it, `farkas` the certificate when the
    normalized system is infeasible.
    """

    sigma: Face
    tau: Face
    status: PairStatus
    optimum: Optional[Fraction] = None
    point: Optional[Vector] = None
    farkas: Optional[Vector] = None

    @property
    def shared(self) -> Face:
        return tuple(v for v in self.sigma if v in self.tau)

    @property
    def passed(self) -> bool:
        return self.status in PASSING


@dataclass(frozen=True)
class Certificate:
    complex_id: str
    placement_hash: str
    mode: Mode
    rank_checks: Tuple[RankCheck, ...]
    pair_checks: Tuple[PairCheck, ...]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.rank_checks) and all(
            p.passed for p in self.pair_checks
        )

    @property
    def offending_facet(self) -> Optional[Face]:
        return next((r.face for r in self.rank_checks if not r.passed), None)

    @property
    def offending_pair(self) -> Optional[Tuple[Face, Face]]:
        return next(((p.sigma, p.tau) for p in self.pair_checks if not p.passed), None)


def complex_id(K: SimplicialComplex) -> str:
    """Labelled facet encoding, e.g. ``6:1-2-3,1-2-6``."""
    facets = ",".join("-".join(str(v) for v in f) for f in K.facets)
    return f"{K.n}:{facets}"


def check_placed(K: SimplicialComplex, P: Placement) -> None:
    missing = [v for v in K.vertices if v not in P.coords]
    if missing:
        raise UnplacedVertexError(f"vertices without coordinates: {missing}")


def _independence(points: Sequence[Vector], mode: Mode) -> Tuple[int, int]:
    if mode is Mode.GEODESIC:
        return rank(points), len(points)
    return affine_rank(points), len(points) - 1


def check_pair(
    P: Placement, sigma: Face, tau: Face, mode: Mode
) -> PairCheck:
    """Do the images of sigma and tau meet exactly in the image of their shared face?"""
    union = sorted(set(sigma) | set(tau))
    found, required = _independence([P[v] for v in union], mode)
    if found == required:
        return PairCheck(sigma, tau, PairStatus.INDEPENDENT)

    size = len(sigma) + len(tau)
    shared = set(sigma) & set(tau)
    A: List[List[Fraction]] = []
    b: List[Fraction] = []
    for axis in range(P.dim):
        A.append([P[v][axis] for v in sigma] + [-P[v][axis] for v in tau])
        b.append(Fraction(0))
    A.append([Fraction(1)] * len(sigma) + [Fraction(0)] * len(tau))
    b.append(Fraction(1))
    if mode is Mode.LINEAR:
        A.append([Fraction(0)] * len(sigma) + [Fraction(1)] * len(tau))
        b.append(Fraction(1))
    objective = [Fraction(0 if v in shared else 1) for v in sigma + tau]

    result = lp_feasible(A, b, objective=objective, num_vars=size)
    if not result.feasible:
        return PairCheck(sigma, tau, PairStatus.INFEASIBLE, farkas=result.farkas)
    if not result.bounded:
        return PairCheck(sigma, tau, PairStatus.UNBOUNDED, point=result.point)
    status = PairStatus.PROPER if result.optimum == 0 else PairStatus.OVERLAP
    return PairCheck(sigma, tau, status, optimum=result.optimum, point=result.point)


def _checked_faces(K: SimplicialComplex, all_faces: bool) -> List[Face]:
    return K.faces() if all_faces else [f for f in K.facets if f]


def _pairs(faces: Sequence[Face], all_faces: bool):
    for sigma, tau in combinations(faces, 2):
        if all_faces and (set(sigma) <= set(tau) or set(tau) <= set(sigma)):
            continue
        yield sigma, tau


def _certify(
    K: SimplicialComplex, P: Placement, mode: Mode, all_faces: bool
) -> Certificate:
    if K.is_void:
        raise VoidComplexError("the void complex has nothing to certify")
    check_placed(K, P)
    faces = _checked_faces(K, all_faces)
    rank_checks = []
    for face in faces:
        found, required = _independence([P[v] for v in face], mode)
        rank_checks.append(RankCheck(face, found, required))
    pair_checks = [check_pair(P, s, t, mode) for s, t in _pairs(faces, all_faces)]
    return Certificate(
        complex_id(K), P.digest(), mode, tuple(rank_checks), tuple(pair_checks)
    )


def verify_geodesic_embedding(
    K: SimplicialComplex,
    P: Placement,
    all_faces: bool = False,
    require_sphere: bool = True,
) -> Certificate:
    """Certify that the spherical simplices spanned by the facets form an embedding.

    Facet vectors must be linearly independent and every two facet cones may
    only share the cone of their common face. `all_faces` checks every pair
    of non-nested faces instead of facet pairs; `require_sphere=False` accepts
    positively rescaled placements.
    """
    if require_sphere and not P.on_sphere:
        raise NotOnSphereError("geodesic verification needs an on-sphere placement")
    return _certify(K, P, Mode.GEODESIC, all_faces)


def verify_linear_embedding(
    K: SimplicialComplex, P: Placement, all_faces: bool = False
) -> Certificate:
    """Certify a straight-line embedding: affinely independent facets whose
    convex hulls meet exactly in the hull of their shared face."""
    return _certify(K, P, Mode.LINEAR, all_faces)


def verify_embedding(
    K: SimplicialComplex, P: Placement, mode: Mode, **options
) -> Certificate:
    if mode is Mode.GEODESIC:
        return verify_geodesic_embedding(K, P, **options)
    return verify_linear_embedding(K, P, **options)
