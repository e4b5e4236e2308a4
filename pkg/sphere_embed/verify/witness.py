"""
Search for two disjoint faces whose convex hulls meet
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from ..complex_core import (
    Face,
    SimplicialComplex,
    face_to_mask,
    mask_to_face,
    maximal_masks,
)
from ..errors import VoidComplexError
from ..linalg import Vector
from ..placement import Placement
from .embedding import check_placed
from .lp import lp_feasible


@dataclass(frozen=True)
class OverlapWitness:
    """Disjoint faces sigma, tau and a common point of their convex hulls.

    point = sum(lambda_i * p_i over sigma) = sum(mu_j * p_j over tau), with
    both weight vectors non-negative and summing to 1.
    """

    sigma: Face
    tau: Face
    lam: Vector
    mu: Vector
    point: Vector

    def verify(self, P: Placement) -> bool:
        if set(self.sigma) & set(self.tau):
            return False
        for weights in (self.lam, self.mu):
            if any(w < 0 for w in weights) or sum(weights, Fraction(0)) != 1:
                return False
        left = _combine(P, self.sigma, self.lam)
        right = _combine(P, self.tau, self.mu)
        return left == right == tuple(self.point)


def _combine(P: Placement, face: Face, weights: Vector) -> Vector:
    total = [Fraction(0)] * P.dim
    for v, w in zip(face, weights):
        for axis, x in enumerate(P[v]):
            total[axis] += w * x
    return tuple(total)


def hull_intersection(
    P: Placement, sigma: Face, tau: Face
) -> Optional[Tuple[Vector, Vector]]:
    """Exact convex weights (lambda, mu) of a common point, or None if none exists."""
    A: List[List[Fraction]] = []
    for axis in range(P.dim):
        A.append([P[v][axis] for v in sigma] + [-P[v][axis] for v in tau])
    A.append([Fraction(1)] * len(sigma) + [Fraction(0)] * len(tau))
    A.append([Fraction(0)] * len(sigma) + [Fraction(1)] * len(tau))
    b = [Fraction(0)] * P.dim + [Fraction(1), Fraction(1)]
    result = lp_feasible(A, b, num_vars=len(sigma) + len(tau))
    if not result.feasible:
        return None
    weights = result.point
    return weights[: len(sigma)], weights[len(sigma):]


def _ordered(a: int, b: int) -> Tuple[int, int]:
    return (a, b) if _mask_order(a) <= _mask_order(b) else (b, a)


def _maximal_disjoint_pairs(K: SimplicialComplex) -> List[Tuple[int, int]]:
    """Disjoint face pairs maximal under inclusion; every disjoint pair lies in one."""
    facets = K.facet_masks
    pairs = set()
    for sigma in K.face_masks:
        if not sigma:
            continue
        for tau in maximal_masks(h & ~sigma for h in facets):
            if tau:
                pairs.add(_ordered(sigma, tau))
    maximal = [
        p
        for p in pairs
        if not any(q != p and _inside(p[0], p[1], q[0], q[1]) for q in pairs)
    ]
    return sorted(maximal, key=lambda p: (_mask_order(p[0]), _mask_order(p[1])))


def _mask_order(mask: int):
    face = mask_to_face(mask)
    return (len(face), face)


def overlap_witness(K: SimplicialComplex, P: Placement) -> Optional[OverlapWitness]:
    """First pair of disjoint non-empty faces whose images meet, in
    (|sigma| + |tau|, sigma, tau) order, or None."""
    if K.is_void:
        raise VoidComplexError("the void complex has no faces to compare")
    check_placed(K, P)

    overlapping = []
    for a, b in _maximal_disjoint_pairs(K):
        if hull_intersection(P, mask_to_face(a), mask_to_face(b)) is not None:
            overlapping.append((a, b))
    if not overlapping:
        return None

    faces = K.faces()
    candidates = []
    for i, sigma in enumerate(faces):
        for tau in faces[i + 1:]:
            if set(sigma) & set(tau):
                continue
            candidates.append((len(sigma) + len(tau), sigma, tau))
    candidates.sort()

    for _, sigma, tau in candidates:
        s, t = face_to_mask(sigma), face_to_mask(tau)
        if not any(_inside(s, t, a, b) for a, b in overlapping):
            continue
        weights = hull_intersection(P, sigma, tau)
        if weights is not None:
            lam, mu = weights
            return OverlapWitness(sigma, tau, lam, mu, _combine(P, sigma, lam))
    return None


def _inside(s: int, t: int, a: int, b: int) -> bool:
    return (s | a == a and t | b == b) or (s | b == b and t | a == a)
