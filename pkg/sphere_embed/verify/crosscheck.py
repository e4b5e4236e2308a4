"""
Double-precision re-evaluation of certificate checks with numpy and scipy
"""

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import numpy as np
from scipy.optimize import linprog

from ..complex_core import Face, SimplicialComplex
from ..placement import Placement
from ..prng import SplitMix64
from .embedding import Certificate, Mode, verify_embedding

TOLERANCE = 1e-9
LINPROG_INFEASIBLE = 2


@dataclass(frozen=True)
class Disagreement:
    trial: int
    kind: str
    faces: Tuple[Face, ...]
    exact_passed: bool
    float_passed: bool


@dataclass(frozen=True)
class CrossCheckReport:
    trials: int
    pair_checks: int
    disagreements: Tuple[Disagreement, ...]

    @property
    def agreed(self) -> bool:
        return not self.disagreements


def _float_rank_ok(points: np.ndarray, mode: Mode) -> bool:
    count = len(points)
    if count == 0:
        return True
    if mode is Mode.LINEAR:
        if count == 1:
            return True
        found = np.linalg.matrix_rank(points[1:] - points[0], tol=TOLERANCE)
        return found == count - 1
    return np.linalg.matrix_rank(points, tol=TOLERANCE) == count


def _float_pair_ok(
    coords: Dict[int, np.ndarray], sigma: Face, tau: Face, mode: Mode
) -> bool:
    union = sorted(set(sigma) | set(tau))
    if _float_rank_ok(np.array([coords[v] for v in union]), mode):
        return True
    left = np.array([coords[v] for v in sigma]).T
    right = np.array([coords[v] for v in tau]).T
    a_eq = [np.hstack([left, -right])]
    b_eq = [np.zeros(left.shape[0])]
    a_eq.append(np.hstack([np.ones((1, len(sigma))), np.zeros((1, len(tau)))]))
    b_eq.append(np.ones(1))
    if mode is Mode.LINEAR:
        a_eq.append(np.hstack([np.zeros((1, len(sigma))), np.ones((1, len(tau)))]))
        b_eq.append(np.ones(1))
    shared = set(sigma) & set(tau)
    c = np.array([0.0 if v in shared else -1.0 for v in sigma + tau])
    result = linprog(
        c,
        A_eq=np.vstack(a_eq),
        b_eq=np.concatenate(b_eq),
        bounds=(0, None),
        method="highs",
    )
    if result.status == LINPROG_INFEASIBLE:
        return True
    if result.status != 0:
        return False
    return -result.fun <= TOLERANCE


def _trial_coordinates(
    P: Placement, mode: Mode, trial: int, rng: SplitMix64
) -> Dict[int, np.ndarray]:
    base = {
        v: np.array([float(x) for x in p], dtype=float) for v, p in P.coords.items()
    }
    if trial == 0:
        return base
    factor = float(rng.rational(1, 4, 16))
    offset = np.zeros(P.dim)
    if mode is Mode.LINEAR:
        offset = np.array([float(rng.rational(-2, 2, 16)) for _ in range(P.dim)])
    return {v: factor * p + offset for v, p in base.items()}


def float_cross_check(
    K: SimplicialComplex,
    P: Placement,
    mode: Mode,
    trials: int = 1,
    seed: int = 0,
    certificate: Optional[Certificate] = None,
) -> CrossCheckReport:
    """Re-run every check of the exact certificate in floating point.

    Trial 0 uses the placement as given; later trials rescale it by a random
    positive factor (and translate it in linear mode), which leaves the exact
    verdicts unchanged. Disagreements are reported, never acted on.
    """
    if certificate is None:
        options = {"require_sphere": False} if mode is Mode.GEODESIC else {}
        certificate = verify_embedding(K, P, mode, **options)
    rng = SplitMix64(seed)
    disagreements: List[Disagreement] = []
    pair_count = 0
    for trial in range(max(trials, 1)):
        coords = _trial_coordinates(P, mode, trial, rng)
        for check in certificate.rank_checks:
            float_ok = _float_rank_ok(np.array([coords[v] for v in check.face]), mode)
            if float_ok != check.passed:
                disagreements.append(
                    Disagreement(trial, "rank", (check.face,), check.passed, float_ok)
                )
        for pair in certificate.pair_checks:
            pair_count += 1
            float_ok = _float_pair_ok(coords, pair.sigma, pair.tau, mode)
            if float_ok != pair.passed:
                disagreements.append(
                    Disagreement(
                        trial, "pair", (pair.sigma, pair.tau), pair.passed, float_ok
                    )
                )
    return CrossCheckReport(max(trials, 1), pair_count, tuple(disagreements))
