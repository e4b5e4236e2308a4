"""
Exact certification of placements: LP kernel, embedding certificates, overlap witnesses
"""

from .crosscheck import CrossCheckReport, Disagreement, float_cross_check
from .embedding import (
    Certificate,
    Mode,
    PairCheck,
    PairStatus,
    RankCheck,
    complex_id,
    verify_embedding,
    verify_geodesic_embedding,
    verify_linear_embedding,
)
from .lp import LPResult, LPStatus, check_farkas, check_point, lp_feasible
from .witness import OverlapWitness, hull_intersection, overlap_witness

__all__ = [
    "Certificate",
    "CrossCheckReport",
    "Disagreement",
    "LPResult",
    "LPStatus",
    "Mode",
    "OverlapWitness",
    "PairCheck",
    "PairStatus",
    "RankCheck",
    "check_farkas",
    "check_point",
    "complex_id",
    "float_cross_check",
    "hull_intersection",
    "lp_feasible",
    "overlap_witness",
    "verify_embedding",
    "verify_geodesic_embedding",
    "verify_linear_embedding",
]
