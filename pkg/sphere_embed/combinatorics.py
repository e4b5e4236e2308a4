"""
The decision side: intersecting families, matching numbers and embeddability verdicts
"""

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import combinations, permutations
from math import comb, factorial
from typing import List, Optional, Sequence, Tuple

from .complex_core import (
    Face,
    FaceFamily,
    SimplicialComplex,
    f_vector,
    face_to_mask,
    minimal_nonfaces,
    popcount,
)
from .errors import (
    InvalidParameterError,
    SearchBudgetExceededError,
    VoidComplexError,
    WrongGroundSetSizeError,
)

EKR_SEARCH_BUDGET = 1000
# Largest number of undirected cyclic orders used by the cyclic-order bound.
CYCLE_BOUND_LIMIT = 50000


class Decision(Enum):
    EMBEDS = "embeds"
    NOT_EMBEDDABLE = "not_embeddable"
    OUT_OF_SCOPE = "out_of_scope"


class SpaceDecision(Enum):
    EMBEDS_IN_SPACE = "embeds_in_space"
    SPHERE_ONLY = "sphere_only"
    NOT_EMBEDDABLE = "not_embeddable"
    OUT_OF_SCOPE = "out_of_scope"


@dataclass(frozen=True)
class Matching:
    """Pairwise disjoint members of a face family, in lexicographic order."""

    sets: Tuple[Face, ...]

    @property
    def size(self) -> int:
        return len(self.sets)

    def covered_vertices(self) -> Face:
        return tuple(sorted(v for s in self.sets for v in s))


@dataclass(frozen=True)
class Verdict:
    decision: Decision
    n: int
    d: int
    nu: Optional[int] = None
    matching: Optional[Matching] = None
    intersecting: Optional[bool] = None
    full_simplex: bool = False
    isolated_vertices: Face = ()

    @property
    def embeds(self) -> bool:
        return self.decision is Decision.EMBEDS


def is_intersecting(F: FaceFamily) -> bool:
    masks = F.masks
    return all(a & b for a, b in combinations(masks, 2))


def matching_number(F: FaceFamily) -> Tuple[int, Matching]:
    """Exact maximum matching, with the lexicographically least witness.

    The search includes sets before excluding them, in lexicographic order, so
    the first matching of each size it reaches is the least one of that size;
    only strict improvements replace the incumbent.
    """
    masks = list(F.masks)
    count = len(masks)
    best: List[int] = _greedy_matching(masks)
    chosen: List[int] = []

    def upper_bound(start: int, used: int) -> int:
        free_sets = [m for m in masks[start:] if not m & used]
        if not free_sets:
            return 0
        union = 0
        for m in free_sets:
            union |= m
        smallest = min(popcount(m) for m in free_sets)
        return min(len(free_sets), popcount(union) // smallest)

    def search(start: int, used: int) -> None:
        nonlocal best
        if len(chosen) > len(best):
            best = list(chosen)
        if start >= count or len(chosen) + upper_bound(start, used) <= len(best):
            return
        for i in range(start, count):
            if masks[i] & used:
                continue
            chosen.append(i)
            search(i + 1, used | masks[i])
            chosen.pop()
            if len(chosen) + upper_bound(i + 1, used) <= len(best):
                return

    search(0, 0)
    return len(best), Matching(tuple(F.sets[i] for i in best))


def _greedy_matching(masks: Sequence[int]) -> List[int]:
    used = 0
    picked = []
    for i, m in enumerate(masks):
        if not m & used:
            picked.append(i)
            used |= m
    return picked


def decide_embeddability(K: SimplicialComplex, d: int) -> Verdict:
    if d < 1:
        raise InvalidParameterError("the sphere dimension d must be at least 1")
    if K.is_void:
        raise VoidComplexError("the void complex has no embeddability verdict")
    n = K.n
    isolated = K.isolated_vertices
    if n <= d + 1:
        return Verdict(Decision.EMBEDS, n, d, isolated_vertices=isolated)
    if n == d + 2:
        full = K.is_full_simplex()
        decision = Decision.NOT_EMBEDDABLE if full else Decision.EMBEDS
        return Verdict(decision, n, d, full_simplex=full, isolated_vertices=isolated)
    if n > d + 3:
        return Verdict(Decision.OUT_OF_SCOPE, n, d, isolated_vertices=isolated)

    family = minimal_nonfaces(K)
    if not family.sets:
        # full simplex on d+3 vertices: the empty family is vacuously intersecting
        return Verdict(
            Decision.NOT_EMBEDDABLE,
            n,
            d,
            nu=0,
            matching=Matching(()),
            intersecting=True,
            full_simplex=True,
            isolated_vertices=isolated,
        )
    nu, matching = matching_number(family)
    decision = Decision.EMBEDS if nu >= 2 else Decision.NOT_EMBEDDABLE
    return Verdict(
        decision,
        n,
        d,
        nu=nu,
        matching=matching,
        intersecting=nu == 1,
        isolated_vertices=isolated,
    )


def ekr_embeddability(K: SimplicialComplex, d: int) -> Optional[int]:
    """Smallest admissible k with fewer than C(d+2, k) faces of dimension k-1."""
    if K.n != d + 3:
        raise WrongGroundSetSizeError(
            f"the face-count criterion needs exactly d+3 = {d + 3} vertices"
        )
    counts = f_vector(K)
    for k in range(2, (d + 3) // 2 + 1):
        faces = counts[k - 1] if k - 1 < len(counts) else 0
        if faces < comb(d + 2, k):
            return k
    return None


def sphere_dimension(K: SimplicialComplex) -> Optional[int]:
    """Sphere dimension of K when it is a join of simplex boundaries, else None."""
    if K.is_void:
        return None
    family = minimal_nonfaces(K)
    masks = family.masks
    if not masks or any(a & b for a, b in combinations(masks, 2)):
        return None
    union = 0
    for m in masks:
        union |= m
    if union != (1 << K.n) - 1:
        return None
    return K.n - len(masks) - 1


def geodesic_dimension_bound(K: SimplicialComplex) -> int:
    """n - nu - 1: K embeds geodesically into the sphere of this dimension."""
    family = minimal_nonfaces(K)
    nu, _ = matching_number(family)
    return K.n - nu - 1


def decide_space_embeddability(K: SimplicialComplex, d: int) -> SpaceDecision:
    verdict = decide_embeddability(K, d)
    if verdict.decision is Decision.OUT_OF_SCOPE:
        return SpaceDecision.OUT_OF_SCOPE
    if verdict.decision is Decision.NOT_EMBEDDABLE:
        return SpaceDecision.NOT_EMBEDDABLE
    if sphere_dimension(K) == d:
        return SpaceDecision.SPHERE_ONLY
    return SpaceDecision.EMBEDS_IN_SPACE


def star_family(n: int, k: int, center: int) -> FaceFamily:
    if not 1 <= center <= n or not 1 <= k <= n:
        raise InvalidParameterError(
            "star_family needs 1 <= center <= n and 1 <= k <= n"
        )
    others = [v for v in range(1, n + 1) if v != center]
    sets = tuple(tuple(sorted((center,) + c)) for c in combinations(others, k - 1))
    return FaceFamily(n, sets)


@lru_cache(maxsize=None)
def _arc_table(n: int, k: int) -> Tuple[int, ...]:
    """Largest pairwise-intersecting set of arcs for each subset of a cycle's arcs.

    Arc j covers positions j..j+k-1 (mod n); the table is indexed by the
    bitmask of arcs present and is filled by brute force.
    """
    arcs = [sum(1 << ((j + t) % n) for t in range(k)) for j in range(n)]
    clique_sizes = [0] * (1 << n)
    for subset in range(1 << n):
        members = [arcs[j] for j in range(n) if subset >> j & 1]
        if all(a & b for a, b in combinations(members, 2)):
            clique_sizes[subset] = len(members)
    best = list(clique_sizes)
    for subset in range(1 << n):
        for j in range(n):
            if subset >> j & 1:
                best[subset] = max(best[subset], best[subset & ~(1 << j)])
    return tuple(best)


@lru_cache(maxsize=None)
def _cyclic_orders(
    n: int, k: int, sets: Tuple[int, ...]
) -> Tuple[Tuple[int, ...], ...]:
    """For every undirected cyclic order of [n], the indices into `sets` of its arcs."""
    index = {m: i for i, m in enumerate(sets)}
    orders = []
    for rest in permutations(range(1, n)):
        if rest[0] > rest[-1]:
            continue
        cycle = (0,) + rest
        orders.append(
            tuple(
                index[sum(1 << cycle[(j + t) % n] for t in range(k))]
                for j in range(n)
            )
        )
    return tuple(orders)


def max_intersecting_family(n: int, k: int) -> Tuple[int, FaceFamily]:
    """Maximum clique in the 'intersects' graph on the k-subsets of [n].

    Branch and bound in lexicographic order (the first maximum found is the
    lexicographically least), seeded with the greedy clique and pruned by a
    greedy colouring bound and, for small n, a cyclic-order bound.
    """
    if k < 2 or n < 2 * k:
        raise InvalidParameterError("max_intersecting_family needs k >= 2 and n >= 2k")
    if comb(n, k) > EKR_SEARCH_BUDGET:
        raise SearchBudgetExceededError(
            f"C({n},{k}) = {comb(n, k)} exceeds the search budget"
        )

    subsets = [face_to_mask(c) for c in combinations(range(1, n + 1), k)]
    count = len(subsets)
    neighbours = [0] * count
    for i, j in combinations(range(count), 2):
        if subsets[i] & subsets[j]:
            neighbours[i] |= 1 << j
            neighbours[j] |= 1 << i

    use_cycles = factorial(n - 1) // 2 <= CYCLE_BOUND_LIMIT
    if use_cycles:
        table = _arc_table(n, k)
        orders = _cyclic_orders(n, k, tuple(subsets))
        coverage = [0] * count
        for order in orders:
            for i in order:
                coverage[i] += 1

    def colour_bound(candidates: int) -> int:
        colours = 0
        remaining = candidates
        while remaining:
            colours += 1
            available = remaining
            while available:
                low = available & -available
                i = low.bit_length() - 1
                remaining &= ~low
                available &= ~low & ~neighbours[i]
        return colours

    def cycle_bound(candidates: int) -> int:
        if not candidates:
            return 0
        total = 0
        for order in orders:
            present = 0
            for j, i in enumerate(order):
                if candidates >> i & 1:
                    present |= 1 << j
            total += table[present]
        least = min(coverage[i] for i in range(count) if candidates >> i & 1)
        return total // least

    def bound(candidates: int) -> int:
        value = min(popcount(candidates), colour_bound(candidates))
        if use_cycles and value > 0:
            value = min(value, cycle_bound(candidates))
        return value

    best = _greedy_clique(count, neighbours)
    chosen: List[int] = []

    def search(candidates: int) -> None:
        nonlocal best
        if len(chosen) > len(best):
            best = list(chosen)
        if len(chosen) + bound(candidates) <= len(best):
            return
        while candidates:
            low = candidates & -candidates
            i = low.bit_length() - 1
            candidates &= ~low
            chosen.append(i)
            search(candidates & neighbours[i])
            chosen.pop()
            if len(chosen) + bound(candidates) <= len(best):
                return

    search((1 << count) - 1)
    family = FaceFamily.from_masks(n, (subsets[i] for i in best))
    return len(best), family


def _greedy_clique(count: int, neighbours: Sequence[int]) -> List[int]:
    picked = []
    candidates = (1 << count) - 1
    while candidates:
        low = candidates & -candidates
        i = low.bit_length() - 1
        picked.append(i)
        candidates &= neighbours[i]
    return picked
