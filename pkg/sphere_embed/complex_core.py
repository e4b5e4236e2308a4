"""
Abstract simplicial complexes and set families on small ground sets

Faces are tuples of increasing vertex ids in 1..n. Internally every face is
also a bitmask with bit (v - 1) set for each vertex v; ground sets stay below
a dozen elements, so plain ints are enough.
"""

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations, permutations
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

from .errors import (
    EmptyFaceInFamilyError,
    EmptyGroundSetError,
    GroundSetTooLargeError,
    InvalidParameterError,
    VertexOutOfRangeError,
    VoidComplexError,
)
from .prng import SplitMix64

Face = Tuple[int, ...]
CanonicalForm = bytes

# Subset scans run over all 2^n masks; larger ground sets are refused.
MAX_GROUND_SET_N = 16
MAX_CANONICAL_N = 9
MAX_EXHAUSTIVE_N = 5
# Permutation lookup tables are only built up to this ground-set size.
MAX_TABLE_N = 6


def face_to_mask(face: Iterable[int]) -> int:
    mask = 0
    for v in face:
        mask |= 1 << (v - 1)
    return mask


def mask_to_face(mask: int) -> Face:
    face = []
    v = 1
    while mask:
        if mask & 1:
            face.append(v)
        mask >>= 1
        v += 1
    return tuple(face)


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def submasks(mask: int) -> Iterator[int]:
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def maximal_masks(masks: Iterable[int]) -> List[int]:
    unique = sorted(set(masks), key=popcount, reverse=True)
    kept: List[int] = []
    for m in unique:
        if not any(m | k == k for k in kept):
            kept.append(m)
    return kept


def minimal_masks(masks: Iterable[int]) -> List[int]:
    unique = sorted(set(masks), key=popcount)
    kept: List[int] = []
    for m in unique:
        if not any(k & m == k for k in kept):
            kept.append(m)
    return kept


def _normalize_face(n: int, vertices: Iterable[int]) -> Face:
    face = tuple(sorted(set(int(v) for v in vertices)))
    for v in face:
        if v < 1 or v > n:
            raise VertexOutOfRangeError(f"vertex {v} outside 1..{n}")
    return face


def _check_ground_set(n: int) -> None:
    if n > MAX_GROUND_SET_N:
        raise GroundSetTooLargeError(
            f"ground sets are limited to n <= {MAX_GROUND_SET_N}, got {n}"
        )


def _face_key(face: Face):
    return (len(face), face)


@dataclass(frozen=True)
class SimplicialComplex:
    """A downward-closed family of subsets of [n], stored by its facets.

    `facets` is kept sorted; no facet contains another when the complex is
    built through from_facets, complex_of or the other constructors here.
    An empty `facets` tuple is the void complex (no faces at all); the tuple
    ``((),)`` is the complex whose only face is the empty face.
    """

    n: int
    facets: Tuple[Face, ...]

    def __post_init__(self):
        if self.n < 0:
            raise InvalidParameterError("ground-set size must be non-negative")
        facets = tuple(sorted({_normalize_face(self.n, f) for f in self.facets}))
        object.__setattr__(self, "facets", facets)

    @classmethod
    def empty(cls, n: int = 0) -> "SimplicialComplex":
        return cls(n, ((),))

    @classmethod
    def void(cls, n: int) -> "SimplicialComplex":
        return cls(n, ())

    @classmethod
    def from_masks(cls, n: int, masks: Iterable[int]) -> "SimplicialComplex":
        return cls(n, tuple(mask_to_face(m) for m in masks))

    @cached_property
    def facet_masks(self) -> Tuple[int, ...]:
        return tuple(face_to_mask(f) for f in self.facets)

    @cached_property
    def face_masks(self) -> FrozenSet[int]:
        faces = set()
        for m in self.facet_masks:
            faces.update(submasks(m))
        return frozenset(faces)

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def dimension(self) -> int:
        return max((len(f) for f in self.facets), default=0) - 1

    @cached_property
    def vertices(self) -> Face:
        masks = self.face_masks
        return tuple(v for v in range(1, self.n + 1) if (1 << (v - 1)) in masks)

    @property
    def isolated_vertices(self) -> Face:
        """Ground-set elements that are not vertices of the complex."""
        present = set(self.vertices)
        return tuple(v for v in range(1, self.n + 1) if v not in present)

    def contains_mask(self, mask: int) -> bool:
        return any(mask | f == f for f in self.facet_masks)

    def __contains__(self, face) -> bool:
        return self.contains_mask(face_to_mask(face))

    def faces(self, include_empty: bool = False) -> List[Face]:
        masks = (m for m in self.face_masks if include_empty or m)
        return sorted((mask_to_face(m) for m in masks), key=_face_key)

    def is_full_simplex(self) -> bool:
        return self.facets == (tuple(range(1, self.n + 1)),)

    def relabel(
        self, mapping: Dict[int, int], n: Optional[int] = None
    ) -> "SimplicialComplex":
        size = self.n if n is None else n
        facets = tuple(tuple(mapping[v] for v in f) for f in self.facets)
        return SimplicialComplex(size, facets)


@dataclass(frozen=True)
class FaceFamily:
    """A family of non-empty subsets of [n], e.g. the minimal non-faces of a complex."""

    n: int
    sets: Tuple[Face, ...]

    def __post_init__(self):
        normalized = set()
        for s in self.sets:
            face = _normalize_face(self.n, s)
            if not face:
                raise EmptyFaceInFamilyError(
                    "a face family cannot contain the empty set"
                )
            normalized.add(face)
        object.__setattr__(self, "sets", tuple(sorted(normalized)))

    @classmethod
    def from_masks(cls, n: int, masks: Iterable[int]) -> "FaceFamily":
        return cls(n, tuple(mask_to_face(m) for m in masks))

    @cached_property
    def masks(self) -> Tuple[int, ...]:
        return tuple(face_to_mask(s) for s in self.sets)

    def __len__(self) -> int:
        return len(self.sets)

    def __iter__(self) -> Iterator[Face]:
        return iter(self.sets)

    def minimal(self) -> "FaceFamily":
        return FaceFamily.from_masks(self.n, minimal_masks(self.masks))

    def is_antichain(self) -> bool:
        return len(minimal_masks(self.masks)) == len(self.masks)

    def covered_vertices(self) -> Face:
        union = 0
        for m in self.masks:
            union |= m
        return mask_to_face(union)


def from_facets(n: int, facets: Sequence[Iterable[int]]) -> SimplicialComplex:
    if n < 1:
        raise EmptyGroundSetError("a complex needs a ground set of size at least 1")
    _check_ground_set(n)
    masks = [face_to_mask(_normalize_face(n, f)) for f in facets]
    return SimplicialComplex.from_masks(n, maximal_masks(masks))


def full_simplex(n: int) -> SimplicialComplex:
    return SimplicialComplex(n, (tuple(range(1, n + 1)),))


def minimal_nonfaces(K: SimplicialComplex) -> FaceFamily:
    if K.is_void:
        raise VoidComplexError("the void complex has the empty set as a non-face")
    _check_ground_set(K.n)
    faces = K.face_masks
    found = []
    for mask in range(1, 1 << K.n):
        if mask in faces:
            continue
        if all((mask & ~(1 << i)) in faces for i in range(K.n) if mask >> i & 1):
            found.append(mask)
    return FaceFamily.from_masks(K.n, found)


def complex_of(n: int, F) -> SimplicialComplex:
    """The complex of all subsets of [n] that contain no member of F."""
    _check_ground_set(n)
    family = F if isinstance(F, FaceFamily) else FaceFamily(n, tuple(F))
    if family.n > n:
        for s in family.sets:
            _normalize_face(n, s)
    forbidden = family.masks

    def is_face(mask: int) -> bool:
        return all(s & mask != s for s in forbidden)

    facets = []
    for mask in range(1 << n):
        if not is_face(mask):
            continue
        if all(mask >> i & 1 or not is_face(mask | 1 << i) for i in range(n)):
            facets.append(mask)
    return SimplicialComplex.from_masks(n, facets)


def skeleton(K: SimplicialComplex, k: int) -> SimplicialComplex:
    if k < 0:
        raise InvalidParameterError("skeleton dimension must be non-negative")
    masks = []
    for facet in K.facets:
        if len(facet) <= k + 1:
            masks.append(face_to_mask(facet))
        else:
            masks.extend(face_to_mask(c) for c in combinations(facet, k + 1))
    return SimplicialComplex.from_masks(K.n, maximal_masks(masks))


def join(K1: SimplicialComplex, K2: SimplicialComplex) -> SimplicialComplex:
    """Join on disjoint vertex sets; vertices of K2 are shifted by K1.n."""
    n = K1.n + K2.n
    masks = [f1 | (f2 << K1.n) for f1 in K1.facet_masks for f2 in K2.facet_masks]
    return SimplicialComplex.from_masks(n, masks)


def boundary_simplex(m: int) -> SimplicialComplex:
    if m < 1:
        raise InvalidParameterError("boundary_simplex needs m >= 1")
    return SimplicialComplex(m + 1, tuple(combinations(range(1, m + 2), m)))


def vkf_complex(d: int) -> SimplicialComplex:
    if d < 1:
        raise InvalidParameterError("vkf_complex needs d >= 1")
    return skeleton(full_simplex(2 * d + 3), d)


def f_vector(K: SimplicialComplex) -> Tuple[int, ...]:
    counts = [0] * (K.n + 1)
    for m in K.face_masks:
        counts[popcount(m)] += 1
    entries = counts[1:]
    while entries and entries[-1] == 0:
        entries.pop()
    return tuple(entries)


def euler_characteristic(K: SimplicialComplex) -> int:
    return sum(count if i % 2 == 0 else -count for i, count in enumerate(f_vector(K)))


@lru_cache(maxsize=None)
def _relabel_tables(n: int) -> Tuple[Tuple[int, ...], ...]:
    tables = []
    for perm in permutations(range(n)):
        bits = [1 << p for p in perm]
        tables.append(
            tuple(sum(bits[i] for i in range(n) if m >> i & 1) for m in range(1 << n))
        )
    return tuple(tables)


def _relabelings(n: int, masks: Sequence[int]) -> Iterator[Tuple[int, ...]]:
    if n <= MAX_TABLE_N:
        for table in _relabel_tables(n):
            yield tuple(sorted(table[m] for m in masks))
        return
    for perm in permutations(range(n)):
        bits = [1 << p for p in perm]
        yield tuple(sorted(sum(bits[i] for i in range(n) if m >> i & 1) for m in masks))


def canonical_form(K: SimplicialComplex) -> CanonicalForm:
    """Lexicographically least facet-mask encoding over all vertex relabelings."""
    if K.n > MAX_CANONICAL_N:
        raise GroundSetTooLargeError(f"canonical_form supports n <= {MAX_CANONICAL_N}")
    best = min(_relabelings(K.n, K.facet_masks))
    return bytes([K.n]) + b"".join(m.to_bytes(2, "big") for m in best)


def antichains(n: int) -> Iterator[FaceFamily]:
    """Every antichain of non-empty subsets of [n], each exactly once."""
    top = 1 << n
    chosen: List[int] = []

    def extend(start: int) -> Iterator[FaceFamily]:
        yield FaceFamily.from_masks(n, chosen)
        for m in range(start, top):
            # earlier members have smaller masks, so none can be a superset of m
            if all(c & m != c for c in chosen):
                chosen.append(m)
                yield from extend(m + 1)
                chosen.pop()

    return extend(1)


def sample_complexes(n: int, count: int, seed: int = 0) -> Iterator[SimplicialComplex]:
    """Pseudorandom complexes complex_of(n, F).

    Each F draws 1..n+1 sets, each a uniformly random subset whose size is
    uniform in 2..n, and keeps the inclusion-minimal ones.
    """
    if n < 2:
        raise InvalidParameterError("sampling needs n >= 2")
    rng = SplitMix64(seed)
    for _ in range(count):
        draws = 1 + rng.below(n + 1)
        masks = [rng.subset_mask(n, 2 + rng.below(n - 1)) for _ in range(draws)]
        yield complex_of(n, FaceFamily.from_masks(n, minimal_masks(masks)))


def enumerate_complexes(
    n: int, sample: Optional[int] = None, seed: int = 0
) -> Iterator[SimplicialComplex]:
    """Exhaustive stream up to isomorphism (n <= 5), or a seeded sample."""
    if n < 1:
        raise EmptyGroundSetError("enumeration needs n >= 1")
    if sample is not None:
        yield from sample_complexes(n, sample, seed)
        return
    if n > MAX_EXHAUSTIVE_N:
        raise GroundSetTooLargeError(
            f"exhaustive enumeration supports n <= {MAX_EXHAUSTIVE_N}"
        )
    classes: Dict[CanonicalForm, SimplicialComplex] = {}
    for family in antichains(n):
        K = complex_of(n, family)
        classes.setdefault(canonical_form(K), K)
    for key in sorted(classes):
        yield classes[key]
