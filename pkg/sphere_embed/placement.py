"""
Vertex placements with exact rational coordinates
"""

import hashlib
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Mapping

from .errors import DimensionMismatchError, InvalidParameterError, NotOnSphereError
from .linalg import Vector, format_rational, squared_norm, vector


@dataclass(frozen=True)
class Placement:
    """Images of the vertices of a complex in rational `dim`-space.

    With `on_sphere` set every vector has squared norm exactly 1.
    """

    dim: int
    coords: Mapping[int, Vector] = field(default_factory=dict)
    on_sphere: bool = False

    def __post_init__(self):
        if self.dim < 0:
            raise InvalidParameterError("placement dimension must be non-negative")
        coords: Dict[int, Vector] = {}
        for v in sorted(self.coords):
            point = vector(self.coords[v])
            if len(point) != self.dim:
                raise DimensionMismatchError(
                    f"vertex {v} has {len(point)} coordinates, expected {self.dim}"
                )
            if self.on_sphere and squared_norm(point) != 1:
                raise NotOnSphereError(f"vertex {v} is not on the unit sphere")
            coords[int(v)] = point
        object.__setattr__(self, "coords", coords)

    def __getitem__(self, v: int) -> Vector:
        return self.coords[v]

    def __contains__(self, v) -> bool:
        return v in self.coords

    @property
    def vertices(self):
        return tuple(self.coords)

    def scaled(self, factor: Fraction) -> "Placement":
        factor = Fraction(factor)
        return Placement(
            self.dim,
            {v: tuple(factor * x for x in p) for v, p in self.coords.items()},
            on_sphere=self.on_sphere and factor * factor == 1,
        )

    def translated(self, offset) -> "Placement":
        shift = vector(offset)
        coords = {
            v: tuple(a + b for a, b in zip(p, shift)) for v, p in self.coords.items()
        }
        return Placement(self.dim, coords)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "dim": self.dim,
            "on_sphere": self.on_sphere,
            "coords": {
                str(v): [format_rational(x) for x in p] for v, p in self.coords.items()
            },
        }

    def digest(self) -> str:
        """sha256 of the sorted-key JSON form."""
        text = json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(text.encode("utf-8")).hexdigest()
