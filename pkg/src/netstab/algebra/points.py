"""Points of projective space over Q or Q(sqrt d)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .field import conjugate, field_of, inv
from .poly import _norm, format_coeff


@dataclass(frozen=True)
class ProjPoint:
    """Homogeneous coordinates scaled so the first nonzero entry is 1."""

    coords: tuple

    def __init__(self, coords: Sequence):
        coords = [_norm(c) for c in coords]
        k = next((i for i, c in enumerate(coords) if c), None)
        if k is None:
            raise ValueError("all coordinates are zero")
        s = inv(coords[k])
        object.__setattr__(self, "coords", tuple(_norm(c * s) for c in coords))

    @property
    def dim(self) -> int:
        return len(self.coords) - 1

    def field(self) -> int | None:
        return field_of(self.coords)

    def is_rational(self) -> bool:
        return self.field() is None

    def conjugate(self) -> "ProjPoint":
        return ProjPoint([conjugate(c) for c in self.coords])

    def affine_chart(self) -> int:
        """Index of the coordinate used to dehomogenize (the first nonzero one)."""
        return next(i for i, c in enumerate(self.coords) if c)

    def __str__(self):
        return "(" + ":".join(_fmt(c) for c in self.coords) + ")"

    def sort_key(self):
        return tuple((0, str(c)) if isinstance(c, int) else (1, str(c)) for c in self.coords)


def _fmt(c) -> str:
    s = format_coeff(c)
    return s[1:-1] if s.startswith("(") else s
