"""Vectors over a finite field and the Hamming primitives built on them.

Vectors are immutable values: every operation returns a fresh vector and
coordinate buffers are write-protected.  The one-line text format used by
the CLI and by code files is comma-separated integer encodings, e.g.
``1,2,0``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import FieldMismatch, LengthMismatch
from .gf import Field


@dataclass(frozen=True, eq=False)
class Vector:
    """A length-n vector over a field, coordinates encoded as integers."""

    field: Field
    coords: np.ndarray

    def __post_init__(self):
        arr = np.array(self.coords, dtype=np.int64)  # defensive copy
        if arr.ndim != 1 or arr.size == 0:
            raise ValueError("a vector needs at least one coordinate")
        if arr.min() < 0 or arr.max() >= self.field.q:
            raise ValueError(f"coordinates must lie in [0, {self.field.q})")
        arr.setflags(write=False)
        object.__setattr__(self, "coords", arr)

    def __len__(self) -> int:
        return self.coords.size

    def __iter__(self):
        return iter(self.values())

    def values(self) -> tuple[int, ...]:
        return tuple(int(x) for x in self.coords)

    def is_zero(self) -> bool:
        return not self.coords.any()

    def __eq__(self, other):
        if not isinstance(other, Vector):
            return NotImplemented
        return self.field == other.field and np.array_equal(self.coords, other.coords)

    def __hash__(self):
        return hash((self.field, self.coords.tobytes()))

    def __repr__(self):
        return f"Vector({self.field!r}, [{format_vector(self)}])"


def _require_same_space(u: Vector, v: Vector):
    if u.field != v.field:
        raise FieldMismatch(f"{u.field!r} vs {v.field!r}")
    if len(u) != len(v):
        raise LengthMismatch(f"lengths {len(u)} vs {len(v)}")


def hamming_weight(u: Vector) -> int:
    """Number of nonzero coordinates."""
    return int(np.count_nonzero(u.coords))


def hamming_distance(u: Vector, v: Vector) -> int:
    """Number of coordinates where u and v differ."""
    _require_same_space(u, v)
    return int(np.count_nonzero(u.coords != v.coords))


def agreement(u: Vector, v: Vector) -> int:
    """Number of coordinates where u and v coincide."""
    return len(u) - hamming_distance(u, v)


def scalar_mul(c: int, u: Vector) -> Vector:
    """Coordinate-wise product c * u (c = 0 gives the zero vector)."""
    return Vector(u.field, u.field.scalar_mul_array(c, u.coords))


def dot(u: Vector, v: Vector) -> int:
    """Inner product sum_i u_i * v_i in the field."""
    _require_same_space(u, v)
    products = u.field.mul_array(u.coords, v.coords)
    acc = 0
    for x in products:
        acc = u.field.add(acc, int(x))
    return acc


def parse_vector(field: Field, text: str) -> Vector:
    """Parse a comma-separated list of integer encodings."""
    parts = [s.strip() for s in text.strip().split(",")]
    try:
        values = [int(s) for s in parts]
    except ValueError:
        raise ValueError(f"cannot parse vector from {text!r}") from None
    return Vector(field, values)


def format_vector(u: Vector) -> str:
    return ",".join(str(int(x)) for x in u.coords)
