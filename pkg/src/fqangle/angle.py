"""The scalar-invariant angle between nonzero vectors over a finite field.

The angle between nonzero u and v is the minimum over all nonzero scalars
c of the Hamming distance between u and c*v.  Two algorithms are provided:

* ``angle_naive`` evaluates the definition directly, one distance per
  nonzero scalar (q-1 passes).  It is the reference oracle.
* ``angle_fast`` makes a single pass: it partitions the positions by the
  joint zero-pattern of (u_i, v_i), counts for every scalar c how many
  positions satisfy u_i = c * v_i with both sides nonzero (a census
  indexed by the ratio u_i / v_i), and returns
  ``n - both_zero - max_c count(c)``.

Both have batched row-wise variants operating on (T, n) integer arrays,
which the verification suites and the decoder build on.

The angle is invariant under nonzero rescaling of either argument and so
descends to the projective space; ``ProjectivePoint`` holds the canonical
representative (first nonzero coordinate scaled to 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .errors import ZeroVector
from .gf import Field
from .vectors import Vector, _require_same_space, scalar_mul

# Above this many cells the row-offset bincount is replaced by a sort-based
# per-row count (keeps memory O(T*n) when q is huge relative to n).
_BINCOUNT_CELL_CAP = 1 << 25


@dataclass(frozen=True)
class RatioCensus:
    """Partition of positions by the joint zero-pattern of a vector pair.

    both_zero / only_u / only_v count positions where both coordinates
    vanish, only u_i is nonzero, only v_i is nonzero.  ratio_counts maps a
    nonzero scalar c to the number of positions with u_i = c * v_i and
    both coordinates nonzero; scalars with count zero are omitted.
    """

    both_zero: int
    only_u: int
    only_v: int
    ratio_counts: Mapping[int, int]

    def total(self) -> int:
        return self.both_zero + self.only_u + self.only_v + sum(self.ratio_counts.values())


def _check_nonzero_pair(u: Vector, v: Vector):
    _require_same_space(u, v)
    if u.is_zero() or v.is_zero():
        raise ZeroVector("the angle is defined only for nonzero vectors")


def build_census(u: Vector, v: Vector) -> RatioCensus:
    """Single pass over positions collecting the zero-pattern partition."""
    _check_nonzero_pair(u, v)
    a, b = u.coords, v.coords
    az = a == 0
    bz = b == 0
    both = ~az & ~bz
    ratios = u.field.div_array(a[both], b[both])
    values, counts = np.unique(ratios, return_counts=True)
    return RatioCensus(
        both_zero=int(np.count_nonzero(az & bz)),
        only_u=int(np.count_nonzero(~az & bz)),
        only_v=int(np.count_nonzero(az & ~bz)),
        ratio_counts={int(c): int(k) for c, k in zip(values, counts)},
    )


# ----------------------------------------------------------------------
# Batched kernels on (T, n) arrays of encoded elements (rows nonzero)
# ----------------------------------------------------------------------

def angle_fast_rows(field: Field, U: np.ndarray, V: np.ndarray) -> np.ndarray:
    """Row-wise single-pass angle for paired rows of U and V."""
    U = np.atleast_2d(U)
    V = np.atleast_2d(V)
    T, n = U.shape
    q = field.q
    uz = U == 0
    vz = V == 0
    n0 = np.count_nonzero(uz & vz, axis=1)
    both = ~uz & ~vz
    R = field.div_array(U, V)  # garbage outside `both`, masked below
    width = q + 1  # column q is the sentinel for masked-out positions
    if T * width <= _BINCOUNT_CELL_CAP:
        flat = np.where(both, R, q) + (np.arange(T, dtype=np.int64) * width)[:, None]
        counts = np.bincount(flat.ravel(), minlength=T * width).reshape(T, width)
        amax = counts[:, 1:q].max(axis=1)
    else:
        row_idx, col_idx = np.nonzero(both)
        amax = np.zeros(T, dtype=np.int64)
        if row_idx.size:
            keys = np.sort(row_idx * width + R[row_idx, col_idx])
            boundary = np.empty(keys.size, dtype=bool)
            boundary[0] = True
            np.not_equal(keys[1:], keys[:-1], out=boundary[1:])
            starts = np.flatnonzero(boundary)
            run_lengths = np.diff(np.append(starts, keys.size))
            np.maximum.at(amax, keys[starts] // width, run_lengths)
    return n - n0 - amax


def angle_naive_rows(field: Field, U: np.ndarray, V: np.ndarray) -> np.ndarray:
    """Row-wise brute force: min over nonzero c of d_H(u, c*v)."""
    U = np.atleast_2d(U)
    V = np.atleast_2d(V)
    T, n = U.shape
    best = np.full(T, n, dtype=np.int64)
    if field.m == 1:
        p = field.p
        U32 = np.ascontiguousarray(U, dtype=np.int32)
        V32 = np.ascontiguousarray(V, dtype=np.int32)
        buf = np.empty_like(V32)
        neq = np.empty(U32.shape, dtype=bool)
        for c in range(1, p):
            np.multiply(V32, c, out=buf)
            np.mod(buf, p, out=buf)
            np.not_equal(buf, U32, out=neq)
            np.minimum(best, np.count_nonzero(neq, axis=1), out=best)
        return best
    vz = V == 0
    # where v_i = 0, c*v_i = 0 for every c: mismatches there are constant
    base = np.count_nonzero(vz & (U != 0), axis=1)
    logV = field.log_table[V]  # -1 where V = 0, masked below
    W = np.empty(V.shape, dtype=np.int64)
    idx = np.empty(V.shape, dtype=np.int64)
    for c in range(1, field.q):
        np.add(logV, int(field.log_table[c]), out=idx)
        np.mod(idx, field.q - 1, out=idx)
        np.take(field.exp_table, idx, out=W)
        d = base + np.count_nonzero((W != U) & ~vz, axis=1)
        np.minimum(best, d, out=best)
    return best


# ----------------------------------------------------------------------
# Pairwise API
# ----------------------------------------------------------------------

def angle_naive(u: Vector, v: Vector) -> int:
    """Minimum over all nonzero scalars c of d_H(u, c*v); the oracle form."""
    _check_nonzero_pair(u, v)
    return int(angle_naive_rows(u.field, u.coords, v.coords)[0])


def angle_fast(u: Vector, v: Vector) -> int:
    """Single-pass angle; always equals angle_naive(u, v)."""
    _check_nonzero_pair(u, v)
    return int(angle_fast_rows(u.field, u.coords, v.coords)[0])


def argmin_scalar(u: Vector, v: Vector) -> tuple[int, int]:
    """A nonzero scalar attaining the angle, with the angle itself.

    Ties are broken by the smallest integer encoding.  When no position
    has both coordinates nonzero, every scalar attains the minimum and
    c = 1 is returned by convention.
    """
    census = build_census(u, v)
    n = len(u)
    if not census.ratio_counts:
        return 1, n - census.both_zero
    best_count = max(census.ratio_counts.values())
    c_star = min(c for c, k in census.ratio_counts.items() if k == best_count)
    return c_star, n - census.both_zero - best_count


def is_max_angle(u: Vector, v: Vector) -> bool:
    """True iff at every position exactly one of u_i, v_i vanishes."""
    _check_nonzero_pair(u, v)
    return bool(np.all((u.coords == 0) != (v.coords == 0)))


# ----------------------------------------------------------------------
# Projective space
# ----------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class ProjectivePoint:
    """A projective point, held as the representative whose first nonzero
    coordinate equals 1."""

    rep: Vector

    def __post_init__(self):
        nz = np.flatnonzero(self.rep.coords)
        if nz.size == 0:
            raise ZeroVector("a projective point needs a nonzero representative")
        if int(self.rep.coords[nz[0]]) != 1:
            raise ValueError("representative is not normalized; use projectivize()")

    @property
    def field(self) -> Field:
        return self.rep.field

    def __len__(self) -> int:
        return len(self.rep)

    def __eq__(self, other):
        if not isinstance(other, ProjectivePoint):
            return NotImplemented
        return self.rep == other.rep

    def __hash__(self):
        return hash(self.rep)

    def __repr__(self):
        return f"ProjectivePoint([{','.join(str(x) for x in self.rep.coords)}])"


def projectivize(u: Vector) -> ProjectivePoint:
    """Canonical representative of the line through u (u nonzero)."""
    nz = np.flatnonzero(u.coords)
    if nz.size == 0:
        raise ZeroVector("the zero vector spans no projective point")
    lead = int(u.coords[nz[0]])
    rep = u if lead == 1 else scalar_mul(u.field.inv(lead), u)
    return ProjectivePoint(rep)


def normalize_rows(field: Field, M: np.ndarray) -> np.ndarray:
    """Canonical projective representatives for each (nonzero) row of M."""
    M = np.atleast_2d(M)
    first_nz = (M != 0).argmax(axis=1)
    lead = M[np.arange(M.shape[0]), first_nz]
    return field.mul_array(field.inv_table[lead][:, None], M)


def projective_distance(a: ProjectivePoint, b: ProjectivePoint) -> int:
    """The induced metric on projective points (angle of representatives)."""
    return angle_fast(a.rep, b.rep)
