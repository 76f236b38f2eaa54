"""Canonical enumeration of PG(2,q) with fast incidence queries.

Points are homogeneous triples (x0, x1, x2) over GF(q), normalized so the
leftmost nonzero coordinate is 1.  Lines carry dual triples under the same
normalization; a point lies on a line iff the dot product vanishes.

Canonical ids are lexicographic on the normalized triple (comparing element
indices), which makes the id <-> triple map pure arithmetic:

    (0,0,1)            -> 0
    (0,1,z)            -> 1 + z
    (1,y,z)            -> 1 + q + y*q + z

so nothing per-point is ever stored.  The same map serves lines.  All heavy
operations are vectorized over numpy index arrays; a PlaneIndex is immutable
after construction and safe to share between workers.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .gf import Field

# default accommodates every q tabulated in the reference data (q <= 9109)
DEFAULT_POINT_CAP = 83_000_000


class MemoryBudgetExceeded(MemoryError):
    """The plane would have more points than the configured cap."""


class EqualPoints(ValueError):
    """Two distinct points are required to span a line."""


@dataclass(frozen=True)
class Point:
    id: int
    coords: tuple[int, int, int]


@dataclass(frozen=True)
class Line:
    id: int
    coeffs: tuple[int, int, int]


class PlaneIndex:
    """PG(2,q) over a given field: ids, incidence, pencils."""

    def __init__(self, field: Field, point_cap: int = DEFAULT_POINT_CAP):
        q = field.q
        n = q * q + q + 1
        if n > point_cap:
            raise MemoryBudgetExceeded(
                f"PG(2,{q}) has {n} points, above the cap of {point_cap}")
        self.field = field
        self.q = q
        self.n_points = n
        self.n_lines = n
        self._dt = field._idx_dtype
        self._pair_line = None
        self._line_points = None

    def __repr__(self):
        return f"PlaneIndex(q={self.q}, n_points={self.n_points})"

    # -- id <-> triple ------------------------------------------------------

    def triples_of_ids(self, ids):
        """(...,) ids -> (..., 3) normalized triples."""
        q = self.q
        ids = np.asarray(ids, dtype=self._dt)
        out = np.zeros(ids.shape + (3,), dtype=self._dt)
        axis_row = ids > q
        r = ids - (q + 1)
        out[..., 0] = np.where(axis_row, 1, 0)
        out[..., 1] = np.where(axis_row, r // q, np.where(ids >= 1, 1, 0))
        out[..., 2] = np.where(axis_row, r % q, np.where(ids >= 1, ids - 1, 1))
        return out

    def ids_of_triples(self, t):
        """(..., 3) normalized triples -> (...,) ids."""
        q = self.q
        x0, x1, x2 = t[..., 0], t[..., 1], t[..., 2]
        return np.where(x0 == 1, 1 + q + x1 * q + x2,
                        np.where(x1 == 1, 1 + x2, 0)).astype(self._dt)

    def normalize_triples(self, t):
        """Scale each nonzero triple so its leftmost nonzero entry is 1."""
        f = self.field
        t = np.asarray(t)
        x0, x1 = t[..., 0], t[..., 1]
        lead = np.where(x0 != 0, x0, np.where(x1 != 0, x1, t[..., 2]))
        scale = f.inv_arr(np.where(lead != 0, lead, 1))
        return f.mul_arr(t, scale[..., None])

    # -- algebra -------------------------------------------------------------

    def cross_triples(self, a, b):
        """Cross product over GF(q); broadcasts on leading axes."""
        f = self.field
        a0, a1, a2 = a[..., 0], a[..., 1], a[..., 2]
        b0, b1, b2 = b[..., 0], b[..., 1], b[..., 2]
        return np.stack([
            f.sub_arr(f.mul_arr(a1, b2), f.mul_arr(a2, b1)),
            f.sub_arr(f.mul_arr(a2, b0), f.mul_arr(a0, b2)),
            f.sub_arr(f.mul_arr(a0, b1), f.mul_arr(a1, b0)),
        ], axis=-1)

    def dot_triples(self, a, b):
        f = self.field
        s = f.mul_arr(a[..., 0], b[..., 0])
        s = f.add_arr(s, f.mul_arr(a[..., 1], b[..., 1]))
        return f.add_arr(s, f.mul_arr(a[..., 2], b[..., 2]))

    def join_ids(self, coords_a, coords_b):
        """Ids of the lines spanned by coordinate triples a and b (broadcast).

        For point inputs this is the joining line; since the construction is
        self-dual the same routine yields the meet of two lines.
        """
        return self.ids_of_triples(
            self.normalize_triples(self.cross_triples(coords_a, coords_b)))

    def null_pencils(self, w):
        """All q+1 normalized triples orthogonal to each triple of w.

        (..., 3) -> (..., q+1, 3).  For a line triple this enumerates its
        points; for a point triple, the lines through it.
        """
        f, q = self.field, self.q
        w0, w1, w2 = w[..., 0], w[..., 1], w[..., 2]
        case_a = w0 != 0
        case_b = (~case_a) & (w1 != 0)
        inv0 = f.inv_arr(np.where(case_a, w0, 1))
        inv1 = f.inv_arr(np.where(w1 != 0, w1, 1))
        zeros = np.zeros_like(w0)
        ones = np.ones_like(w0)
        u1 = np.stack([np.where(case_a, f.mul_arr(f.neg_arr(w1), inv0), ones),
                       np.where(case_a, ones, zeros),
                       zeros], axis=-1)
        u2c0 = np.where(case_a, f.mul_arr(f.neg_arr(w2), inv0), zeros)
        u2c1 = np.where(case_a, zeros,
                        np.where(case_b, f.mul_arr(f.neg_arr(w2), inv1), ones))
        u2c2 = np.where(case_a | case_b, ones, zeros)
        u2 = np.stack([u2c0, u2c1, u2c2], axis=-1)
        ts = np.arange(q, dtype=self._dt).reshape((1,) * w0.ndim + (q, 1))
        sols = f.add_arr(u1[..., None, :], f.mul_arr(ts, u2[..., None, :]))
        sols = np.concatenate([sols, u2[..., None, :]], axis=-2)
        return self.normalize_triples(sols)

    def points_on_lines_arr(self, line_ids):
        """(m,) line ids -> (m, q+1) point ids, unsorted."""
        return self.ids_of_triples(self.null_pencils(self.triples_of_ids(line_ids)))

    def lines_through_points_arr(self, point_ids):
        """(m,) point ids -> (m, q+1) line ids, unsorted."""
        return self.points_on_lines_arr(point_ids)  # self-dual

    # -- dense incidence tables (small q only) --------------------------------

    def has_tables(self, max_bytes: int = 300_000_000) -> bool:
        return 2 * self.n_points * self.n_points <= max_bytes

    def incidence_tables(self):
        """(pair_line, line_points) lookup tables, built once and cached.

        pair_line[i, j] is the id of the line joining points i and j (the
        diagonal is junk); line_points[l] lists the q+1 points of line l.
        By self-duality line_points[x] also lists the lines through point x.
        Only available when has_tables() holds.
        """
        if self._pair_line is None:
            if not self.has_tables():
                raise MemoryBudgetExceeded(
                    f"incidence tables for q={self.q} exceed the table budget")
            n = self.n_points
            dt = np.int16 if n <= np.iinfo(np.int16).max else np.int32
            tri = self.triples_of_ids(np.arange(n))
            pair = np.empty((n, n), dtype=dt)
            block = max(1, 4_000_000 // n)
            for lo in range(0, n, block):
                pair[lo:lo + block] = self.join_ids(
                    tri[lo:lo + block, None, :], tri[None, :, :])
            lpts = self.points_on_lines_arr(np.arange(n)).astype(dt)
            self._pair_line = pair
            self._line_points = lpts
        return self._pair_line, self._line_points

    # -- scalar views ---------------------------------------------------------

    def point(self, pid: int) -> Point:
        if not 0 <= pid < self.n_points:
            raise ValueError(f"point id {pid} out of range")
        return Point(pid, tuple(int(c) for c in self.triples_of_ids(pid)))

    def line(self, lid: int) -> Line:
        if not 0 <= lid < self.n_lines:
            raise ValueError(f"line id {lid} out of range")
        return Line(lid, tuple(int(c) for c in self.triples_of_ids(lid)))

    def point_id(self, coords) -> int:
        """Id of a (not necessarily normalized) nonzero coordinate triple."""
        t = np.asarray(coords, dtype=self._dt)
        if t.shape != (3,) or t.min() < 0 or t.max() >= self.q:
            raise ValueError(f"need three element indices in [0, {self.q})")
        if not t.any():
            raise ValueError("zero triple is not a projective point")
        return int(self.ids_of_triples(self.normalize_triples(t)))


def build_plane(field: Field, point_cap: int = DEFAULT_POINT_CAP) -> PlaneIndex:
    """Index PG(2,q) for the given field."""
    return PlaneIndex(field, point_cap)


def line_through(plane: PlaneIndex, p1: Point, p2: Point) -> Line:
    """The unique line through two distinct points."""
    if p1.id == p2.id:
        raise EqualPoints(f"point {p1.id} given twice")
    a = np.asarray(p1.coords, dtype=plane._dt)
    b = np.asarray(p2.coords, dtype=plane._dt)
    return plane.line(int(plane.join_ids(a, b)))


def incidence(plane: PlaneIndex, p: Point, l: Line) -> bool:
    """True iff the point lies on the line."""
    a = np.asarray(p.coords, dtype=plane._dt)
    b = np.asarray(l.coeffs, dtype=plane._dt)
    return int(plane.dot_triples(a, b)) == 0


def points_on_line(plane: PlaneIndex, l: Line) -> list[int]:
    """Sorted ids of the q+1 points on a line."""
    ids = plane.points_on_lines_arr(np.asarray([l.id]))[0]
    return sorted(int(i) for i in ids)
