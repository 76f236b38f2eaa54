"""Arcs, arc verification, and secant-coverage bookkeeping.

An arc is a point set meeting every line in at most two points.  A point of
the plane is *covered* when it belongs to the arc or lies on a secant (a
line through two arc points); the arc is complete exactly when every point
is covered, since an uncovered point could always be adjoined.

``verify_arc`` / ``verify_complete`` recompute everything from scratch and
serve as the independent verifiers.  ``CoverageState`` plus ``coverage_add``
maintain the same information incrementally for search loops, and
``new_coverage_gain`` scores a candidate without mutating anything.
"""

from __future__ import annotations

import numpy as np

from .plane import PlaneIndex

_LINE_CHUNK = 2048  # bounds the (lines x q+1) marking buffers


class NotAnArc(ValueError):
    """Operation requires a valid arc (no three collinear, no duplicates)."""


class CoveredPoint(ValueError):
    """Only uncovered points may extend an arc."""


class Arc:
    """Ordered point set with a membership mask over the plane."""

    def __init__(self, plane: PlaneIndex, points=()):
        self.plane = plane
        self.points: list[int] = []
        self.in_arc = np.zeros(plane.n_points, dtype=bool)
        for p in points:
            self.append(p)

    def append(self, pid: int) -> None:
        if not 0 <= pid < self.plane.n_points:
            raise ValueError(f"point id {pid} out of range")
        if self.in_arc[pid]:
            raise NotAnArc(f"duplicate point {pid}")
        self.points.append(int(pid))
        self.in_arc[pid] = True

    def __len__(self):
        return len(self.points)

    def __repr__(self):
        return f"Arc(q={self.plane.q}, size={len(self.points)})"

    def coords(self) -> np.ndarray:
        """(k, 3) normalized coordinate rows in insertion order."""
        return self.plane.triples_of_ids(np.asarray(self.points, dtype=np.int64))


def _pair_line_ids(arc: Arc) -> np.ndarray:
    """Line ids spanned by every unordered pair of arc points."""
    k = len(arc.points)
    if k < 2:
        return np.empty(0, dtype=arc.plane._dt)
    coords = arc.coords()
    iu, ju = np.triu_indices(k, 1)
    return arc.plane.join_ids(coords[iu], coords[ju])


def verify_arc(arc: Arc) -> bool:
    """True iff no line meets the arc in three points.

    Tallies arc points per line over all pairs: the arc property holds
    exactly when the C(k,2) joining lines are pairwise distinct.
    """
    if len(set(arc.points)) != len(arc.points):
        return False
    lids = _pair_line_ids(arc)
    return len(np.unique(lids)) == len(lids)


def verify_complete(arc: Arc) -> tuple[bool, list[int]]:
    """Recompute coverage from scratch; return (complete, uncovered ids).

    Every uncovered id returned could legally extend the arc.
    """
    if not verify_arc(arc):
        raise NotAnArc("input fails the arc property")
    pl = arc.plane
    covered = arc.in_arc.copy()
    lids = _pair_line_ids(arc)
    for lo in range(0, len(lids), _LINE_CHUNK):
        pts = pl.points_on_lines_arr(lids[lo:lo + _LINE_CHUNK])
        covered[pts.ravel()] = True
    uncovered = np.flatnonzero(~covered)
    return len(uncovered) == 0, [int(x) for x in uncovered]


class CoverageState:
    """Covered-point bitset plus per-line arc-point counters.

    ``line_arc_counts[l]`` is the number of arc points on line l (0, 1, or
    2 for a valid arc); a line is a secant exactly when the count is 2.
    Single-owner mutable state: never share between concurrent workers.
    """

    def __init__(self, plane: PlaneIndex):
        self.plane = plane
        self.covered = np.zeros(plane.n_points, dtype=bool)
        self.covered_count = 0
        self.line_arc_counts = np.zeros(plane.n_lines, dtype=np.int8)

    def is_complete(self) -> bool:
        return self.covered_count == self.plane.n_points

    def uncovered_ids(self) -> np.ndarray:
        return np.flatnonzero(~self.covered)


def coverage_add(state: CoverageState, arc: Arc, pid: int) -> tuple[CoverageState, Arc]:
    """Add an uncovered point: mark its new secants, update all counters."""
    pl = state.plane
    if pl is not arc.plane:
        raise ValueError("state and arc live on different planes")
    if state.covered[pid]:
        raise CoveredPoint(f"point {pid} is already covered")
    p_coords = pl.triples_of_ids(np.asarray([pid], dtype=np.int64))
    if arc.points:
        secants = pl.join_ids(p_coords, arc.coords())
        for lo in range(0, len(secants), _LINE_CHUNK):
            pts = pl.points_on_lines_arr(secants[lo:lo + _LINE_CHUNK])
            state.covered[pts.ravel()] = True
    else:
        state.covered[pid] = True
    state.covered_count = int(state.covered.sum())
    pencil = pl.lines_through_points_arr(np.asarray([pid], dtype=np.int64))[0]
    state.line_arc_counts[pencil] += 1
    arc.append(pid)
    return state, arc


def new_coverage_gain(state: CoverageState, arc: Arc, pid: int) -> int:
    """Coverage delta if ``pid`` were added, without mutating anything.

    Exact: iterates the k lines joining the candidate to each arc point and
    popcounts their uncovered points.  Each such line is a tangent (one arc
    point), and two of them meet only at the candidate, so the union double
    counts nothing except the candidate itself.
    """
    pl = state.plane
    if state.covered[pid]:
        raise CoveredPoint(f"point {pid} is already covered")
    k = len(arc.points)
    if k == 0:
        return 1
    p_coords = pl.triples_of_ids(np.asarray([pid], dtype=np.int64))
    lids = pl.join_ids(p_coords, arc.coords())
    pts = pl.points_on_lines_arr(lids)
    fresh = (~state.covered[pts]).sum()
    return int(fresh) - k + 1
