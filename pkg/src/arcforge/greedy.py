"""Randomized greedy search with restarts for small complete arcs.

Each trial seeds an arc with a few uniformly random (mutually legal) points,
then repeatedly adds the uncovered point covering the most new points, ties
broken uniformly at random, until no uncovered point remains.  Coverage
strictly grows, so every trial ends in a complete arc.  Restarts explore
independent per-trial RNG streams; the smallest verified arc wins.

Until an arc has five points every candidate covers exactly the same number
of new points (the first asymmetry comes from the diagonal points of a
quadrilateral of arc points), so the greedy objective only starts
discriminating at size five; the random seed prefix is therefore the main
diversity knob, and a restart schedule can cycle its length (``seed_cycle``)
to sweep both shallow and deep randomization.

A trial's randomness is a pure function of (master_seed, trial_index): each
step draws exactly one integer to pick from a canonically ordered candidate
pool.  Two engines implement the same contract -- a single-trial engine that
works at any q, and a lockstep batched engine over dense incidence tables
that amortizes per-step overhead for small q -- so searches are reproducible
under any batching or parallel schedule.

Scoring is exact but incremental: the engine tracks how many uncovered
points remain on every line through the current arc, so a candidate's gain
is one plus the sum over the lines joining it to each arc point (all
tangents, pairwise meeting only at the candidate) of their uncovered counts
minus one.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from . import bounds
from .arc import Arc, NotAnArc, verify_arc, verify_complete
from .gf import factor_prime_power, field_of_order
from .plane import DEFAULT_POINT_CAP, PlaneIndex, build_plane

_GAIN_CHUNK = 1 << 22   # elements per (candidates x arc) scoring block
_BATCH_TRIALS = 64      # lockstep trials per batch in the table engine


class BudgetExhausted(RuntimeError):
    """Wall-clock budget expired before any trial completed."""


def default_seed_cycle(q: int) -> tuple[int, ...]:
    """Restart schedule for the random-prefix length.

    Below five points every candidate covers the same number of new points
    (the first asymmetry needs the diagonal points of a quadrilateral), so
    prefixes shorter than 5 all act alike and the schedule starts there.
    Deep prefixes, up to one below the smallest tabulated size, reach the
    rare minimal arcs; the cap keeps the schedule from diluting large-q
    searches, where the deep end is useless.
    """
    try:
        row = bounds.default_table().get(q)
    except Exception:
        row = None
    top = row.t2 - 1 if row is not None else 12
    return tuple(range(5, max(min(top, 12), 5) + 1))


@dataclass
class SearchConfig:
    """Knobs for one search run."""

    q: int
    trials: int = 1
    master_seed: int = 0
    candidate_policy: str = "exact"  # "exact" scores all uncovered, "sample" a subset
    sample_size: int = 4096
    top_k: int = 1
    seed_arc_size: int | None = None   # None: cycle default_seed_cycle(q)
    seed_cycle: tuple[int, ...] | None = None
    time_budget: float | None = None
    target_size: int | str | None = "auto"  # "auto": embedded table value for q
    point_cap: int = DEFAULT_POINT_CAP

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.top_k < 1:
            raise ValueError("top_k must be >= 1")
        if self.sample_size < 1:
            raise ValueError("sample_size must be >= 1")
        if self.seed_arc_size is not None and self.seed_arc_size < 0:
            raise ValueError("seed_arc_size must be >= 0")
        if self.candidate_policy not in ("exact", "sample"):
            raise ValueError(f"unknown candidate policy {self.candidate_policy!r}")

    def seed_size_for(self, trial_index: int) -> int:
        if self.seed_arc_size is not None:
            return self.seed_arc_size
        cycle = self.seed_cycle or default_seed_cycle(self.q)
        return cycle[trial_index % len(cycle)]

    def resolved_target(self) -> int | None:
        if self.target_size == "auto":
            row = bounds.default_table().get(self.q)
            return row.t2 if row is not None else None
        return self.target_size


@dataclass
class SearchReport:
    """Best verified complete arc found by a search, with provenance."""

    q: int
    best_size: int
    best_points: list[int]
    best_trial: int
    trials_run: int
    master_seed: int
    histogram: dict[int, int]
    elapsed: float
    budget_exhausted: bool = False

    def summary(self) -> str:
        """Stable text block: identical for identical (config, seed)."""
        hist = " ".join(f"{s}:{c}" for s, c in sorted(self.histogram.items()))
        lines = [
            f"q {self.q}",
            f"best_size {self.best_size}",
            f"best_trial {self.best_trial}",
            f"trials_run {self.trials_run}",
            f"seed {self.master_seed}",
            f"histogram {hist}",
        ]
        if self.budget_exhausted:
            lines.append("budget_exhausted 1")
        return "\n".join(lines) + "\n"

    def best_arc(self, plane: PlaneIndex) -> Arc:
        """Materialize the winning arc on a plane for this q."""
        if plane.q != self.q:
            raise ValueError(f"plane is over q={plane.q}, report is for q={self.q}")
        return Arc(plane, self.best_points)


def trial_rng(master_seed: int, trial_index: int) -> np.random.Generator:
    """Counter-based per-trial stream: identical under any scheduling."""
    return np.random.default_rng(np.random.SeedSequence([master_seed, trial_index]))


# ---------------------------------------------------------------------------
# single-trial engine (any q, exact or sampled candidates)
# ---------------------------------------------------------------------------

class _Trial:
    """Mutable state of one greedy run (single-owner)."""

    def __init__(self, plane: PlaneIndex, rng: np.random.Generator,
                 top_k: int = 1, policy: str = "exact", sample_size: int = 4096,
                 seed_arc_size: int = 2):
        self.plane = plane
        self.rng = rng
        self.top_k = top_k
        self.policy = policy
        self.sample_size = sample_size
        self.seed_arc_size = seed_arc_size
        n = plane.n_points
        self.covered = np.zeros(n, dtype=bool)
        self.covered_count = 0
        self.uncov_on_line = np.zeros(n, dtype=np.int64)
        self.arc_points: list[int] = []
        self.arc_coords = np.empty((0, 3), dtype=plane._dt)

    def add(self, pid: int) -> None:
        pl = self.plane
        p_coord = pl.triples_of_ids(np.asarray([pid], dtype=np.int64))
        k = len(self.arc_points)
        if k:
            secants = pl.join_ids(p_coord, self.arc_coords)
            sec_pts = pl.points_on_lines_arr(secants).ravel()
            newly = np.unique(sec_pts[~self.covered[sec_pts]])
            # every tangent through a freshly covered point loses it exactly
            # once: those lines are the joins to the k existing arc points
            dec = pl.join_ids(pl.triples_of_ids(newly)[:, None, :],
                              self.arc_coords[None, :, :])
            self.uncov_on_line -= np.bincount(dec.ravel(), minlength=pl.n_lines)
            self.covered[newly] = True
            self.covered_count += len(newly)
        else:
            self.covered[pid] = True
            self.covered_count += 1
        # fresh counts for the whole pencil at the new point (this also
        # overwrites the stale entries of the new secants, which run through it)
        pencil = pl.lines_through_points_arr(np.asarray([pid], dtype=np.int64))[0]
        pen_pts = pl.points_on_lines_arr(pencil)
        self.uncov_on_line[pencil] = (pl.q + 1) - self.covered[pen_pts].sum(axis=1)
        self.arc_points.append(int(pid))
        self.arc_coords = np.concatenate([self.arc_coords, p_coord.reshape(1, 3)])

    def gains(self, cand_ids: np.ndarray) -> np.ndarray:
        """Exact coverage deltas (up to a shared constant) for candidates."""
        k = len(self.arc_points)
        if k == 0:
            return np.ones(len(cand_ids), dtype=np.int64)
        pl = self.plane
        out = np.empty(len(cand_ids), dtype=np.int64)
        step = max(1, _GAIN_CHUNK // k)
        for lo in range(0, len(cand_ids), step):
            chunk = cand_ids[lo:lo + step]
            coords = pl.triples_of_ids(chunk)
            lids = pl.join_ids(coords[:, None, :], self.arc_coords[None, :, :])
            out[lo:lo + step] = self.uncov_on_line[lids].sum(axis=1)
        return out - (k - 1)

    def select(self) -> int:
        cands = np.flatnonzero(~self.covered)
        if self.policy == "sample" and len(cands) > self.sample_size:
            cands = np.sort(self.rng.choice(cands, size=self.sample_size,
                                            replace=False))
        if len(self.arc_points) < self.seed_arc_size:
            pool = cands
        else:
            g = self.gains(cands)
            if self.top_k == 1:
                pool = cands[g == g.max()]
            else:
                order = np.lexsort((cands, -g))  # gain desc, id asc
                pool = cands[order[:min(self.top_k, len(cands))]]
        return int(pool[self.rng.integers(len(pool))])

    def run(self) -> list[int]:
        n = self.plane.n_points
        while self.covered_count < n:
            self.add(self.select())
        return self.arc_points


# ---------------------------------------------------------------------------
# lockstep batched engine (dense tables, exact candidates)
# ---------------------------------------------------------------------------

def _run_batch(plane: PlaneIndex, cfg: SearchConfig,
               indices: list[int]) -> list[list[int]]:
    """Run the trials with the given indices in lockstep.

    Produces exactly the arcs the single-trial engine would: candidate
    pools are ordered identically and each step consumes one draw from the
    trial's own stream.
    """
    pair, lpts = plane.incidence_tables()
    n, q = plane.n_points, plane.q
    B = len(indices)
    rngs = [trial_rng(cfg.master_seed, i) for i in indices]
    seed_sizes = np.array([cfg.seed_size_for(i) for i in indices])
    covered = np.zeros((B, n), dtype=bool)
    uncov = np.zeros((B, n), dtype=np.int32)
    counts = np.zeros(B, dtype=np.int64)
    arc = np.zeros((B, 0), dtype=np.int64)
    done = np.zeros(B, dtype=bool)
    results: list[list[int] | None] = [None] * B
    k = 0

    while not done.all():
        act = np.flatnonzero(~done)
        m = len(act)
        greedy_rows = np.flatnonzero(seed_sizes[act] <= k)
        # gains for greedy rows; covered cells masked out with -1
        g = np.zeros((m, n), dtype=np.int64)
        if k and len(greedy_rows):
            step = max(1, _GAIN_CHUNK // (n * k))
            for lo in range(0, len(greedy_rows), step):
                r = greedy_rows[lo:lo + step]
                glob = act[r]
                lids = pair[np.arange(n)[None, :, None], arc[glob][:, None, :]]
                g[r] = uncov[glob[:, None, None], lids].sum(axis=2)
        g[covered[act]] = -1

        # one draw per trial from a canonically ordered pool: seeding rows
        # and top_k == 1 pick the j-th element of a tie set in ascending id
        # order; top_k > 1 greedy rows pick from the (gain desc, id asc) prefix
        pid = np.empty(m, dtype=np.int64)
        ties = g == g.max(axis=1)[:, None]
        if cfg.top_k > 1 and len(greedy_rows):
            seeding = np.ones(m, dtype=bool)
            seeding[greedy_rows] = False
            pool_sizes = np.where(seeding, ties.sum(axis=1), 0)
            avail = (g > -1).sum(axis=1)
            pool_sizes[greedy_rows] = np.minimum(
                avail[greedy_rows], cfg.top_k)
            picks = np.array([rngs[t].integers(pool_sizes[r])
                              for r, t in enumerate(act)])
            cum = ties.cumsum(axis=1)
            pid = np.argmax(cum == (picks + 1)[:, None], axis=1)
            order = np.argsort(-g[greedy_rows], axis=1, kind="stable")
            pid[greedy_rows] = order[np.arange(len(greedy_rows)),
                                     picks[greedy_rows]]
        else:
            pool_sizes = ties.sum(axis=1)
            picks = np.array([rngs[t].integers(pool_sizes[r])
                              for r, t in enumerate(act)])
            cum = ties.cumsum(axis=1)
            pid = np.argmax(cum == (picks + 1)[:, None], axis=1)

        # apply the additions in lockstep
        if k:
            arc_act = arc[act]
            sec = pair[pid[:, None], arc_act].astype(np.int64)     # (m, k)
            sp = lpts[sec].astype(np.int64)                        # (m, k, q+1)
            fresh = ~covered[act[:, None, None], sp]
            counts[act] += fresh.sum(axis=(1, 2)) - (k - 1)
            dec = pair[sp[:, :, :, None], arc_act[:, None, None, :]].astype(np.int64)
            flat = (act * n)[:, None, None, None] + dec
            sel = np.broadcast_to(fresh[:, :, :, None], dec.shape)
            uncov.reshape(-1)[:] -= np.bincount(
                flat[sel], minlength=B * n).astype(np.int32)
            covered[act[:, None, None], sp] = True
        else:
            covered[act, pid] = True
            counts[act] += 1
        pen = lpts[pid].astype(np.int64)                           # (m, q+1)
        pp = lpts[pen].astype(np.int64)                            # (m, q+1, q+1)
        live = (q + 1) - covered[act[:, None, None], pp].sum(axis=2)
        uncov[act[:, None], pen] = live.astype(np.int32)

        arc = np.concatenate([arc, np.zeros((B, 1), dtype=np.int64)], axis=1)
        arc[act, k] = pid
        k += 1
        finished = act[counts[act] == n]
        for row in finished:
            results[row] = [int(x) for x in arc[row, :k]]
        done[finished] = True
    return results  # type: ignore[return-value]


# ---------------------------------------------------------------------------
# public operations
# ---------------------------------------------------------------------------

def greedy_trial(plane: PlaneIndex, cfg: SearchConfig,
                 rng: np.random.Generator, trial_index: int = 0) -> Arc:
    """One randomized greedy run; the result is complete by construction."""
    trial = _Trial(plane, rng, top_k=cfg.top_k, policy=cfg.candidate_policy,
                   sample_size=cfg.sample_size,
                   seed_arc_size=cfg.seed_size_for(trial_index))
    return Arc(plane, trial.run())


def complete_extension(plane: PlaneIndex, arc: Arc,
                       rng: np.random.Generator) -> Arc:
    """Extend an arc by uniformly random uncovered points until complete."""
    if not verify_arc(arc):
        raise NotAnArc("cannot extend: input fails the arc property")
    trial = _Trial(plane, rng)
    for pid in arc.points:
        trial.add(pid)
    while trial.covered_count < plane.n_points:
        unc = np.flatnonzero(~trial.covered)
        trial.add(int(unc[rng.integers(len(unc))]))
    return Arc(plane, trial.arc_points)


def _plane_for(cfg: SearchConfig) -> PlaneIndex:
    if factor_prime_power(cfg.q) is None:
        raise ValueError(f"q = {cfg.q} is not a prime power")
    return build_plane(field_of_order(cfg.q), point_cap=cfg.point_cap)


def _run_indices(plane: PlaneIndex, cfg: SearchConfig, indices: list[int],
                 stop_at: int | None = None,
                 deadline: float | None = None) -> list[tuple[int, list[int]]]:
    """Trial results for explicit indices, choosing the faster engine.

    ``stop_at``/``deadline`` cut the loop early once a small-enough arc
    lands or the clock runs out; later indices are simply not computed,
    which the first-hit merge rule tolerates.
    """
    if cfg.candidate_policy == "exact" and plane.has_tables():
        out = []
        for lo in range(0, len(indices), _BATCH_TRIALS):
            block = indices[lo:lo + _BATCH_TRIALS]
            out.extend(_run_batch(plane, cfg, block))
            if stop_at is not None and any(len(p) <= stop_at for p in out):
                break
            if deadline is not None and time.monotonic() > deadline:
                break
        return [(len(points), points) for points in out]
    results = []
    for i in indices:
        arc = greedy_trial(plane, cfg, trial_rng(cfg.master_seed, i), i)
        results.append((len(arc.points), arc.points))
        if stop_at is not None and len(arc.points) <= stop_at:
            break
        if deadline is not None and time.monotonic() > deadline:
            break
    return results


_WORKER_PLANES: dict[tuple[int, int], PlaneIndex] = {}


def _worker_run(cfg: SearchConfig, indices: list[int]) -> list[tuple[int, list[int]]]:
    """Process-pool entry point; planes are rebuilt once per worker."""
    key = (cfg.q, cfg.point_cap)
    plane = _WORKER_PLANES.get(key)
    if plane is None:
        plane = _WORKER_PLANES[key] = _plane_for(cfg)
    return _run_indices(plane, cfg, indices)


def search(cfg: SearchConfig, jobs: int = 1,
           plane: PlaneIndex | None = None) -> SearchReport:
    """Run independent greedy trials and keep the smallest verified arc.

    Deterministic for fixed (cfg, master_seed): per-trial streams derive
    from (master_seed, trial_index) and the early-stop / merge rule depends
    only on trial indices, so any ``jobs`` level yields the same result.
    """
    t0 = time.monotonic()
    if plane is None:
        plane = _plane_for(cfg)
    target = cfg.resolved_target()
    block = max(jobs, 1) * _BATCH_TRIALS

    results: list[tuple[int, list[int]]] = []
    budget_dead = False
    done = 0
    pool = None
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor
        pool = ProcessPoolExecutor(max_workers=jobs)
    try:
        while done < cfg.trials:
            if (cfg.time_budget is not None
                    and time.monotonic() - t0 > cfg.time_budget):
                if not results:
                    raise BudgetExhausted(
                        "time budget expired before any trial completed")
                budget_dead = True
                break
            idxs = list(range(done, min(done + block, cfg.trials)))
            if pool is None:
                deadline = (None if cfg.time_budget is None
                            else t0 + cfg.time_budget)
                results.extend(_run_indices(plane, cfg, idxs,
                                            stop_at=target, deadline=deadline))
            else:
                chunks = [c for c in (idxs[i::jobs] for i in range(jobs)) if c]
                futs = [pool.submit(_worker_run, cfg, c) for c in chunks]
                merged: dict[int, tuple[int, list[int]]] = {}
                for c, f in zip(chunks, futs):
                    for i, res in zip(c, f.result()):
                        merged[i] = res
                results.extend(merged[i] for i in idxs)
            done = len(results)
            if target is not None and any(s <= target for s, _ in results):
                break
    finally:
        if pool is not None:
            pool.shutdown()

    # merge rule: truncate at the first target hit, then min size with ties
    # to the lowest trial index -- identical under any schedule
    cut = len(results)
    if target is not None:
        for i, (s, _) in enumerate(results):
            if s <= target:
                cut = i + 1
                break
    results = results[:cut]
    best_trial, (best_size, best_points) = min(
        enumerate(results), key=lambda t: (t[1][0], t[0]))
    histogram: dict[int, int] = {}
    for s, _ in results:
        histogram[s] = histogram.get(s, 0) + 1

    best_arc = Arc(plane, best_points)
    ok_complete, _ = verify_complete(best_arc)  # raises NotAnArc if invalid
    if not ok_complete:
        raise AssertionError("search produced an incomplete arc")

    return SearchReport(
        q=cfg.q, best_size=best_size, best_points=list(best_points),
        best_trial=best_trial, trials_run=len(results),
        master_seed=cfg.master_seed, histogram=histogram,
        elapsed=time.monotonic() - t0, budget_exhausted=budget_dead,
    )
