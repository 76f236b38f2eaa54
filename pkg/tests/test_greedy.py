import math

import numpy as np
import pytest

from arcforge.arc import Arc, CoverageState, coverage_add, verify_arc, verify_complete
from arcforge.gf import field_of_order
from arcforge.greedy import (
    SearchConfig, SearchReport, _plane_for, _run_batch, complete_extension,
    default_seed_cycle, greedy_trial, search, trial_rng,
)
from arcforge.plane import build_plane


def plane_of(q):
    return build_plane(field_of_order(q))


# ---------------------------------------------------------------------------
# config
# ---------------------------------------------------------------------------

def test_config_validation():
    with pytest.raises(ValueError):
        SearchConfig(q=5, trials=0)
    with pytest.raises(ValueError):
        SearchConfig(q=5, top_k=0)
    with pytest.raises(ValueError):
        SearchConfig(q=5, candidate_policy="anneal")
    with pytest.raises(ValueError):
        SearchConfig(q=5, seed_arc_size=-1)


def test_seed_cycle_defaults():
    cyc = default_seed_cycle(11)   # tabulated size 7
    assert cyc == (5, 6)
    cfg = SearchConfig(q=11)
    assert [cfg.seed_size_for(i) for i in range(4)] == [5, 6, 5, 6]
    fixed = SearchConfig(q=11, seed_arc_size=3)
    assert fixed.seed_size_for(9) == 3


def test_target_resolution():
    assert SearchConfig(q=13).resolved_target() == 8
    assert SearchConfig(q=13, target_size=None).resolved_target() is None
    assert SearchConfig(q=13, target_size=9).resolved_target() == 9


def test_search_rejects_non_prime_power():
    with pytest.raises(ValueError):
        search(SearchConfig(q=6))


# ---------------------------------------------------------------------------
# greedy_trial
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("q", [2, 3, 8, 13])
def test_trials_complete_and_verify(q):
    pl = plane_of(q)
    cfg = SearchConfig(q=q)
    for i in range(5):
        arc = greedy_trial(pl, cfg, trial_rng(11, i), i)
        assert verify_arc(arc)
        ok, unc = verify_complete(arc)
        assert ok and unc == []


def test_trial_q2_size_four():
    # no complete arc below 4 points exists in the Fano plane
    pl = plane_of(2)
    cfg = SearchConfig(q=2)
    for i in range(10):
        arc = greedy_trial(pl, cfg, trial_rng(0, i), i)
        assert len(arc.points) == 4


def test_trial_matches_incremental_coverage():
    pl = plane_of(9)
    cfg = SearchConfig(q=9)
    arc = greedy_trial(pl, cfg, trial_rng(4, 2), 2)
    st, replay = CoverageState(pl), Arc(pl)
    for pid in arc.points:
        coverage_add(st, replay, pid)
    assert st.is_complete()


def test_batch_engine_equals_single_engine():
    for q in (7, 11, 16):
        for kwargs in ({}, {"seed_arc_size": 6}, {"top_k": 2}):
            cfg = SearchConfig(q=q, **kwargs)
            pl = _plane_for(cfg)
            batch = _run_batch(pl, cfg, list(range(9)))
            for i in range(9):
                single = greedy_trial(pl, cfg, trial_rng(0, i), i)
                assert single.points == batch[i]


def test_sample_policy_trials_verify():
    cfg = SearchConfig(q=17, candidate_policy="sample", sample_size=32)
    pl = _plane_for(cfg)
    arc = greedy_trial(pl, cfg, trial_rng(5, 0), 0)
    ok, unc = verify_complete(arc)
    assert ok and unc == []


# ---------------------------------------------------------------------------
# search
# ---------------------------------------------------------------------------

def test_search_deterministic_summary():
    cfg = SearchConfig(q=13, trials=150, master_seed=7, target_size=None)
    a = search(cfg)
    b = search(cfg)
    assert a.summary() == b.summary()
    assert a.best_points == b.best_points


def test_search_examples_small():
    rep = search(SearchConfig(q=13, trials=10_000, master_seed=1))
    assert rep.best_size == 8
    rep = search(SearchConfig(q=9, trials=1_000, master_seed=1))
    assert rep.best_size == 6


def test_search_histogram_and_bounds():
    cfg = SearchConfig(q=11, trials=60, master_seed=3, target_size=None)
    rep = search(cfg)
    assert sum(rep.histogram.values()) == rep.trials_run == 60
    assert min(rep.histogram) == rep.best_size
    assert rep.best_size > math.sqrt(2 * 11) + 1
    assert rep.best_size > math.sqrt(3 * 11) + 0.5


def test_search_early_stop_merge_rule():
    cfg = SearchConfig(q=13, trials=5_000, master_seed=1)  # target auto = 8
    rep = search(cfg)
    assert rep.best_size == 8
    assert rep.trials_run < 5_000
    assert rep.best_trial == rep.trials_run - 1  # first hit ends the run
    assert rep.histogram[8] == 1


def test_search_jobs_equivalence():
    cfg = SearchConfig(q=9, trials=70, master_seed=2, target_size=None)
    seq = search(cfg, jobs=1)
    par = search(cfg, jobs=2)
    assert seq.best_size == par.best_size
    assert seq.summary() == par.summary()


def test_search_time_budget():
    from arcforge.greedy import BudgetExhausted
    # dead before any trial: the hard error
    with pytest.raises(BudgetExhausted):
        search(SearchConfig(q=13, trials=10**6, master_seed=0,
                            target_size=None, time_budget=0.0))
    # dead mid-run: best-so-far comes back flagged
    rep = search(SearchConfig(q=13, trials=10**6, master_seed=0,
                              target_size=None, time_budget=0.5))
    assert rep.budget_exhausted
    assert rep.trials_run >= 1


# ---------------------------------------------------------------------------
# complete_extension
# ---------------------------------------------------------------------------

def test_extension_of_complete_arc_unchanged():
    pl = plane_of(5)
    f = pl.field
    conic = [pl.point_id([1, t, f.mul(t, t)]) for t in range(5)]
    conic.append(pl.point_id([0, 0, 1]))
    arc = Arc(pl, conic)
    out = complete_extension(pl, arc, trial_rng(0, 0))
    assert out.points == arc.points


def test_extension_from_empty():
    pl = plane_of(2)
    out = complete_extension(pl, Arc(pl), trial_rng(1, 0))
    assert len(out.points) >= 4
    ok, _ = verify_complete(out)
    assert ok


def test_extension_rejects_non_arc():
    pl = plane_of(2)
    bad = Arc(pl)
    for c in ([1, 0, 0], [0, 1, 0], [1, 1, 0]):  # collinear
        bad.points.append(pl.point_id(c))
        bad.in_arc[pl.point_id(c)] = True
    from arcforge.arc import NotAnArc
    with pytest.raises(NotAnArc):
        complete_extension(pl, bad, trial_rng(0, 0))


def test_extension_contains_input():
    pl = plane_of(7)
    base = Arc(pl, [0, 1])
    out = complete_extension(pl, base, trial_rng(9, 0))
    assert out.points[:2] == [0, 1]
    ok, _ = verify_complete(out)
    assert ok
