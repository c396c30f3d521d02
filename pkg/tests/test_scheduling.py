import random
from itertools import product

import pytest

from tropspan import (InvariantViolation, Matrix, NotIrreducible, NotSquare,
                      Project, ShapeMismatch, SolutionReport, TrConditionViolated,
                      latest_schedule, max_completion_spread,
                      max_completion_spread_constrained, max_initiation_spread,
                      max_plus)
from support import (COMBINED, SS_STAR, START_FINISH, START_START, col, mp,
                     random_feasible_constraint, random_zero_free,
                     raw_satisfies_constraint, raw_span)


# ----------------------------------------------------------------------
# completion-time span

def test_completion_spread_worked_example():
    report = max_completion_spread(mp(START_FINISH))
    assert report.delta == 4
    assert report.pairs == ((0, 2),)
    assert report.families[0].upper_bounds == (0, -1, -3)
    sched, = latest_schedule(report, start_finish=mp(START_FINISH))
    assert sched.initiation == col([0, -1, -3])
    assert sched.completion == col([4, 2, 0])
    assert sched.span == 4


def test_completion_spread_single_activity():
    report = max_completion_spread(mp([[5]]))
    assert report.delta == 0


def test_completion_spread_rejects_zero_entries():
    with pytest.raises(InvariantViolation, match="start-finish"):
        max_completion_spread(mp([[1, None], [0, 2]]))


@pytest.mark.parametrize("seed", range(6))
def test_completion_spread_matches_grid_maximum(seed):
    rng = random.Random(seed)
    a = random_zero_free(rng, 3, 3, lo=-4, hi=4)
    report = max_completion_spread(a)
    best = max(raw_span(a.data, (0,) + x) for x in product(range(-16, 17), repeat=2))
    assert best == report.delta


def test_completion_spread_delta_is_the_composed_norm():
    rng = random.Random(9)
    for _ in range(25):
        n = rng.randint(1, 4)
        a = random_zero_free(rng, n, n)
        assert max_completion_spread(a).delta == (a @ a.conj()).norm()


# ----------------------------------------------------------------------
# initiation-time span

def test_initiation_spread_worked_example():
    report, closure = max_initiation_spread(mp(START_START))
    assert closure == mp(SS_STAR)
    assert report.delta == 3
    assert report.pairs == ((1, 2),)
    fam = report.families[0]
    assert (fam.pinned_index, fam.pinned_value, fam.upper_bounds) == (1, 3, (1, 3, 0))
    sched, = latest_schedule(report, closure=closure)
    assert sched.initiation == col([1, 3, 0])
    assert sched.completion is None
    assert sched.span == 3


def test_initiation_spread_forced_equal_starts():
    report, closure = max_initiation_spread(mp([[None, 0], [0, None]]))
    assert closure == mp([[0, 0], [0, 0]])
    assert report.delta == 0


def test_initiation_spread_error_cases():
    with pytest.raises(TrConditionViolated):
        max_initiation_spread(mp([[1]]))
    with pytest.raises(NotIrreducible):
        max_initiation_spread(mp([[None, 0], [None, None]]))
    with pytest.raises(NotSquare):
        max_initiation_spread(mp([[1, 2]]))


@pytest.mark.parametrize("seed", range(6))
def test_initiation_spread_schedules_are_feasible_and_optimal(seed):
    rng = random.Random(40 + seed)
    c = random_feasible_constraint(rng, max_n=3)
    report, closure = max_initiation_spread(c)
    for sched in latest_schedule(report, closure=closure):
        x = sched.initiation.entries()
        assert raw_satisfies_constraint(c.data, x)
        assert max(x) - min(x) == report.delta


# ----------------------------------------------------------------------
# combined constraints

def test_combined_worked_example():
    report, closure = max_completion_spread_constrained(mp(START_FINISH), mp(START_START))
    assert (mp(START_FINISH) @ closure) == mp(COMBINED)
    assert report.delta == 2
    assert report.pairs == ((0, 2), (2, 2))
    assert [f.upper_bounds for f in report.families] == [(-2, -1, -3), (-2, -1, -3)]
    schedules = latest_schedule(report, closure=closure, start_finish=mp(START_FINISH))
    assert len(schedules) == 1
    assert schedules[0].initiation == col([-2, -1, -3])
    assert schedules[0].completion == col([2, 1, 0])


def test_combined_with_vacuous_constraint():
    a = mp(START_FINISH)
    report, closure = max_completion_spread_constrained(a, Matrix.zeros(max_plus, 3, 3))
    assert closure == Matrix.identity(max_plus, 3)
    assert report == max_completion_spread(a)


def test_combined_error_cases():
    a = mp(START_FINISH)
    with pytest.raises(TrConditionViolated):
        max_completion_spread_constrained(a, mp([[1, None, None],
                                                 [None, None, None],
                                                 [None, None, None]]))
    with pytest.raises(InvariantViolation, match="row regular"):
        max_completion_spread_constrained(
            mp([[None, None], [1, 2]]), Matrix.zeros(max_plus, 2, 2))
    with pytest.raises(ShapeMismatch):
        max_completion_spread_constrained(a, Matrix.zeros(max_plus, 2, 2))
    with pytest.raises(NotSquare):
        max_completion_spread_constrained(a, mp([[1, 2]]))


@pytest.mark.parametrize("seed", range(6))
def test_combined_matches_constrained_grid_maximum(seed):
    rng = random.Random(80 + seed)
    c = random_feasible_constraint(rng, max_n=2)
    n = c.rows
    a = random_zero_free(rng, n, n, lo=-4, hi=4)
    report, closure = max_completion_spread_constrained(a, c)
    feasible = [x for x in product(range(-12, 13), repeat=n)
                if raw_satisfies_constraint(c.data, x)]
    assert max(raw_span(a.data, x) for x in feasible) == report.delta
    for sched in latest_schedule(report, closure=closure, start_finish=a):
        x = sched.initiation.entries()
        assert raw_satisfies_constraint(c.data, x)
        assert raw_span(a.data, x) == report.delta
        assert sched.completion == a @ sched.initiation


# ----------------------------------------------------------------------
# schedule extraction

def test_latest_schedule_shift_invariance():
    a = mp(START_FINISH)
    report = max_completion_spread(a)
    base, = latest_schedule(report, start_finish=a)
    shifted, = latest_schedule(report, start_finish=a, alpha=7)
    assert shifted.initiation == base.initiation.scale(7)
    assert shifted.completion == base.completion.scale(7)
    assert shifted.span == base.span


def test_latest_schedule_rejects_degenerate_arguments():
    report = max_completion_spread(mp(START_FINISH))
    with pytest.raises(ValueError):
        latest_schedule(report, alpha=float("-inf"))
    empty = SolutionReport(0, (), ())
    with pytest.raises(ValueError):
        latest_schedule(empty)


def test_project_validation():
    with pytest.raises(ValueError):
        Project(n=2)
    with pytest.raises(ShapeMismatch):
        Project(n=2, start_finish=mp(START_FINISH))
    project = Project(n=3, start_finish=mp(START_FINISH), start_start=mp(START_START))
    assert project.n == 3
