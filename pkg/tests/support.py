"""Shared test data and generators.

Holds the 3-activity example project used throughout the suite, random
instance builders whose preconditions hold by construction, and raw
max/+ evaluators that give the tests an arithmetic path independent of
the package's semifield operations.
"""

import random

from tropspan import Matrix, ProblemInstance, max_plus, max_times

NEG_INF = float("-inf")


def mp(rows):
    return Matrix(max_plus, rows)


def col(entries):
    return Matrix.column(max_plus, entries)


# ----------------------------------------------------------------------
# the 3-activity example project (start-finish and start-start lags)

START_FINISH = [[4, 1, 1], [2, 2, 0], [0, 1, 3]]
START_FINISH_CONJ = [[-4, -2, 0], [-1, -2, -1], [-1, 0, -3]]
SF_TIMES_CONJ = [[0, 2, 4], [1, 0, 2], [2, 3, 0]]

START_START = [[None, -2, 1], [0, None, 2], [-1, None, None]]
SS_SQUARED = [[0, None, 0], [1, -2, 1], [None, -3, 0]]
SS_STAR = [[0, -2, 1], [1, 0, 2], [-1, -3, 0]]
SS_STAR_CONJ = [[0, -1, 1], [2, 0, 3], [-1, -2, 0]]

COMBINED = [[4, 2, 5], [3, 2, 4], [2, 1, 3]]  # START_FINISH composed with SS_STAR
COMBINED_CONJ = [[-4, -3, -2], [-2, -2, -1], [-5, -4, -3]]
COMBINED_TIMES_CONJ = [[0, 1, 2], [0, 0, 1], [-1, -1, 0]]


# ----------------------------------------------------------------------
# random builders; preconditions hold by construction

def random_instance(rng: random.Random, max_dim=5, lo=-10, hi=10, zero_prob=0.3):
    n = rng.randint(1, max_dim)
    m = rng.randint(1, max_dim)
    l = rng.randint(1, max_dim)
    a = [[rng.randint(lo, hi) for _ in range(n)] for _ in range(m)]
    b = [[NEG_INF if rng.random() < zero_prob else rng.randint(lo, hi)
          for _ in range(n)] for _ in range(l)]
    for j in range(n):
        if all(row[j] == NEG_INF for row in b):
            b[rng.randrange(l)][j] = rng.randint(lo, hi)
    p = [rng.randint(lo, hi) for _ in range(m)]
    q = [rng.randint(lo, hi) for _ in range(l)]
    return ProblemInstance(mp(a), mp(b), col(p), col(q))


def random_regular_column(rng: random.Random, n, lo=-15, hi=15):
    return col([rng.randint(lo, hi) for _ in range(n)])


def random_zero_free(rng: random.Random, rows, cols, lo=-10, hi=10):
    return mp([[rng.randint(lo, hi) for _ in range(cols)] for _ in range(rows)])


def _cycle_pattern(rng: random.Random, n, extra_prob=0.3):
    """Arc set of a strongly connected digraph on n nodes (full cycle
    plus extras), as the (i, j) index pairs of nonzero matrix entries."""
    order = list(range(n))
    rng.shuffle(order)
    arcs = {(order[(k + 1) % n], order[k]) for k in range(n)}
    for i in range(n):
        for j in range(n):
            if (i, j) not in arcs and rng.random() < extra_prob:
                arcs.add((i, j))
    return arcs


def random_feasible_constraint(rng: random.Random, max_n=4):
    """Irreducible integer max-plus matrix with trace closure <= 0.

    Entries are w + pot[i] - pot[j] with w <= 0, so every cycle weight
    telescopes to a sum of w's and stays nonpositive, while individual
    entries may well be positive.
    """
    n = rng.randint(1, max_n)
    pot = [rng.randint(-3, 3) for _ in range(n)]
    rows = [[NEG_INF] * n for _ in range(n)]
    for i, j in _cycle_pattern(rng, n):
        rows[i][j] = rng.randint(-6, 0) + pot[i] - pot[j]
    return mp(rows)


def random_infeasible_constraint(rng: random.Random, max_n=4):
    """As above but with one positive self-loop, forcing Tr > 0."""
    base = random_feasible_constraint(rng, max_n)
    rows = [list(r) for r in base.data]
    i = rng.randrange(base.rows)
    rows[i][i] = rng.randint(1, 4)
    return mp(rows)


def sub_unit(sf, k: int):
    """A carrier element k steps below the unit in the induced order."""
    if sf is max_times:
        return 2.0 ** -k
    if sf is max_plus:
        return -k
    return k  # min-plus: larger numbers sit lower in the induced order


def rng_finite(rng: random.Random, sf):
    if sf is max_times:
        return 2.0 ** rng.randint(-8, 8)
    return rng.randint(-30, 30)


def rng_element(rng: random.Random, sf, zero_prob=0.2):
    return sf.zero if rng.random() < zero_prob else rng_finite(rng, sf)


def rng_matrix(rng: random.Random, sf, rows, cols, zero_prob=0.0):
    return Matrix(sf, [[rng_element(rng, sf, zero_prob) for _ in range(cols)]
                       for _ in range(rows)])


def rng_regular_column(rng: random.Random, sf, n):
    return Matrix.column(sf, [rng_finite(rng, sf) for _ in range(n)])


def rng_irreducible(rng: random.Random, sf, max_n=4):
    """Irreducible matrix over any instance, arbitrary finite weights."""
    n = rng.randint(1, max_n)
    rows = [[sf.zero] * n for _ in range(n)]
    for i, j in _cycle_pattern(rng, n):
        rows[i][j] = rng_finite(rng, sf)
    return Matrix(sf, rows)


def rng_feasible_constraint(rng: random.Random, sf, max_n=4):
    """Irreducible matrix over any instance with trace closure <= 1."""
    n = rng.randint(1, max_n)
    pot = [sub_unit(sf, rng.randint(-3, 3)) for _ in range(n)]
    rows = [[sf.zero] * n for _ in range(n)]
    for i, j in _cycle_pattern(rng, n):
        w = sub_unit(sf, rng.randint(0, 6))
        rows[i][j] = sf.mul(w, sf.mul(pot[i], sf.inv(pot[j])))
    return Matrix(sf, rows)


# ----------------------------------------------------------------------
# raw max/+ evaluators, independent of the package's semifield ops

def raw_objective(inst: ProblemInstance, x):
    """Objective value at integer point x using built-in max and +."""
    a = inst.A.data
    b = inst.B.data
    p = inst.p.entries()
    q = inst.q.entries()
    left = max(max(bij + xj for bij, xj in zip(row, x)) - qi
               for row, qi in zip(b, q))
    right = max(pi - max(aij + xj for aij, xj in zip(row, x))
                for row, pi in zip(a, p))
    return left + right


def raw_span(rows, x):
    """Span of the product rows @ x in ordinary arithmetic."""
    ax = [max(rij + xj for rij, xj in zip(row, x)) for row in rows]
    return max(ax) - min(ax)


def raw_satisfies_constraint(rows, x):
    """True when rows @ x <= x holds entrywise in ordinary arithmetic."""
    return all(max(cij + xj for cij, xj in zip(row, x)) <= xi
               for row, xi in zip(rows, x))
