"""Brute-force enumeration oracles for small integer max-plus instances.

Deliberately independent of the closed-form solvers: the objective and
the feasibility predicate are evaluated with plain built-in max and +
on integer grids, sharing no arithmetic with the algebraic path they
confront.  Integer data only; every comparison is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import NamedTuple

from .errors import GridTooLarge, ShapeMismatch
from .matvec import Matrix
from .optimizer import ProblemInstance
from .semiring import max_plus

NEG_INF = float("-inf")


@dataclass(frozen=True)
class GridSpec:
    """Integer enumeration window [lo, hi]^dim.

    When `normalization` names a component, that component stays
    pinned at 𝟙 = 0 and only the remaining dim - 1 components are
    swept, which scale invariance makes lossless for value queries.
    `cap` bounds the number of enumerated points.
    """

    dim: int
    lo: int
    hi: int
    normalization: int | None = 0
    cap: int = 2_000_000

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("the grid needs at least one dimension")
        if self.lo > self.hi:
            raise ValueError("lo must not exceed hi")
        if self.normalization is not None and not 0 <= self.normalization < self.dim:
            raise ValueError("normalization must address a component")

    @property
    def size(self) -> int:
        free = self.dim if self.normalization is None else self.dim - 1
        return (self.hi - self.lo + 1) ** free

    def points(self):
        if self.size > self.cap:
            raise GridTooLarge(f"{self.size} grid points exceed the cap of {self.cap}")
        values = range(self.lo, self.hi + 1)
        if self.normalization is None:
            yield from product(values, repeat=self.dim)
            return
        pin = self.normalization
        for free in product(values, repeat=self.dim - 1):
            yield free[:pin] + (0,) + free[pin:]


class GridMax(NamedTuple):
    """Exact grid maximum, every maximizing point, and a boundary flag.

    `boundary_touched` reports whether any maximizer has a swept
    component on the window edge; a caller worried about clipping can
    widen the window and retry.
    """

    value: int
    argmax: tuple[tuple[int, ...], ...]
    boundary_touched: bool


def brute_force_max(inst: ProblemInstance, grid: GridSpec) -> GridMax:
    """Exhaustive maximum of the objective over the normalized grid."""
    _require_max_plus(inst.sf)
    if grid.dim != inst.n:
        raise ShapeMismatch(f"grid dimension {grid.dim} does not match n = {inst.n}")
    a = _int_rows(inst.A, "A")
    b = _int_rows(inst.B, "B", allow_zero=True)
    p = _int_entries(inst.p, "p")
    q = _int_entries(inst.q, "q")

    # row vector q⁻ ⊗ B in ordinary arithmetic: max over i of b[i][j] - q[i]
    qb = [max(row[j] - qi for row, qi in zip(b, q)) for j in range(inst.n)]

    best = None
    argmax: list[tuple[int, ...]] = []
    for x in grid.points():
        left = max(c + xj for c, xj in zip(qb, x))
        right = max(pi - max(aij + xj for aij, xj in zip(row, x))
                    for row, pi in zip(a, p))
        value = left + right
        if best is None or value > best:
            best = value
            argmax = [x]
        elif value == best:
            argmax.append(x)

    pin = grid.normalization
    touched = any(
        v in (grid.lo, grid.hi)
        for x in argmax for j, v in enumerate(x) if j != pin)
    return GridMax(best, tuple(argmax), touched)


def brute_force_subeigen(c: Matrix, grid: GridSpec) -> list[tuple[int, ...]]:
    """All grid vectors x with C ⊗ x ≤ x, checked entrywise in raw arithmetic."""
    _require_max_plus(c.sf)
    if c.rows != c.cols:
        raise ShapeMismatch("the constraint matrix must be square")
    if grid.dim != c.rows:
        raise ShapeMismatch(f"grid dimension {grid.dim} does not match n = {c.rows}")
    rows = _int_rows(c, "C", allow_zero=True)
    out = []
    for x in grid.points():
        if all(max(cij + xj for cij, xj in zip(row, x)) <= xi
               for row, xi in zip(rows, x)):
            out.append(x)
    return out


def _require_max_plus(sf) -> None:
    if sf is not max_plus:
        raise ValueError("the brute-force oracles support the max-plus instance only")


def _int_rows(m: Matrix, label: str, allow_zero: bool = False) -> list[list]:
    out = []
    for row in m.data:
        line = []
        for v in row:
            if v == NEG_INF:
                if not allow_zero:
                    raise ValueError(f"matrix {label} must be free of zero entries")
                line.append(v)
            else:
                line.append(_as_int(v, label))
        out.append(line)
    return out


def _int_entries(vec: Matrix, label: str) -> list[int]:
    return [_as_int(v, label) for v in vec.entries()]


def _as_int(v, label: str) -> int:
    if isinstance(v, int):
        return v
    if isinstance(v, float) and v.is_integer():
        return int(v)
    raise ValueError(f"the oracle needs integer data; {label} holds {v!r}")
