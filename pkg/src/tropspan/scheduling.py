"""Schedule construction for activity networks with time-lag constraints.

Each activity i has an initiation time x[i] and, where a start-finish
matrix A is given, a completion time y[i] with y = A ⊗ x: entry a[i][j]
is the least allowed lag from the start of activity j to the finish of
activity i, and completions happen at the earliest admissible moment.
A start-start matrix C constrains initiations through C ⊗ x ≤ x, with
𝟘 marking pairs that carry no lag.

The solvers below maximize the span between the latest and earliest
completion (or initiation) times and describe every optimal schedule.
`latest_schedule` extracts the customary representatives: per family,
the member with the latest initiation times.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvariantViolation, NotIrreducible, NotSquare, ShapeMismatch
from .matvec import Matrix, asterate, is_irreducible
from .optimizer import ConstrainedReport, SolutionReport, solve_norm_form
from .semiring import Scalar


@dataclass(frozen=True)
class Project:
    """Activity count plus the constraint matrices that are present."""

    n: int
    start_finish: Matrix | None = None
    start_start: Matrix | None = None

    def __post_init__(self):
        if self.start_finish is None and self.start_start is None:
            raise ValueError("a project needs at least one constraint matrix")
        for name, m in (("start_finish", self.start_finish),
                        ("start_start", self.start_start)):
            if m is not None and m.shape != (self.n, self.n):
                raise ShapeMismatch(
                    f"{name} must be {self.n}x{self.n}, got {m.rows}x{m.cols}")


@dataclass(frozen=True)
class Schedule:
    """One concrete schedule: initiation times, completions when defined,
    and the span it achieves."""

    initiation: Matrix
    completion: Matrix | None
    span: Scalar


def max_completion_spread(a: Matrix) -> SolutionReport:
    """Maximize the span of completion times y = A ⊗ x.

    The report's families describe the initiation vectors x directly;
    the optimum equals ‖A ⊗ A⁻‖.
    """
    _require_zero_free(a, "start-finish matrix")
    return solve_norm_form(a, a)


def max_initiation_spread(c: Matrix) -> ConstrainedReport:
    """Maximize the span of initiation times subject to C ⊗ x ≤ x.

    C must be irreducible with tr_closure(C) ≤ 𝟙.  The report is over
    the generator variable u; initiations are x = closure ⊗ u.
    """
    if c.rows != c.cols:
        raise NotSquare("the start-start matrix must be square")
    if not is_irreducible(c):
        raise NotIrreducible(
            "the start-start matrix's nonzero pattern must be strongly connected")
    closure = asterate(c)
    return ConstrainedReport(solve_norm_form(closure, closure), closure)


def max_completion_spread_constrained(a: Matrix, c: Matrix) -> ConstrainedReport:
    """Maximize the completion span under both constraint kinds.

    Requires a row-regular A and a feasible C; with D = A ⊗ C*
    (which must come out free of zero entries) the optimum is ‖D ⊗ D⁻‖.
    The report is over u, with x = closure ⊗ u and y = D ⊗ u.
    """
    if c.rows != c.cols:
        raise NotSquare("the start-start matrix must be square")
    if a.cols != c.rows:
        raise ShapeMismatch(
            f"the start-finish matrix has {a.cols} columns but the "
            f"start-start matrix is {c.rows}x{c.cols}")
    if not a.is_row_regular():
        i = next(i for i, row in enumerate(a.data)
                 if all(v == a.sf.zero for v in row))
        raise InvariantViolation(
            f"start-finish matrix must be row regular; row {i + 1} "
            f"contains only zero entries")
    closure = asterate(c)
    d = a @ closure
    _require_zero_free(d, "product of the start-finish matrix and the constraint closure")
    return ConstrainedReport(solve_norm_form(d, d), closure)


def latest_schedule(report: SolutionReport, closure: Matrix | None = None,
                    start_finish: Matrix | None = None,
                    alpha: Scalar | None = None) -> list[Schedule]:
    """Per family, the member with the latest initiation times.

    Scales the member by `alpha` (default 𝟙), maps it through
    `closure` when the report lives in a generator variable, and
    attaches completions when `start_finish` is given.  Families that
    produce identical schedules are collapsed; distinct ones are all
    returned, in family order.
    """
    if not report.families:
        raise ValueError("the report contains no solution families")
    sf = report.families[0].sf
    if alpha is None:
        alpha = sf.one
    alpha = sf.canonical(alpha)
    if sf.is_zero(alpha):
        raise ValueError("alpha must exceed the semifield zero")
    out: list[Schedule] = []
    for fam in report.families:
        member = fam.max_member().scale(alpha)
        x = closure @ member if closure is not None else member
        y = start_finish @ x if start_finish is not None else None
        if any(s.initiation == x and s.completion == y for s in out):
            continue
        out.append(Schedule(x, y, report.delta))
    return out


def _require_zero_free(m: Matrix, label: str) -> None:
    zero = m.sf.zero
    for i, row in enumerate(m.data):
        for j, v in enumerate(row):
            if v == zero:
                raise InvariantViolation(
                    f"{label} must have no zero entries; entry at "
                    f"row {i + 1}, column {j + 1} is zero")
