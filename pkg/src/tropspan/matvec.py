"""Dense matrices and vectors over an idempotent semifield.

Entries are carrier scalars of one `Semifield`; ``None`` in
constructor input stands for the zero 𝟘.  Vectors are single-column
matrices, and conjugation turns them into single-row matrices.  All
values are immutable and every operation returns a fresh matrix, so
concurrent use needs no locking.

Products use the textbook triple loop and powers use repeated
multiplication.  The trace closure therefore costs O(n^4), which is
accepted: exactness matters more than speed at the intended sizes.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import NotSquare, ShapeMismatch, TrConditionViolated, ZeroEntry
from .semiring import Scalar, Semifield


class Matrix:
    """Immutable dense matrix over a semifield.

    ``A + B`` is the entrywise sum, ``A @ B`` the product with ⊕ and ⊗
    in place of ordinary addition and multiplication, and ``A ** k``
    the k-fold product (``A ** 0`` is the identity).  Indexing is zero
    based: ``A[i, j]`` for matrices, ``x[i]`` for vectors.
    """

    __slots__ = ("sf", "data", "rows", "cols")

    def __init__(self, sf: Semifield, entries: Iterable[Iterable[Scalar | None]]):
        rows = []
        for i, row in enumerate(entries):
            cleaned = []
            for j, v in enumerate(row):
                if v is None:
                    v = sf.zero
                else:
                    v = sf.canonical(v)
                    if not sf.contains(v):
                        raise ValueError(
                            f"entry at row {i + 1}, column {j + 1} is not a "
                            f"{sf.name} carrier element: {v!r}")
                cleaned.append(v)
            rows.append(tuple(cleaned))
        data = tuple(rows)
        if not data or not data[0]:
            raise ValueError("a matrix needs at least one row and one column")
        width = len(data[0])
        if any(len(r) != width for r in data):
            raise ValueError("rows must all have the same length")
        self.sf = sf
        self.data = data
        self.rows = len(data)
        self.cols = width

    @classmethod
    def _wrap(cls, sf: Semifield, data: tuple[tuple[Scalar, ...], ...]) -> "Matrix":
        # fast path for results built from already validated entries
        m = object.__new__(cls)
        m.sf = sf
        m.data = data
        m.rows = len(data)
        m.cols = len(data[0])
        return m

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def zeros(cls, sf: Semifield, rows: int, cols: int) -> "Matrix":
        if rows < 1 or cols < 1:
            raise ValueError("a matrix needs at least one row and one column")
        return cls._wrap(sf, tuple((sf.zero,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, sf: Semifield, n: int) -> "Matrix":
        if n < 1:
            raise ValueError("a matrix needs at least one row and one column")
        return cls._wrap(sf, tuple(
            tuple(sf.one if i == j else sf.zero for j in range(n)) for i in range(n)))

    @classmethod
    def column(cls, sf: Semifield, entries: Iterable[Scalar | None]) -> "Matrix":
        return cls(sf, [[v] for v in entries])

    @classmethod
    def row(cls, sf: Semifield, entries: Iterable[Scalar | None]) -> "Matrix":
        return cls(sf, [list(entries)])

    # ------------------------------------------------------------------
    # structure

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def is_column(self) -> bool:
        return self.cols == 1

    @property
    def is_row(self) -> bool:
        return self.rows == 1

    @property
    def is_vector(self) -> bool:
        return self.cols == 1 or self.rows == 1

    def entries(self) -> tuple[Scalar, ...]:
        """All entries flattened row by row (a column's components, in order)."""
        return tuple(v for r in self.data for v in r)

    def column_at(self, j: int) -> "Matrix":
        return Matrix._wrap(self.sf, tuple((r[j],) for r in self.data))

    def __getitem__(self, key):
        if isinstance(key, tuple):
            i, j = key
            return self.data[i][j]
        if self.cols == 1:
            return self.data[key][0]
        if self.rows == 1:
            return self.data[0][key]
        raise TypeError("single-index access is only defined for vectors")

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.sf is other.sf and self.data == other.data

    def __hash__(self):
        return hash((id(self.sf), self.data))

    def to_lists(self) -> list[list[Scalar]]:
        return [list(r) for r in self.data]

    def __repr__(self):
        return f"Matrix({self.sf.name}, {self.to_lists()!r})"

    def __str__(self):
        cells = [[_fmt(v) for v in r] for r in self.data]
        width = max(len(c) for r in cells for c in r)
        return "\n".join(" ".join(c.rjust(width) for c in r) for r in cells)

    # ------------------------------------------------------------------
    # algebra

    def _same_semifield(self, other: "Matrix") -> None:
        if self.sf is not other.sf:
            raise ValueError("operands belong to different semifields")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_semifield(other)
        if self.shape != other.shape:
            raise ShapeMismatch(
                f"cannot add a {self.rows}x{self.cols} matrix "
                f"and a {other.rows}x{other.cols} matrix")
        add = self.sf.add
        return Matrix._wrap(self.sf, tuple(
            tuple(add(a, b) for a, b in zip(ra, rb))
            for ra, rb in zip(self.data, other.data)))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._same_semifield(other)
        if self.cols != other.rows:
            raise ShapeMismatch(
                f"cannot multiply a {self.rows}x{self.cols} matrix "
                f"by a {other.rows}x{other.cols} matrix")
        sf = self.sf
        add, mul, zero = sf.add, sf.mul, sf.zero
        bt = tuple(zip(*other.data))
        out = []
        for arow in self.data:
            line = []
            for bcol in bt:
                acc = zero
                for a, b in zip(arow, bcol):
                    acc = add(acc, mul(a, b))
                line.append(acc)
            out.append(tuple(line))
        return Matrix._wrap(sf, tuple(out))

    def __pow__(self, k: int) -> "Matrix":
        if self.rows != self.cols:
            raise NotSquare("powers are defined for square matrices")
        if not isinstance(k, int) or k < 0:
            raise ValueError("the exponent must be a nonnegative integer")
        acc = Matrix.identity(self.sf, self.rows)
        for _ in range(k):
            acc = acc @ self
        return acc

    def scale(self, alpha: Scalar) -> "Matrix":
        """Multiply every entry by the scalar `alpha`."""
        sf = self.sf
        alpha = sf.canonical(alpha)
        if not sf.contains(alpha):
            raise ValueError(f"{alpha!r} is not a {sf.name} carrier element")
        mul = sf.mul
        return Matrix._wrap(sf, tuple(tuple(mul(alpha, v) for v in r) for r in self.data))

    def transpose(self) -> "Matrix":
        return Matrix._wrap(self.sf, tuple(zip(*self.data)))

    def conj(self) -> "Matrix":
        """Conjugate transpose: the transpose with every entry inverted.

        Defined only for matrices without zero entries, since 𝟘 would
        need the missing top element as its inverse.
        """
        sf = self.sf
        zero = sf.zero
        for i, r in enumerate(self.data):
            for j, v in enumerate(r):
                if v == zero:
                    raise ZeroEntry(
                        f"cannot conjugate: entry at row {i + 1}, "
                        f"column {j + 1} is the zero")
        inv = sf.inv
        return Matrix._wrap(sf, tuple(
            tuple(inv(self.data[i][j]) for i in range(self.rows))
            for j in range(self.cols)))

    def trace(self) -> Scalar:
        if self.rows != self.cols:
            raise NotSquare("the trace is defined for square matrices")
        return self.sf.sum(self.data[i][i] for i in range(self.rows))

    def norm(self) -> Scalar:
        """⊕ over all entries; the largest entry in the induced order."""
        return self.sf.sum(v for r in self.data for v in r)

    def leq(self, other: "Matrix") -> bool:
        """Entrywise order: every entry of self ≤ the matching entry of other."""
        self._same_semifield(other)
        if self.shape != other.shape:
            raise ShapeMismatch("entrywise comparison needs equal shapes")
        leq = self.sf.leq
        return all(leq(a, b) for ra, rb in zip(self.data, other.data)
                   for a, b in zip(ra, rb))

    # ------------------------------------------------------------------
    # predicates

    def is_row_regular(self) -> bool:
        zero = self.sf.zero
        return all(any(v != zero for v in r) for r in self.data)

    def is_column_regular(self) -> bool:
        zero = self.sf.zero
        return all(any(r[j] != zero for r in self.data) for j in range(self.cols))

    def is_zero_free(self) -> bool:
        zero = self.sf.zero
        return all(v != zero for r in self.data for v in r)


def _fmt(v: Scalar) -> str:
    if isinstance(v, float) and v.is_integer():
        return str(int(v))
    return str(v)


# ----------------------------------------------------------------------
# operation vocabulary mirroring the class methods

def vector(sf: Semifield, entries: Iterable[Scalar | None]) -> Matrix:
    """Column vector over `sf`; ``None`` entries become 𝟘."""
    return Matrix.column(sf, entries)


def ones(sf: Semifield, n: int) -> Matrix:
    """Column vector with every component equal to the unit 𝟙."""
    if n < 1:
        raise ValueError("a vector needs at least one component")
    return Matrix._wrap(sf, ((sf.one,),) * n)


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return a + b


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    return a @ b


def conjugate_transpose(a: Matrix) -> Matrix:
    return a.conj()


def vector_conjugate(x: Matrix) -> Matrix:
    """Conjugate of a vector: a regular column becomes a row of inverses."""
    if not x.is_vector:
        raise ShapeMismatch("vector_conjugate expects a row or column vector")
    return x.conj()


def trace(a: Matrix) -> Scalar:
    return a.trace()


def norm(a: Matrix) -> Scalar:
    return a.norm()


def is_row_regular(a: Matrix) -> bool:
    return a.is_row_regular()


def is_column_regular(a: Matrix) -> bool:
    return a.is_column_regular()


def is_regular(x: Matrix) -> bool:
    """True when the vector `x` has no zero component."""
    if not x.is_vector:
        raise ShapeMismatch("is_regular applies to vectors")
    return x.is_zero_free()


def tr_closure(a: Matrix) -> Scalar:
    """⊕ of the traces of a, a², ..., aⁿ for an n×n matrix.

    The result is ≤ 𝟙 exactly when every cycle of the weighted digraph
    of `a` has weight ≤ 𝟙, which decides solvability of a ⊗ x ≤ x.
    """
    if a.rows != a.cols:
        raise NotSquare("the trace closure is defined for square matrices")
    sf = a.sf
    power = a
    acc = power.trace()
    for _ in range(a.rows - 1):
        power = power @ a
        acc = sf.add(acc, power.trace())
    return acc


def asterate(a: Matrix) -> Matrix:
    """Star closure I ⊕ a ⊕ ... ⊕ aⁿ⁻¹ of an n×n matrix.

    Requires tr_closure(a) ≤ 𝟙; beyond that threshold the series has
    no finite value and `TrConditionViolated` is raised.
    """
    if a.rows != a.cols:
        raise NotSquare("the asterate is defined for square matrices")
    sf = a.sf
    t = tr_closure(a)
    if not sf.leq(t, sf.one):
        raise TrConditionViolated(
            f"trace closure {_fmt(t)} exceeds the unit {_fmt(sf.one)}")
    acc = Matrix.identity(sf, a.rows)
    power = acc
    for _ in range(a.rows - 1):
        power = power @ a
        acc = acc + power
    return acc


def is_irreducible(a: Matrix) -> bool:
    """True when the nonzero pattern of `a` is strongly connected.

    Entry (i, j) ≠ 𝟘 contributes the arc j → i.  A 1×1 matrix counts
    as irreducible exactly when its entry is nonzero.
    """
    if a.rows != a.cols:
        raise NotSquare("irreducibility is defined for square matrices")
    n = a.rows
    zero = a.sf.zero
    if n == 1:
        return a.data[0][0] != zero
    fwd = [[] for _ in range(n)]
    rev = [[] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if a.data[i][j] != zero:
                fwd[j].append(i)
                rev[i].append(j)
    return _reaches_all(fwd, n) and _reaches_all(rev, n)


def _reaches_all(adj: Sequence[list[int]], n: int) -> bool:
    seen = [False] * n
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if not seen[w]:
                seen[w] = True
                count += 1
                stack.append(w)
    return count == n
