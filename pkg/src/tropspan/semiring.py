"""Idempotent semifields and their scalar arithmetic.

An idempotent semifield is a commutative semiring whose addition is
idempotent (a ⊕ a = a) and whose elements other than the zero 𝟘 all
have multiplicative inverses.  Addition induces the order

    a ≤ b   iff   a ⊕ b = b,

assumed total here, so ⊕ acts as a maximum with 𝟘 as the bottom
element.  Scalars are plain Python numbers; each semifield instance
designates one number as 𝟘 and one as the unit 𝟙.

The number that would complete the order at the top (+inf in
max-plus) is not a carrier element: matrices reject it on
construction, and inverting 𝟘 raises `InversionOfZero` rather than
producing it.

Shipped instances:

    max_plus    ⟨ℝ ∪ {-inf}, -inf, 0, max, +⟩   the scheduling algebra
    min_plus    ⟨ℝ ∪ {+inf}, +inf, 0, min, +⟩
    max_times   ⟨ℝ≥0, 0, 1, max, ·⟩

Arithmetic is exact whenever the inputs are exact: integers stay
integers under max, min and +, and dyadic floats stay dyadic under
· and 1/x.  Equality everywhere is plain ``==`` with no tolerance.
"""

from __future__ import annotations

import math
from typing import Iterable

from .errors import InversionOfZero

Scalar = int | float


def _is_number(a: object) -> bool:
    # bool is an int subclass but makes no sense as a carrier element
    return isinstance(a, (int, float)) and not isinstance(a, bool)


class Semifield:
    """Scalar operations of one idempotent semifield instance."""

    name: str = "abstract"
    zero: Scalar
    one: Scalar

    def add(self, a: Scalar, b: Scalar) -> Scalar:
        raise NotImplementedError

    def mul(self, a: Scalar, b: Scalar) -> Scalar:
        raise NotImplementedError

    def inv(self, a: Scalar) -> Scalar:
        raise NotImplementedError

    def contains(self, a: object) -> bool:
        """True when `a` is a carrier element of this semifield."""
        raise NotImplementedError

    def leq(self, a: Scalar, b: Scalar) -> bool:
        """Order induced by addition: a ≤ b iff a ⊕ b = b."""
        return self.add(a, b) == b

    def lt(self, a: Scalar, b: Scalar) -> bool:
        return a != b and self.add(a, b) == b

    def is_zero(self, a: Scalar) -> bool:
        return a == self.zero

    def canonical(self, a: Scalar) -> Scalar:
        """Collapse alternative encodings of 𝟘 (such as -0.0 in max_times)."""
        return self.zero if a == self.zero else a

    def sum(self, values: Iterable[Scalar]) -> Scalar:
        acc = self.zero
        for v in values:
            acc = self.add(acc, v)
        return acc

    def __repr__(self) -> str:
        return f"<{self.name} semifield>"


class _MaxPlus(Semifield):
    name = "max-plus"
    zero = float("-inf")
    one = 0

    def add(self, a, b):
        return a if b <= a else b

    def mul(self, a, b):
        return a + b

    def inv(self, a):
        if a == self.zero:
            raise InversionOfZero("the max-plus zero (-inf) has no inverse")
        return -a

    def contains(self, a):
        return _is_number(a) and not math.isnan(a) and a < math.inf


class _MinPlus(Semifield):
    name = "min-plus"
    zero = float("inf")
    one = 0

    def add(self, a, b):
        return a if a <= b else b

    def mul(self, a, b):
        return a + b

    def inv(self, a):
        if a == self.zero:
            raise InversionOfZero("the min-plus zero (+inf) has no inverse")
        return -a

    def contains(self, a):
        return _is_number(a) and not math.isnan(a) and a > -math.inf


class _MaxTimes(Semifield):
    name = "max-times"
    zero = 0
    one = 1

    def add(self, a, b):
        return a if b <= a else b

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == self.zero:
            raise InversionOfZero("the max-times zero (0) has no inverse")
        return 1 / a

    def contains(self, a):
        return _is_number(a) and not math.isnan(a) and 0 <= a < math.inf


max_plus = _MaxPlus()
min_plus = _MinPlus()
max_times = _MaxTimes()

#: All shipped semifield instances, mainly for axiom test sweeps.
INSTANCES = (max_plus, min_plus, max_times)
