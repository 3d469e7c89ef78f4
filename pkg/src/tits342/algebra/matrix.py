"""2x2 matrices over a commutative ring and dual numbers."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .cyclotomic import CyclotomicNumber, ZERO


@dataclass(frozen=True)
class Matrix2:
    """The matrix [[a, b], [c, d]] over any commutative ring."""

    a: Any
    b: Any
    c: Any
    d: Any

    @classmethod
    def identity(cls, one: Any = 1, zero: Any = 0) -> "Matrix2":
        return cls(one, zero, zero, one)

    def __matmul__(self, o: "Matrix2") -> "Matrix2":
        return Matrix2(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )

    def __add__(self, o: "Matrix2") -> "Matrix2":
        return Matrix2(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)

    def __sub__(self, o: "Matrix2") -> "Matrix2":
        return Matrix2(self.a - o.a, self.b - o.b, self.c - o.c, self.d - o.d)

    def __neg__(self) -> "Matrix2":
        return Matrix2(-self.a, -self.b, -self.c, -self.d)

    def scale(self, s: Any) -> "Matrix2":
        return Matrix2(s * self.a, s * self.b, s * self.c, s * self.d)

    def map(self, fn) -> "Matrix2":
        return Matrix2(fn(self.a), fn(self.b), fn(self.c), fn(self.d))

    @property
    def trace(self) -> Any:
        return self.a + self.d

    @property
    def det(self) -> Any:
        return self.a * self.d - self.b * self.c

    def adjugate(self) -> "Matrix2":
        """Inverse for determinant-one matrices."""
        return Matrix2(self.d, -self.b, -self.c, self.a)

    def power(self, n: int, one: Any = 1, zero: Any = 0) -> "Matrix2":
        if n < 0:
            return self.adjugate().power(-n, one, zero)
        result = Matrix2.identity(one, zero)
        base = self
        while n:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result

    def entries(self) -> tuple:
        return (self.a, self.b, self.c, self.d)

    def is_zero(self) -> bool:
        return not any(self.entries())


@dataclass(frozen=True)
class DualNumber:
    """a + b*eps with eps^2 = 0, over Q(zeta_24)."""

    value: CyclotomicNumber
    infinitesimal: CyclotomicNumber = ZERO

    @staticmethod
    def _lift(x) -> "DualNumber":
        if isinstance(x, DualNumber):
            return x
        return DualNumber(CyclotomicNumber.from_scalar(x) if not isinstance(x, CyclotomicNumber) else x, ZERO)

    def __add__(self, o) -> "DualNumber":
        o = DualNumber._lift(o)
        return DualNumber(self.value + o.value, self.infinitesimal + o.infinitesimal)

    __radd__ = __add__

    def __sub__(self, o) -> "DualNumber":
        o = DualNumber._lift(o)
        return DualNumber(self.value - o.value, self.infinitesimal - o.infinitesimal)

    def __rsub__(self, o) -> "DualNumber":
        return DualNumber._lift(o) - self

    def __neg__(self) -> "DualNumber":
        return DualNumber(-self.value, -self.infinitesimal)

    def __mul__(self, o) -> "DualNumber":
        o = DualNumber._lift(o)
        return DualNumber(
            self.value * o.value,
            self.value * o.infinitesimal + self.infinitesimal * o.value,
        )

    __rmul__ = __mul__

    def inverse(self) -> "DualNumber":
        if not self.value:
            raise ZeroDivisionError("dual number with zero value part is not invertible")
        inv = self.value.inverse()
        return DualNumber(inv, -self.infinitesimal * inv * inv)

    def __truediv__(self, o) -> "DualNumber":
        return self * DualNumber._lift(o).inverse()

    def __bool__(self) -> bool:
        return bool(self.value) or bool(self.infinitesimal)

    def __str__(self) -> str:
        return f"({self.value}) + ({self.infinitesimal})ε"


DUAL_ZERO = DualNumber(ZERO, ZERO)
DUAL_ONE = DualNumber(CyclotomicNumber.from_scalar(1), ZERO)
EPSILON = DualNumber(ZERO, CyclotomicNumber.from_scalar(1))


def dual_matrix_pow(m: Matrix2, n: int) -> Matrix2:
    """Exact n-th power of a matrix over the dual numbers."""
    if n < 1:
        raise ValueError("power must be a positive integer")
    return m.power(n, DUAL_ONE, DUAL_ZERO)


def value_part(m: Matrix2) -> Matrix2:
    return m.map(lambda x: x.value)


def infinitesimal_part(m: Matrix2) -> Matrix2:
    return m.map(lambda x: x.infinitesimal)
