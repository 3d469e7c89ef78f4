"""Exact arithmetic in the cyclotomic field Q(zeta_24).

Elements are stored in the power basis 1, zeta, ..., zeta^7 where
zeta = exp(i*pi/12) satisfies zeta^8 = zeta^4 - 1.  Internally the
coefficients are kept as an integer numerator vector over one positive
common denominator, which keeps the (very common) integral case cheap.
"""

from __future__ import annotations

import cmath
import math
import re
from fractions import Fraction
from functools import reduce
from typing import Iterable, Union

DEGREE = 8
ORDER = 24
# Galois group of Q(zeta_24) over Q: zeta -> zeta^j for j a unit mod 24.
GALOIS_EXPONENTS = (1, 5, 7, 11, 13, 17, 19, 23)

Scalar = Union[int, Fraction]


def _reduce_vector(c: list[int]) -> list[int]:
    # zeta^j = zeta^(j-4) - zeta^(j-8) for j >= 8
    for j in range(len(c) - 1, DEGREE - 1, -1):
        v = c[j]
        if v:
            c[j - 4] += v
            c[j - 8] -= v
    return c[:DEGREE]


def _power_vector(n: int) -> tuple[int, ...]:
    n %= ORDER
    c = [0] * (n + 1)
    c[n] = 1
    c = _reduce_vector(c + [0] * max(0, DEGREE - len(c)))
    return tuple(c)


_POWERS = tuple(_power_vector(n) for n in range(ORDER))


class CyclotomicNumber:
    """An immutable element of Q(zeta_24)."""

    __slots__ = ("_num", "_den", "_hash")

    def __init__(self, coefficients: Iterable[Scalar] = (), _raw: bool = False):
        if _raw:
            num, den = coefficients  # type: ignore[misc]
            self._num = num
            self._den = den
            self._hash = None
            return
        coeffs = [Fraction(c) for c in coefficients]
        if len(coeffs) > DEGREE:
            ints = _common(coeffs)
            num = _reduce_vector(list(ints[0]))
            self._num, self._den = _normalize(num, ints[1])
        else:
            coeffs += [Fraction(0)] * (DEGREE - len(coeffs))
            num, den = _common(coeffs)
            self._num, self._den = _normalize(list(num), den)
        self._hash = None

    # -- construction helpers -------------------------------------------------

    @classmethod
    def _make(cls, num: list[int], den: int = 1) -> "CyclotomicNumber":
        num, den = _normalize(num, den)
        return cls((num, den), _raw=True)

    @classmethod
    def from_scalar(cls, value: Scalar) -> "CyclotomicNumber":
        q = Fraction(value)
        return cls._make([q.numerator] + [0] * (DEGREE - 1), q.denominator)

    @classmethod
    def zeta(cls, n: int = 1) -> "CyclotomicNumber":
        """Return zeta^n for any integer n."""
        return cls((_POWERS[n % ORDER], 1), _raw=True)

    # -- accessors ------------------------------------------------------------

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self._den) for c in self._num)

    @property
    def denominator(self) -> int:
        return self._den

    def is_rational(self) -> bool:
        return not any(self._num[1:])

    def is_integer(self) -> bool:
        return self.is_rational() and self._den == 1

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self._num[0], self._den)

    def to_complex(self) -> complex:
        z = cmath.exp(1j * math.pi / 12)
        acc = 0j
        for c in reversed(self._num):
            acc = acc * z + c
        return acc / self._den

    # -- arithmetic -----------------------------------------------------------

    def __bool__(self) -> bool:
        return any(self._num)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, CyclotomicNumber):
            return self._den == other._den and self._num == other._num
        if isinstance(other, (int, Fraction)):
            return self == CyclotomicNumber.from_scalar(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._num, self._den))
        return self._hash

    def __neg__(self) -> "CyclotomicNumber":
        return CyclotomicNumber((tuple(-c for c in self._num), self._den), _raw=True)

    def __pos__(self) -> "CyclotomicNumber":
        return self

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if self._den == other._den:
            num = [a + b for a, b in zip(self._num, other._num)]
            if self._den == 1:
                return CyclotomicNumber((tuple(num), 1), _raw=True)
            return CyclotomicNumber._make(num, self._den)
        num = [a * other._den + b * self._den for a, b in zip(self._num, other._num)]
        return CyclotomicNumber._make(num, self._den * other._den)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._num, other._num
        c = [0] * (2 * DEGREE - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        c[i + j] += ai * bj
        num = _reduce_vector(c)
        den = self._den * other._den
        if den == 1:
            return CyclotomicNumber((tuple(num), 1), _raw=True)
        return CyclotomicNumber._make(num, den)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "CyclotomicNumber":
        if n < 0:
            return self.inverse() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def galois(self, j: int) -> "CyclotomicNumber":
        """Apply the automorphism zeta -> zeta^j (j a unit mod 24)."""
        if math.gcd(j, ORDER) != 1:
            raise ValueError(f"{j} is not a unit mod {ORDER}")
        acc = [0] * DEGREE
        for n, c in enumerate(self._num):
            if c:
                p = _POWERS[(n * j) % ORDER]
                for m in range(DEGREE):
                    acc[m] += c * p[m]
        return CyclotomicNumber._make(acc, self._den)

    def conjugate(self) -> "CyclotomicNumber":
        return self.galois(ORDER - 1)

    def norm(self) -> Fraction:
        prod = reduce(lambda x, y: x * y, (self.galois(j) for j in GALOIS_EXPONENTS))
        return prod.to_fraction()

    def inverse(self) -> "CyclotomicNumber":
        if not self:
            raise ZeroDivisionError("inverse of zero in Q(zeta_24)")
        others = ONE
        for j in GALOIS_EXPONENTS[1:]:
            others = others * self.galois(j)
        n = (self * others).to_fraction()
        return others * Fraction(1) / n

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero in Q(zeta_24)")
            q = Fraction(other)
            return CyclotomicNumber._make(
                [c * q.denominator for c in self._num], self._den * q.numerator
            )
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    # -- presentation ---------------------------------------------------------

    def __repr__(self) -> str:
        return f"CyclotomicNumber({self})"

    def __str__(self) -> str:
        terms = []
        for n, c in enumerate(self.coefficients):
            if not c:
                continue
            if n == 0:
                terms.append(str(c))
            else:
                mono = "ζ" if n == 1 else f"ζ^{n}"
                if c == 1:
                    terms.append(mono)
                elif c == -1:
                    terms.append(f"-{mono}")
                else:
                    terms.append(f"{c}*{mono}")
        if not terms:
            return "0"
        return " + ".join(terms).replace("+ -", "- ")

    def to_json(self) -> list[str]:
        return [f"{c.numerator}/{c.denominator}" for c in self.coefficients]

    @classmethod
    def from_json(cls, data: list[str]) -> "CyclotomicNumber":
        if len(data) != DEGREE:
            raise ValueError(f"expected {DEGREE} coefficients, got {len(data)}")
        return cls(Fraction(s) for s in data)


def _common(coeffs: list[Fraction]) -> tuple[list[int], int]:
    den = 1
    for c in coeffs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    return [c.numerator * (den // c.denominator) for c in coeffs], den


def _normalize(num: list[int], den: int) -> tuple[tuple[int, ...], int]:
    if den == 0:
        raise ZeroDivisionError("zero denominator")
    if den < 0:
        num = [-c for c in num]
        den = -den
    if den != 1:
        g = den
        for c in num:
            if c:
                g = math.gcd(g, c)
                if g == 1:
                    break
        if not any(num):
            g = den
        if g != 1:
            num = [c // g for c in num]
            den //= g
    return tuple(num), den


def _coerce(x) -> CyclotomicNumber | None:
    if isinstance(x, CyclotomicNumber):
        return x
    if isinstance(x, (int, Fraction)):
        return CyclotomicNumber.from_scalar(x)
    return None


ZERO = CyclotomicNumber.from_scalar(0)
ONE = CyclotomicNumber.from_scalar(1)


def zeta(n: int = 1) -> CyclotomicNumber:
    return CyclotomicNumber.zeta(n)


def two_cos(k: int) -> CyclotomicNumber:
    """2cos(k*pi/12) = zeta^k + zeta^-k."""
    return zeta(k) + zeta(-k)


SQRT2 = two_cos(3)
SQRT3 = two_cos(2)
SQRT6 = SQRT2 * SQRT3
I = zeta(6)

_NAMED = {"sqrt2": SQRT2, "sqrt3": SQRT3, "sqrt6": SQRT6, "i": I}
_EXP_RE = re.compile(r"^exp\(\s*(?:i\s*\*?\s*pi|iπ)\s*\*?\s*(-?\d+)\s*/\s*12\s*\)$")
_EXP_RE2 = re.compile(r"^exp\(\s*(-?\d+)\s*\*?\s*(?:i\s*\*?\s*pi|iπ)\s*/\s*12\s*\)$")
_COS_RE = re.compile(r"^2cos\(\s*(-?\d+)\s*\*?\s*(?:pi|π)\s*/\s*12\s*\)$")


class UnknownConstant(KeyError):
    pass


def cyc_constant(name: str) -> CyclotomicNumber:
    """Look up a named constant.

    Accepted ids: ``sqrt2``, ``sqrt3``, ``sqrt6``, ``i``,
    ``exp(i*pi*k/12)`` (also ``exp(k*i*pi/12)``) and ``2cos(k*pi/12)``.
    """
    key = name.strip().replace(" ", "")
    if key in _NAMED:
        return _NAMED[key]
    for pattern, fn in ((_EXP_RE, zeta), (_EXP_RE2, zeta), (_COS_RE, two_cos)):
        m = pattern.match(key)
        if m:
            return fn(int(m.group(1)))
    raise UnknownConstant(name)
