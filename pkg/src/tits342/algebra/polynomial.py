"""Dense univariate polynomials over an exact coefficient ring.

Coefficients are stored lowest degree first.  Any exact ring type that
supports ``+ - *`` with ints works (``int``, ``Fraction``,
``CyclotomicNumber``); division additionally needs ``1 / leading``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Iterable, Sequence

from .cyclotomic import CyclotomicNumber


class Polynomial:
    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Iterable[Any] = (), var: str = "z"):
        c = list(coeffs)
        while c and not c[-1]:
            c.pop()
        self.coeffs: tuple = tuple(c)
        self.var = var

    @classmethod
    def constant(cls, c, var: str = "z") -> "Polynomial":
        return cls([c], var)

    @classmethod
    def monomial(cls, degree: int, c=1, var: str = "z") -> "Polynomial":
        return cls([0] * degree + [c], var)

    @classmethod
    def linear(cls, root, var: str = "z") -> "Polynomial":
        """The monic polynomial ``var - root``."""
        return cls([-root, 1], var)

    # -- basic queries --------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return len(self.coeffs) == len(other.coeffs) and all(
                a == b for a, b in zip(self.coeffs, other.coeffs)
            )
        if isinstance(other, (int, Fraction, CyclotomicNumber)):
            return self == Polynomial.constant(other, self.var)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    # -- ring operations ------------------------------------------------------

    def _wrap(self, other) -> "Polynomial | None":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction, CyclotomicNumber)):
            return Polynomial.constant(other, self.var)
        return None

    def __neg__(self) -> "Polynomial":
        return Polynomial([-c for c in self.coeffs], self.var)

    def __add__(self, other):
        other = self._wrap(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Polynomial(out, self.var)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._wrap(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._wrap(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CyclotomicNumber)):
            if not other:
                return Polynomial((), self.var)
            return Polynomial([c * other for c in self.coeffs], self.var)
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial((), self.var)
        out: list = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] = out[i + j] + ai * bj
        return Polynomial(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Polynomial.constant(1, self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- evaluation and substitution -----------------------------------------

    def __call__(self, x):
        acc: Any = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def shift(self, c, var: str | None = None) -> "Polynomial":
        """Return p(t + c) as a polynomial in ``t`` (named ``var``)."""
        var = var or self.var
        out: list = list(self.coeffs)
        n = len(out)
        # repeated synthetic division (Taylor shift)
        for i in range(n):
            for j in range(n - 2, i - 1, -1):
                out[j] = out[j] + c * out[j + 1]
        return Polynomial(out, var)

    def map_coefficients(self, fn, var: str | None = None) -> "Polynomial":
        return Polynomial([fn(c) for c in self.coeffs], var or self.var)

    def reflect(self) -> "Polynomial":
        """p(-x)."""
        return Polynomial(
            [c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs)], self.var
        )

    # -- division -------------------------------------------------------------

    def divrem(self, d: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        return poly_divrem(self, d)

    def __floordiv__(self, d: "Polynomial") -> "Polynomial":
        return poly_divrem(self, d)[0]

    def __mod__(self, d: "Polynomial") -> "Polynomial":
        return poly_divrem(self, d)[1]

    def root_multiplicity(self, root) -> int:
        """Multiplicity of ``root`` as a root (0 if not a root)."""
        if not self:
            raise ValueError("every value is a root of the zero polynomial")
        factor = Polynomial.linear(root, self.var)
        m, p = 0, self
        while True:
            q, r = poly_divrem(p, factor)
            if r:
                return m
            m, p = m + 1, q

    # -- presentation ---------------------------------------------------------

    def __repr__(self) -> str:
        return f"Polynomial({list(map(str, self.coeffs))}, var={self.var!r})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else self.var if i == 1 else f"{self.var}^{i}"
            cs = str(c)
            if " " in cs:
                cs = f"({cs})"
            if not mono:
                terms.append(cs)
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append(f"-{mono}")
            else:
                terms.append(f"{cs}*{mono}")
        return " + ".join(terms).replace("+ -", "- ")

    def to_json(self) -> list[list[str]]:
        return [_cyc(c).to_json() for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[Sequence[str]], var: str = "z") -> "Polynomial":
        return cls([CyclotomicNumber.from_json(list(c)) for c in data], var)


def _cyc(c) -> CyclotomicNumber:
    return c if isinstance(c, CyclotomicNumber) else CyclotomicNumber.from_scalar(c)


def poly_divrem(p: Polynomial, d: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Exact long division: p = q*d + r with deg r < deg d."""
    if not d:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(p.coeffs)
    dc = d.coeffs
    dn = len(dc) - 1
    lead = dc[-1]
    inv = None if lead == 1 else (1 / lead if not isinstance(lead, int) else Fraction(1, lead))
    if len(r) <= dn:
        return Polynomial((), p.var), Polynomial(r, p.var)
    q: list = [0] * (len(r) - dn)
    for i in range(len(r) - 1, dn - 1, -1):
        c = r[i]
        if not c:
            continue
        if inv is not None:
            c = c * inv
        q[i - dn] = c
        for j in range(dn + 1):
            if dc[j]:
                r[i - dn + j] = r[i - dn + j] - c * dc[j]
    return Polynomial(q, p.var), Polynomial(r[:dn], p.var)
