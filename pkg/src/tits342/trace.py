"""Trace polynomials of words in Z_3 * Z_4 (and Z_3 * Z_2).

Two independent routes are provided:

* :func:`trace_polynomial` multiplies explicit SL(2) lifts over Q(zeta_24)[z]
  and then substitutes z = lambda + shift;
* :func:`trace_polynomial_oracle` never builds a matrix.  It reduces the
  cyclic word with Cayley-Hamilton identities to an integer polynomial in
  (tr X, tr Y, tr XY) and then instantiates that polynomial.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Tuple

from .algebra import (
    ONE,
    SQRT2,
    ZERO,
    CyclotomicNumber,
    Matrix2,
    Polynomial,
    two_cos,
    zeta,
)
from .words import Word, word_stats


class SignatureMismatch(ValueError):
    pass


class InconsistentTrace(ArithmeticError):
    """Two computations that must agree did not."""


@dataclass(frozen=True)
class Signature:
    """Orders (ell, m) of x and y, with fixed upper/lower triangular SL(2) lifts.

    x -> [[e^{i pi/ell}, 0], [1, e^{-i pi/ell}]]
    y -> [[e^{i pi/m}, z], [0, e^{-i pi/m}]]
    """

    ell: int
    m: int
    var: str

    @property
    def x_angle(self) -> int:
        return 12 // self.ell  # in units of pi/12

    @property
    def y_angle(self) -> int:
        return 12 // self.m

    @property
    def trace_x(self) -> CyclotomicNumber:
        return two_cos(self.x_angle)

    @property
    def trace_y(self) -> CyclotomicNumber:
        return two_cos(self.y_angle)

    @property
    def shift(self) -> CyclotomicNumber:
        """tr(XY) at z = 0; the trace variable is z + shift."""
        return two_cos(self.x_angle + self.y_angle)

    def x_matrix(self) -> Matrix2:
        return Matrix2(zeta(self.x_angle), ZERO, ONE, zeta(-self.x_angle))

    def y_matrix(self) -> Matrix2:
        z = Polynomial([0, 1], "z")
        return Matrix2(zeta(self.y_angle), z, ZERO, zeta(-self.y_angle))

    @property
    def name(self) -> str:
        return f"({self.ell},{self.m})"


SIG_34 = Signature(3, 4, "λ")
SIG_32 = Signature(3, 2, "μ")


def _check_word(w: Word, sig: Signature) -> None:
    for a, b in w.syllables:
        if not (1 <= a < sig.ell and 1 <= b < sig.m):
            raise SignatureMismatch(f"{w} is not a word for signature {sig.name}")


@dataclass(frozen=True)
class TraceReport:
    word: Word
    signature: Signature
    tau: Polynomial
    trace_z: Polynomial

    @property
    def degree(self) -> int:
        return self.tau.degree

    @property
    def leading(self) -> CyclotomicNumber:
        return self.tau.leading

    @property
    def constant(self) -> CyclotomicNumber:
        """Constant term of tau in the trace variable."""
        return _as_cyc(self.tau[0])

    @property
    def z_constant(self) -> CyclotomicNumber:
        """tr w(A, B) at z = 0."""
        return _as_cyc(self.trace_z[0])

    def to_json(self) -> dict:
        st = word_stats(self.word)
        return {
            "word": str(self.word),
            "signature": self.signature.name,
            "k": self.word.k,
            "kappa": st.kappa,
            "variable": self.signature.var,
            "coefficients": self.tau.to_json(),
            "degree": self.degree,
            "leading": self.leading.to_json(),
            "constant": self.constant.to_json(),
            "z_constant": self.z_constant.to_json(),
        }


def _as_cyc(c) -> CyclotomicNumber:
    return c if isinstance(c, CyclotomicNumber) else CyclotomicNumber.from_scalar(c)


@lru_cache(maxsize=None)
def _generator_powers(sig: Signature) -> tuple[dict, dict]:
    X, Y = sig.x_matrix(), sig.y_matrix()
    one, zero = ONE, ZERO
    xp = {a: X.power(a, one, zero) for a in range(1, sig.ell)}
    yp = {b: Y.power(b, one, zero) for b in range(1, sig.m)}
    return xp, yp


def word_matrix(w: Word, sig: Signature = SIG_34) -> Matrix2:
    """w(A, B) with entries in Q(zeta_24)[z]."""
    _check_word(w, sig)
    xp, yp = _generator_powers(sig)
    m = None
    for a, b in w.syllables:
        step = xp[a] @ yp[b]
        m = step if m is None else m @ step
    return m


def trace_polynomial(w: Word, sig: Signature = SIG_34) -> TraceReport:
    trz = word_matrix(w, sig).trace
    if not isinstance(trz, Polynomial):
        trz = Polynomial.constant(trz, "z")
    tau = trz.shift(-sig.shift, sig.var)
    if tau.degree != w.k:
        raise InconsistentTrace(f"degree of tau for {w} is {tau.degree}, expected {w.k}")
    return TraceReport(w, sig, tau, trz)


# -- identity-based oracle ------------------------------------------------------

IntPoly3 = Dict[Tuple[int, int, int], int]  # exponents of (tr X, tr Y, tr XY)

_VARS = {"x": (1, 0, 0), "y": (0, 1, 0), "xy": (0, 0, 1)}


def _p_add(p: IntPoly3, q: IntPoly3, s: int = 1) -> IntPoly3:
    out = dict(p)
    for m, c in q.items():
        v = out.get(m, 0) + s * c
        if v:
            out[m] = v
        else:
            out.pop(m, None)
    return out


def _p_mulvar(p: IntPoly3, var: str) -> IntPoly3:
    d = _VARS[var]
    return {(m[0] + d[0], m[1] + d[1], m[2] + d[2]): c for m, c in p.items()}


_TWO: IntPoly3 = {(0, 0, 0): 2}


def _chebyshev(var: str, n: int) -> IntPoly3:
    # tr(G^n) = t * tr(G^(n-1)) - tr(G^(n-2)),  tr(G^0) = 2
    prev, cur = _TWO, {_VARS[var]: 1}
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, _p_add(_p_mulvar(cur, var), prev, -1)
    return cur


def _cyclic_key(seq: tuple) -> tuple:
    if not seq:
        return seq
    return min(seq[i:] + seq[:i] for i in range(len(seq)))


def _remove_power(seq: tuple, i: int, new_exp: int) -> tuple:
    """Replace the exponent at i; drop the syllable if it becomes 0 and merge
    the (cyclic) neighbours, which carry the same generator."""
    g, _ = seq[i]
    if new_exp:
        return seq[:i] + ((g, new_exp),) + seq[i + 1 :]
    rest = seq[i + 1 :] + seq[:i]  # rotation; traces are cyclic
    if len(rest) <= 1:
        return rest
    (g1, e1), (g2, e2) = rest[-1], rest[0]
    return ((g1, e1 + e2),) + rest[1:-1]


@lru_cache(maxsize=None)
def _trace_cyclic(seq: tuple) -> tuple:
    """Integer polynomial (as sorted item tuple) for tr of a cyclically reduced
    alternating sequence of (generator, positive exponent)."""
    if not seq:
        return tuple(_TWO.items())
    if len(seq) == 1:
        g, e = seq[0]
        return tuple(sorted(_chebyshev(g, e).items()))
    for i, (g, e) in enumerate(seq):
        if e >= 2:
            # U G^e V:  tr = t_G tr(U G^(e-1) V) - tr(U G^(e-2) V)
            a = dict(_trace_cyclic(_cyclic_key(_remove_power(seq, i, e - 1))))
            b = dict(_trace_cyclic(_cyclic_key(_remove_power(seq, i, e - 2))))
            return tuple(sorted(_p_add(_p_mulvar(a, g), b, -1).items()))
    # all exponents 1: (XY)^n
    return tuple(sorted(_chebyshev("xy", len(seq) // 2).items()))


def horowitz_polynomial(w: Word) -> IntPoly3:
    """tr w(X, Y) as an integer polynomial in tr X, tr Y, tr XY."""
    seq: list[tuple[str, int]] = []
    for a, b in w.syllables:
        seq += [("x", a), ("y", b)]
    return dict(_trace_cyclic(_cyclic_key(tuple(seq))))


def trace_polynomial_oracle(w: Word, sig: Signature = SIG_34) -> Polynomial:
    _check_word(w, sig)
    p = horowitz_polynomial(w)
    tx, ty = sig.trace_x, sig.trace_y
    # powers of the fixed traces, computed once
    deg = max((max(m[0], m[1]) for m in p), default=0)
    txp, typ = [ONE], [ONE]
    for _ in range(deg):
        txp.append(txp[-1] * tx)
        typ.append(typ[-1] * ty)
    coeffs: list = [ZERO] * (max((m[2] for m in p), default=0) + 1)
    for (i, j, l), c in p.items():
        coeffs[l] = coeffs[l] + txp[i] * typ[j] * c
    return Polynomial(coeffs, sig.var)


# -- checks -----------------------------------------------------------------------


def _sin_ratio(n: int, angle: int) -> CyclotomicNumber:
    """sin(n*theta)/sin(theta) for theta = angle*pi/12, via U_{n-1}(cos theta)."""
    t = two_cos(angle)
    prev, cur = ZERO, ONE
    for _ in range(n - 1):
        prev, cur = cur, t * cur - prev
    return cur


def leading_coefficient_formula(w: Word, sig: Signature = SIG_34) -> CyclotomicNumber:
    """Product over syllables of sin(a pi/ell) sin(b pi/m) / (sin(pi/ell) sin(pi/m))."""
    c = ONE
    for a, b in w.syllables:
        c = c * _sin_ratio(a, sig.x_angle) * _sin_ratio(b, sig.y_angle)
    return c


def leading_coefficient_check(w: Word) -> bool:
    lead = trace_polynomial(w, SIG_34).leading
    c = leading_coefficient_formula(w, SIG_34)
    kappa = word_stats(w).kappa
    if c != SQRT2**kappa:
        return False
    return lead == c or lead == -c


def constant_term_check(w: Word) -> bool:
    st = word_stats(w)
    expected = two_cos(4 * st.sum_alpha + 3 * st.sum_beta)
    return trace_polynomial(w, SIG_34).z_constant == expected


def essential_cyclic_z12(w: Word) -> bool:
    """Is there Gamma -> Z_12 with x, y, w of orders 3, 4, 2?"""
    st = word_stats(w)
    for a in (4, 8):
        for b in (3, 9):
            if (a * st.sum_alpha + b * st.sum_beta) % 12 == 6:
                return True
    return False


def has_essential_cyclic(w: Word, tau: Polynomial | None = None) -> bool:
    if tau is None:
        tau = trace_polynomial(w, SIG_34).tau
    by_roots = not tau(two_cos(1)) or not tau(two_cos(7))
    by_enum = essential_cyclic_z12(w)
    if by_roots != by_enum:
        raise InconsistentTrace(f"essential-cyclic tests disagree for {w}")
    return by_roots


class SigmaError(ValueError):
    pass


def sigma_polynomial(w: Word) -> Polynomial:
    """Integer trace polynomial of the image word in Z_3 * Z_2, in mu."""
    from .words import QuotientError, quotient_word

    try:
        wbar, power = quotient_word(w)
    except QuotientError as e:
        raise SigmaError(str(e)) from None
    if power:
        raise SigmaError(f"quotient word {wbar} is a proper power")
    tau = trace_polynomial(wbar, SIG_32).tau
    ints = []
    for c in tau.coeffs:
        c = _as_cyc(c)
        if not c.is_integer():
            raise InconsistentTrace(f"sigma of {w} has non-integer coefficient {c}")
        ints.append(int(c.to_fraction()))
    return Polynomial(ints, "μ")


# -- numeric shadow ---------------------------------------------------------------


def numeric_trace(w: Word, sig: Signature, t: complex) -> complex:
    """tr w(A, B) in floating point with the trace variable set to t."""
    z = t - sig.shift.to_complex()
    ex = cmath.exp(1j * math.pi / sig.ell)
    ey = cmath.exp(1j * math.pi / sig.m)
    X = ((ex, 0j), (1 + 0j, 1 / ex))
    Y = ((ey, z), (0j, 1 / ey))
    M = ((1 + 0j, 0j), (0j, 1 + 0j))
    for a, b in w.syllables:
        for _ in range(a):
            M = _cmul(M, X)
        for _ in range(b):
            M = _cmul(M, Y)
    return M[0][0] + M[1][1]


def _cmul(p, q):
    return (
        (p[0][0] * q[0][0] + p[0][1] * q[1][0], p[0][0] * q[0][1] + p[0][1] * q[1][1]),
        (p[1][0] * q[0][0] + p[1][1] * q[1][0], p[1][0] * q[0][1] + p[1][1] * q[1][1]),
    )
