"""Root-form checks, the mod-12 condition, repeated-root gates and cell counts."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..algebra import (
    DUAL_ONE,
    DUAL_ZERO,
    ONE,
    SQRT2,
    SQRT3,
    ZERO,
    CyclotomicNumber,
    DualNumber,
    I,
    Matrix2,
    Polynomial,
    dual_matrix_pow,
    poly_divrem,
    zeta,
)
from ..algebra.matrix import infinitesimal_part, value_part
from ..trace import TraceReport
from ..words import WordStats, word_stats


def _cyc(c) -> CyclotomicNumber:
    return c if isinstance(c, CyclotomicNumber) else CyclotomicNumber.from_scalar(c)


# -- tau(lambda) = ±(√2)^κ λ^s (λ-√2)^(k-s) -----------------------------------------


@dataclass(frozen=True)
class TauFormCheck:
    matches: bool
    s: int
    kappa_used: int
    sign: int  # 0 when the form does not match

    def to_json(self) -> dict:
        return {"matches": self.matches, "s": self.s, "kappa": self.kappa_used, "sign": self.sign}


def check_tau_form(report: TraceReport) -> TauFormCheck:
    tau = report.tau
    k = report.word.k
    kappa = word_stats(report.word).kappa
    s = tau.root_multiplicity(0)
    p = Polynomial(tau.coeffs[s:], tau.var)
    root = Polynomial.linear(SQRT2, tau.var)
    for _ in range(k - s):
        p, r = poly_divrem(p, root)
        if r:
            return TauFormCheck(False, s, kappa, 0)
    if p.degree != 0:
        return TauFormCheck(False, s, kappa, 0)
    c = _cyc(p[0])
    unit = SQRT2**kappa
    if c == unit:
        return TauFormCheck(True, s, kappa, 1)
    if c == -unit:
        return TauFormCheck(True, s, kappa, -1)
    return TauFormCheck(False, s, kappa, 0)


# -- sigma(mu) = ±μ^u1 (μ²-1)^u2 (μ²-2)^u3 (μ⁴-3μ²+1)^u4 --------------------------

SIGMA_FACTORS = (
    Polynomial([0, 1], "μ"),
    Polynomial([-1, 0, 1], "μ"),
    Polynomial([-2, 0, 1], "μ"),
    Polynomial([1, 0, -3, 0, 1], "μ"),
)


@dataclass(frozen=True)
class SigmaFormCheck:
    matches: bool
    u1: int
    u2: int
    u3: int
    u4: int
    sign: int  # 0 when the residual is not ±1

    @property
    def u(self) -> tuple[int, int, int, int]:
        return (self.u1, self.u2, self.u3, self.u4)

    def to_json(self) -> dict:
        return {"matches": self.matches, "u": list(self.u), "sign": self.sign}


def _multiplicity(p: Polynomial, f: Polynomial) -> tuple[int, Polynomial]:
    m = 0
    while p.degree >= f.degree:
        q, r = poly_divrem(p, f)
        if r:
            break
        m, p = m + 1, q
    return m, p


def check_sigma_form(sigma: Polynomial, k: int) -> SigmaFormCheck:
    if not sigma:
        return SigmaFormCheck(False, 0, 0, 0, 0, 0)
    for c in sigma.coeffs:
        if Fraction(c).denominator != 1:
            raise ValueError("sigma must have integer coefficients")
    p = sigma
    us = []
    for f in SIGMA_FACTORS:
        m, p = _multiplicity(p, f)
        us.append(m)
    sign = 0
    if p.degree == 0 and p[0] in (1, -1):
        sign = int(p[0])
    degree_ok = us[0] + 2 * us[1] + 2 * us[2] + 4 * us[3] == k
    return SigmaFormCheck(bool(sign) and degree_ok, *us, sign)


def mod12_check(stats: WordStats) -> bool:
    return stats.mod12 in (1, 5, 7, 11)


# -- first-order certificate at the double root √2 ----------------------------------


@dataclass(frozen=True)
class CertificateItem:
    name: str
    passed: bool


EXPECTED_M = Matrix2(
    2 * SQRT2,
    -2 * (ONE + I * SQRT3),
    2 * (ONE - I * SQRT3),
    -2 * SQRT2,
)


def dual_root_certificate(m_override: Matrix2 | None = None) -> list[CertificateItem]:
    """Exact checks on rho(x) = [[e^{iπ/3}, μ], [0, e^{-iπ/3}]], rho(y) = [[0,-1],[1,0]]
    at μ = √2 + ε.

    ``m_override`` replaces the expected matrix M; it exists so that a
    corrupted constant can be fed in to confirm the check is live.
    """
    expected = EXPECTED_M if m_override is None else m_override
    mu = DualNumber(SQRT2, ONE)
    X = Matrix2(DualNumber(zeta(4)), mu, DUAL_ZERO, DualNumber(zeta(-4)))
    Y = Matrix2(DUAL_ZERO, DualNumber(-ONE), DUAL_ONE, DUAL_ZERO)
    minus_i = Matrix2(DualNumber(-ONE), DUAL_ZERO, DUAL_ZERO, DualNumber(-ONE))
    plus_i = -minus_i
    XY = X @ Y
    P = dual_matrix_pow(XY, 4)
    X3 = dual_matrix_pow(X, 3)
    # the same product computed with plain numbers at μ = √2
    Xv = Matrix2(zeta(4), SQRT2, ZERO, zeta(-4))
    Yv = Matrix2(ZERO, -ONE, ONE, ZERO)
    Pv = (Xv @ Yv).power(4, ONE, ZERO)
    M = infinitesimal_part(P)
    items = [
        CertificateItem("tr rho(x) = 1", X.trace == DualNumber(ONE)),
        CertificateItem("det rho(x) = det rho(y) = 1", X.det == DUAL_ONE and Y.det == DUAL_ONE),
        CertificateItem("rho(y)^2 = -I", Y @ Y == minus_i),
        CertificateItem("rho(x)^3 = ±I", X3 == minus_i or X3 == plus_i),
        CertificateItem("tr rho(x)rho(y) = √2 + ε", XY.trace == mu),
        CertificateItem("value part of rho((xy)^4) = -I", value_part(P) == value_part(minus_i)),
        CertificateItem("value part agrees with the computation at μ = √2", value_part(P) == Pv),
        CertificateItem("rho((xy)^4) = -I + εM with M as expected", M == expected),
        CertificateItem("M != 0", not M.is_zero()),
    ]
    return items


# -- cell counts of the covering complex ---------------------------------------------


@dataclass(frozen=True)
class CellData:
    image_order: int
    c0: int
    c1: int
    c2: int
    euler: int
    square_cells: int
    square_cells_alt: int

    @property
    def gate(self) -> bool:
        return self.square_cells > self.euler

    @property
    def gate_alt(self) -> bool:
        return self.square_cells_alt > self.euler

    def to_json(self) -> dict:
        return {
            "image_order": self.image_order,
            "cells": [self.c0, self.c1, self.c2],
            "euler": self.euler,
            "square_cells": self.square_cells,
            "square_cells_alt": self.square_cells_alt,
            "gate": self.gate,
            "gate_alt": self.gate_alt,
        }


def cell_data(image_order: int) -> CellData:
    """Cells of the complex with one vertex orbit, two edge orbits and 2-cells
    from x^3, y^4 (attached by squares) and w^2."""
    n = image_order
    if n <= 0 or n % 12:
        raise ValueError(f"image order must be a positive multiple of 12, got {n}")
    c0, c1 = n, 2 * n
    c2 = n // 4 + n // 3 + n // 2
    return CellData(n, c0, c1, c2, c0 - c1 + c2, n // 4, n // 2)


@dataclass(frozen=True)
class GateFiring:
    rule: str
    cells: CellData
    certificate_passed: bool


def repeated_root_gate(check: SigmaFormCheck) -> list[GateFiring]:
    """Fires for a repeated root √2 (u3 >= 2) or repeated roots of μ⁴-3μ²+1 (u4 >= 2)."""
    if not check.matches:
        raise ValueError("repeated_root_gate needs a matching sigma form")
    out = []
    if check.u3 >= 2:
        cert = all(i.passed for i in dual_root_certificate())
        out.append(GateFiring("double-root-sqrt2", cell_data(24), cert))
    if check.u4 >= 2:
        out.append(GateFiring("double-root-golden", cell_data(60), True))
    for f in out:
        if not (f.cells.gate and f.cells.gate_alt and f.certificate_passed):
            raise AssertionError(f"gate {f.rule} fired without its hypotheses")
    return out
