"""The per-word classifier and the search over canonical words."""

from __future__ import annotations

import cmath
import math
import os
from dataclasses import dataclass, field
from multiprocessing import Pool
from typing import Sequence

from ..algebra import SQRT2, SQRT3, two_cos
from ..trace import (
    SIG_32,
    SIG_34,
    TraceReport,
    has_essential_cyclic,
    sigma_polynomial,
    trace_polynomial,
)
from ..words import Word, enumerate_codes, is_proper_power, quotient_word, word_stats
from .endgames import endgame_k1, low_index_endgame
from .essential import z12_images
from .rules import TauFormCheck, check_sigma_form, check_tau_form, mod12_check, repeated_root_gate


class InternalContradiction(AssertionError):
    """A branch that the argument shows to be impossible was reached."""


@dataclass
class RuleStep:
    rule: str
    statement: str
    evidence: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"rule": self.rule, "statement": self.statement, "evidence": self.evidence}


@dataclass
class Verdict:
    word: Word
    outcome: str  # FreeSubgroup, VirtuallySoluble, WitnessRequired, EvenK-Delegated
    rule: str | None
    resolved: bool | None
    trail: list[RuleStep]

    @property
    def label(self) -> str:
        if self.outcome == "EvenK-Delegated":
            return self.outcome
        if self.outcome == "WitnessRequired":
            return f"WitnessRequired(resolved={str(self.resolved).lower()})"
        return f"{self.outcome}({self.rule})"

    def to_json(self) -> dict:
        return {
            "word": str(self.word),
            "verdict": self.label,
            "outcome": self.outcome,
            "rule": self.rule,
            "resolved": self.resolved,
            "trail": [s.to_json() for s in self.trail],
        }


def _j(c) -> list[str]:
    return c.to_json()


def analyze(w: Word, witness_path: str | os.PathLike | None = None) -> Verdict:
    """Apply the certificate rules in order and return the first that decides w."""
    if is_proper_power(w):
        raise ValueError(f"{w} is a proper power")
    k = w.k
    trail: list[RuleStep] = []

    def done(outcome: str, rule: str | None, resolved: bool | None = None) -> Verdict:
        return Verdict(w, outcome, rule, resolved, trail)

    if k % 2 == 0:
        trail.append(RuleStep("even-k", "k is even; the even case is handled elsewhere", {"k": k}))
        return done("EvenK-Delegated", None)

    if k == 1:
        res = endgame_k1(w)
        if not res.resolved:
            raise InternalContradiction(f"k = 1 endgame failed for {w}: {res.evidence}")
        trail.append(RuleStep(res.rule, "finite group computation for k = 1", res.evidence))
        return done(res.outcome, res.rule)

    report = trace_polynomial(w, SIG_34)
    if has_essential_cyclic(w, report.tau):
        trail.append(RuleStep(
            "essential-cyclic",
            "tau vanishes at 2cos(pi/12) or 2cos(7pi/12): essential map onto Z_12",
            {"z12_images": list(z12_images(w))},
        ))
        return done("FreeSubgroup", "essential-cyclic")
    trail.append(RuleStep("no-essential-cyclic", "tau is nonzero at 2cos(pi/12) and 2cos(7pi/12)"))

    at = report.tau(-SQRT2)
    if not at:
        trail.append(RuleStep("inverse-trick", "tau(-√2) = 0; replacing X by X^-1 gives a non-elementary representation"))
        return done("FreeSubgroup", "inverse-trick")
    trail.append(RuleStep("tau(-√2) != 0", "tau(-√2) is nonzero", {"value": _j(at)}))

    tc = check_tau_form(report)
    if not tc.matches:
        trail.append(RuleStep(
            "non-elementary",
            "tau has a root other than 0 and √2, giving a non-elementary essential representation",
            {"s": tc.s, "tau": report.tau.to_json()},
        ))
        return done("FreeSubgroup", "non-elementary")
    trail.append(RuleStep("tau-form", "tau = ±(√2)^kappa λ^s (λ-√2)^(k-s)", tc.to_json()))

    st = word_stats(w)
    if st.kappa != 0 or abs(k - 2 * tc.s) != 1 or not mod12_check(st):
        raise InternalContradiction(
            f"{w}: tau has the root form but kappa = {st.kappa}, k - 2s = {k - 2 * tc.s}, mod12 = {st.mod12}"
        )
    trail.append(RuleStep("survivor-structure", "kappa = 0, k - 2s = ±1, mod12 a unit",
                          {"kappa": 0, "k_minus_2s": k - 2 * tc.s, "mod12": st.mod12}))

    wbar, power = quotient_word(w)
    if power:
        trail.append(RuleStep("quotient-power", "image word in Z_3 * Z_2 is a proper power", {"quotient": str(wbar)}))
        return done("FreeSubgroup", "quotient-power")

    sigma = sigma_polynomial(w)
    sc = check_sigma_form(sigma, k)
    if not sc.matches:
        trail.append(RuleStep(
            "non-elementary-quotient",
            "sigma has a root outside the elementary list, giving a non-elementary representation of the quotient",
            {"sigma": sigma.to_json(), "u": list(sc.u)},
        ))
        return done("FreeSubgroup", "non-elementary-quotient")
    if sc.u1 != 1 or sc.u2 != 0:
        raise InternalContradiction(f"{w}: sigma has u1 = {sc.u1}, u2 = {sc.u2}")
    zc = trace_polynomial(wbar, SIG_32).z_constant
    expected = two_cos(4 * st.sum_alpha + 6 * k)
    if zc != expected or (zc != SQRT3 and zc != -SQRT3):
        raise InternalContradiction(f"{w}: constant term of sigma(z - √3) is {zc}")
    trail.append(RuleStep("sigma-form", "sigma = ±μ (μ²-2)^u3 (μ⁴-3μ²+1)^u4 with constant term ±√3",
                          {"u": list(sc.u), "sign": sc.sign, "z_constant": _j(zc)}))

    gates = repeated_root_gate(sc)
    if gates:
        g = gates[0]
        trail.append(RuleStep(g.rule, "repeated root; the covering complex has more square cells than its Euler characteristic",
                              {"cells": g.cells.to_json()}))
        return done("FreeSubgroup", g.rule)

    if k != 1 + 2 * sc.u3 + 4 * sc.u4:
        raise InternalContradiction(f"{w}: k = {k} but u = {sc.u}")
    res = low_index_endgame(w, 4, witness_path)
    trail.append(RuleStep(res.rule, "low-index subgroups and F_2 witness", res.evidence))
    return done("WitnessRequired", None, res.resolved)


# -- search -------------------------------------------------------------------------

_POINTS = (0.37 + 0.71j, -1.13 + 0.29j, 0.61 - 1.27j, 1.93 + 0.41j)
_RTOL = 1e-6


def _syllable_matrices(t: complex) -> list:
    z = t - SIG_34.shift.to_complex()
    ex = cmath.exp(1j * math.pi / 3)
    ey = cmath.exp(1j * math.pi / 4)
    X = ((ex, 0j), (1 + 0j, 1 / ex))
    Y = ((ey, z), (0j, 1 / ey))
    out = []
    for code in range(6):
        a, b = code // 3 + 1, code % 3 + 1
        M = ((1 + 0j, 0j), (0j, 1 + 0j))
        for _ in range(a):
            M = _mul(M, X)
        for _ in range(b):
            M = _mul(M, Y)
        out.append(M)
    return out


def _mul(p, q):
    return (
        (p[0][0] * q[0][0] + p[0][1] * q[1][0], p[0][0] * q[0][1] + p[0][1] * q[1][1]),
        (p[1][0] * q[0][0] + p[1][1] * q[1][0], p[1][0] * q[0][1] + p[1][1] * q[1][1]),
    )


_TABLES = [_syllable_matrices(t) for t in _POINTS]


def _numeric_candidate(code: Sequence[int]) -> bool:
    """Could tau be c λ^s (λ-√2)^(k-s) for some s and constant c?  Never rejects a true match."""
    k = len(code)
    vals = []
    for tab in _TABLES:
        a, b, c, d = tab[code[0]][0][0], tab[code[0]][0][1], tab[code[0]][1][0], tab[code[0]][1][1]
        for s in code[1:]:
            m = tab[s]
            a, b, c, d = (
                a * m[0][0] + b * m[1][0], a * m[0][1] + b * m[1][1],
                c * m[0][0] + d * m[1][0], c * m[0][1] + d * m[1][1],
            )
        vals.append(a + d)
    r2 = math.sqrt(2)
    for s in range(k + 1):
        ratios = [v / (t**s * (t - r2) ** (k - s)) for v, t in zip(vals, _POINTS)]
        r0 = ratios[0]
        if all(abs(r - r0) <= _RTOL * max(1.0, abs(r0)) for r in ratios[1:]):
            return True
    return False


def _screen(args: tuple[list[tuple[int, ...]], bool]) -> list[tuple[tuple[int, ...], TauFormCheck]]:
    codes, exact = args
    out = []
    for code in codes:
        if not exact and not _numeric_candidate(code):
            continue
        tc = check_tau_form(trace_polynomial(Word.from_code(code), SIG_34))
        if tc.matches:
            out.append((code, tc))
    return out


@dataclass
class SearchHit:
    word: Word
    tau_check: TauFormCheck
    verdict: Verdict | None

    def to_json(self) -> dict:
        st = word_stats(self.word)
        return {
            "word": str(self.word),
            "s": self.tau_check.s,
            "sign": self.tau_check.sign,
            "kappa": st.kappa,
            "mod12": st.mod12,
            "verdict": self.verdict.to_json() if self.verdict else None,
        }


def search(
    k: int,
    jobs: int = 1,
    exact: bool = False,
    with_verdicts: bool = True,
    witness_path: str | os.PathLike | None = None,
) -> list[SearchHit]:
    """Canonical words of length k whose tau has the form ±(√2)^kappa λ^s (λ-√2)^(k-s).

    Candidates are screened numerically (unless ``exact``) and always confirmed
    exactly.  Output order is the enumeration order, whatever ``jobs`` is.
    """
    if k < 1 or k % 2 == 0:
        raise ValueError("search needs an odd k >= 1")
    codes = list(enumerate_codes(k))
    size = 2000
    chunks = [(codes[i : i + size], exact) for i in range(0, len(codes), size)]
    if jobs > 1 and len(chunks) > 1:
        with Pool(jobs) as pool:
            parts = pool.map(_screen, chunks)
    else:
        parts = [_screen(c) for c in chunks]
    hits = []
    for part in parts:
        for code, tc in part:
            w = Word.from_code(code)
            hits.append(SearchHit(w, tc, analyze(w, witness_path) if with_verdicts else None))
    return hits
