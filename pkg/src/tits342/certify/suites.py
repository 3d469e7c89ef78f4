"""Named verification suites; each returns a list of pass/fail checks with evidence."""

from __future__ import annotations

import os
from typing import Callable

from ..algebra import Matrix2, ONE
from ..groups import Presentation, group_order, subgroup_index
from ..words import canonicalize, enumerate_words, parse_word, word_stats
from .analyze import analyze, search
from .endgames import low_index_endgame
from .essential import SuiteCheck, essential_cyclic_suite
from .rules import (
    EXPECTED_M,
    SigmaFormCheck,
    cell_data,
    dual_root_certificate,
    mod12_check,
    repeated_root_gate,
)

K5_SURVIVOR = "xyxyx2y3x2yxy3"
ESSENTIAL_EXAMPLE = "xyxy2xy3"

# test hook: names of constants that can be deliberately corrupted
CORRUPTIONS = ("dual-M",)


def _corrupted_m() -> Matrix2:
    return Matrix2(EXPECTED_M.a + ONE, EXPECTED_M.b, EXPECTED_M.c, EXPECTED_M.d)


def _cells_check(n: int, counts: tuple[int, int, int], euler: int, squares: int) -> SuiteCheck:
    cd = cell_data(n)
    ok = (
        (cd.c0, cd.c1, cd.c2) == counts
        and cd.euler == euler
        and cd.square_cells == squares
        and cd.gate
        and cd.gate_alt
    )
    return SuiteCheck(f"cells for image order {n}", ok, cd.to_json())


def suite_essential_cyclic(**_) -> list[SuiteCheck]:
    return essential_cyclic_suite(parse_word(ESSENTIAL_EXAMPLE))


def suite_double_root_sqrt2(corrupt: str | None = None, **_) -> list[SuiteCheck]:
    m = _corrupted_m() if corrupt == "dual-M" else None
    checks = [SuiteCheck(i.name, i.passed) for i in dual_root_certificate(m)]
    checks.append(_cells_check(24, (24, 48, 26), 2, 6))
    fired = [g.rule for g in repeated_root_gate(SigmaFormCheck(True, 1, 0, 2, 0, 1))]
    checks.append(SuiteCheck("u = (1,0,2,0) fires the √2 gate", fired == ["double-root-sqrt2"], {"fired": fired}))
    return checks


def suite_double_root_golden(**_) -> list[SuiteCheck]:
    checks = [_cells_check(60, (60, 120, 65), 5, 15)]
    fired = [g.rule for g in repeated_root_gate(SigmaFormCheck(True, 1, 0, 0, 2, 1))]
    checks.append(SuiteCheck("u = (1,0,0,2) fires the golden gate", fired == ["double-root-golden"], {"fired": fired}))
    none = [g.rule for g in repeated_root_gate(SigmaFormCheck(True, 1, 0, 1, 1, 1))]
    checks.append(SuiteCheck("u = (1,0,1,1) fires no gate", none == [], {"fired": none}))
    return checks


def suite_mod12(jobs: int = 1, **_) -> list[SuiteCheck]:
    checks = []
    for k in (1, 3, 5, 7):
        for hit in search(k, jobs=jobs, with_verdicts=False):
            st = word_stats(hit.word)
            ok = st.kappa == 0 and abs(k - 2 * hit.tau_check.s) == 1 and mod12_check(st)
            checks.append(SuiteCheck(
                f"survivor {hit.word}: kappa = 0, k - 2s = ±1, mod12 a unit", ok,
                {"k": k, "kappa": st.kappa, "s": hit.tau_check.s, "mod12": st.mod12},
            ))
    return checks


def suite_cells(**_) -> list[SuiteCheck]:
    return [
        _cells_check(12, (12, 24, 13), 1, 3),
        _cells_check(24, (24, 48, 26), 2, 6),
        _cells_check(60, (60, 120, 65), 5, 15),
    ]


def suite_k1(**_) -> list[SuiteCheck]:
    s4 = Presentation(("x", "y"), ((1, 1, 1), (2, 2, 2, 2), (1, 2, 1, 2)))
    first = Presentation(("x", "u"), ((1, 1, 1), (2, 2), (1, 2, 1, 2)))
    order = group_order(s4)
    idx = subgroup_index(first, [(2,)])
    labels = sorted(analyze(w).label for w in enumerate_words(1))
    expected = sorted(["VirtuallySoluble(S4)", "FreeSubgroup(amalgam)"])
    return [
        SuiteCheck("<x,y | x^3, y^4, (xy)^2> has order 24", order == 24, {"order": order}),
        SuiteCheck("<y^2> has index 3 in <x,u | x^3, u^2, (xu)^2>", idx == 3, {"index": idx}),
        SuiteCheck("k = 1 verdicts", labels == expected, {"verdicts": labels}),
    ]


def suite_k5(witness_path: str | os.PathLike | None = None, jobs: int = 1, **_) -> list[SuiteCheck]:
    target = str(canonicalize(parse_word(K5_SURVIVOR)))
    hits = [str(h.word) for h in search(5, jobs=jobs, with_verdicts=False)]
    checks = [SuiteCheck("k = 5 search finds exactly the expected word", hits == [target], {"survivors": hits})]
    res = low_index_endgame(parse_word(target), 4, witness_path)
    ev = res.evidence
    checks.append(SuiteCheck(
        "some index <= 4 subgroup has abelianization of free rank >= 2",
        ev["necessary_condition"],
        {"max_free_rank": ev["max_free_rank"], "classes": ev["classes"]},
    ))
    wit = ev["witness"]
    if wit["status"] == "absent":
        checks.append(SuiteCheck("F_2 witness (not checked)", True, wit))
    else:
        checks.append(SuiteCheck("F_2 witness verifies", wit["status"] == "verified", wit))
    return checks


SUITES: dict[str, Callable[..., list[SuiteCheck]]] = {
    "essential-cyclic": suite_essential_cyclic,
    "double-root-sqrt2": suite_double_root_sqrt2,
    "double-root-golden": suite_double_root_golden,
    "mod12": suite_mod12,
    "cells": suite_cells,
    "k1": suite_k1,
    "k5": suite_k5,
}


def verify_suite(
    name: str,
    witness_path: str | os.PathLike | None = None,
    jobs: int = 1,
    corrupt: str | None = None,
) -> list[SuiteCheck]:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    if corrupt is not None and corrupt not in CORRUPTIONS:
        raise KeyError(f"unknown corruption {corrupt!r}")
    return SUITES[name](witness_path=witness_path, jobs=jobs, corrupt=corrupt)
