"""Acceptance criteria, one test per criterion.

Each test prints a single line "criterion N: PASS|FAIL  <detail>".  Run with
``pytest tests/test_acceptance.py -v`` or ``python3 tests/test_acceptance.py``.
"""

import json
import os
import random
import time

import pytest

from tits342.algebra import SQRT2, SQRT3, two_cos
from tits342.certify import (
    analyze,
    cell_data,
    check_sigma_form,
    check_witness,
    default_witness_path,
    dual_root_certificate,
    essential_cyclic_suite,
    load_witness,
    low_index_endgame,
    mod12_check,
    search,
)
from tits342.groups import parse_presentation, group_order, subgroup_index
from tits342.report import reproduce_all, strip_timing
from tits342.trace import (
    SIG_32,
    SIG_34,
    SigmaError,
    constant_term_check,
    leading_coefficient_check,
    sigma_polynomial,
    trace_polynomial,
    trace_polynomial_oracle,
)
from tits342.words import Word, canonicalize, enumerate_words, parse_word, quotient_word, word_stats

K5 = "xyxyx2y3x2yxy3"
JOBS = max(1, min(4, os.cpu_count() or 1))


def canonical_words(kmax):
    for k in range(1, kmax + 1):
        yield from enumerate_words(k)


def report(capsys, n, passed, detail):
    line = f"criterion {n}: {'PASS' if passed else 'FAIL'}  {detail}"
    if capsys is None:
        print(line)
    else:
        with capsys.disabled():
            print("\n" + line)
    return passed


# -- criteria ---------------------------------------------------------------------


def criterion_1():
    parts = {}
    t0 = time.perf_counter()
    k7 = [str(h.word) for h in search(7, jobs=1, with_verdicts=False)]
    t7 = time.perf_counter() - t0
    k3 = [str(h.word) for h in search(3, with_verdicts=False)]
    k5 = [str(h.word) for h in search(5, with_verdicts=False)]
    parts["k=3 empty"] = (k3 == [], k3)
    parts["k=7 empty"] = (k7 == [], k7)
    parts["k=7 under 300s single-threaded"] = (t7 < 300, round(t7, 1))
    target = str(canonicalize(parse_word(K5)))
    parts["k=5 exactly the expected word"] = (k5 == [target], k5)
    verdicts = sorted(analyze(w).label for w in enumerate_words(1))
    parts["k=1 verdicts"] = (verdicts == ["FreeSubgroup(amalgam)", "VirtuallySoluble(S4)"], verdicts)
    ok = all(p for p, _ in parts.values())
    detail = "; ".join(f"{k}: {'ok' if p else 'NO'} {v}" for k, (p, v) in parts.items())
    return ok, detail


def criterion_2():
    bad = []
    n = 0
    for w in canonical_words(4):
        n += 1
        t, o = trace_polynomial(w, SIG_34).tau, trace_polynomial_oracle(w, SIG_34)
        if t != o and t != -o:
            bad.append(str(w))
    rng = random.Random(2024)
    for _ in range(100):
        k = rng.randint(1, 10)
        w = Word(tuple((rng.randint(1, 2), rng.randint(1, 3)) for _ in range(k)))
        t, o = trace_polynomial(w, SIG_34).tau, trace_polynomial_oracle(w, SIG_34)
        if t != o and t != -o:
            bad.append(str(w))
    return not bad, f"{n} canonical words k<=4 and 100 random words k<=10; mismatches {bad}"


def criterion_3():
    bad = [str(w) for w in canonical_words(4) if not leading_coefficient_check(w)]
    return not bad, f"leading coefficient ±(√2)^kappa for all canonical k<=4; failures {bad}"


def criterion_4():
    bad = [str(w) for w in canonical_words(4) if not constant_term_check(w)]
    return not bad, f"tr w(A,B)|z=0 = 2cos((4Σα+3Σβ)π/12) for all canonical k<=4; failures {bad}"


def criterion_5():
    bad, seen = [], []
    for k in (1, 3, 5, 7, 9):
        for h in search(k, jobs=JOBS, with_verdicts=False):
            st = word_stats(h.word)
            seen.append(f"{h.word}(s={h.tau_check.s})")
            if not (st.kappa == 0 and abs(k - 2 * h.tau_check.s) == 1 and mod12_check(st)):
                bad.append(str(h.word))
    return not bad, f"survivors {seen}; violations {bad}"


def criterion_6():
    checks = essential_cyclic_suite(parse_word("xyxy2xy3"))
    failed = [c.name for c in checks if not c.passed]
    return not failed, f"{len(checks)} checks (six identities, K/L rank 4, K/N rank 3, antipodal, kernel); failed {failed}"


def criterion_7():
    items = {i.name: i.passed for i in dual_root_certificate()}
    need = ["rho((xy)^4) = -I + εM with M as expected", "M != 0", "tr rho(x)rho(y) = √2 + ε"]
    ok = all(items[n] for n in need) and all(items.values())
    return ok, f"{sum(items.values())}/{len(items)} certificate items hold"


def criterion_8():
    a, b = cell_data(24), cell_data(60)
    ok = (
        (a.c0, a.c1, a.c2, a.euler, a.square_cells) == (24, 48, 26, 2, 6)
        and (b.c0, b.c1, b.c2, b.euler, b.square_cells) == (60, 120, 65, 5, 15)
        and a.gate and b.gate and a.gate_alt and b.gate_alt
    )
    return ok, f"24: {a.to_json()}; 60: {b.to_json()}"


def criterion_9():
    bad, n = [], 0
    for w in canonical_words(5):
        if word_stats(w).kappa:
            continue
        try:
            s = sigma_polynomial(w)
        except SigmaError:
            continue
        n += 1
        if not all(isinstance(c, int) for c in s.coeffs) or (s.reflect() != s and s.reflect() != -s):
            bad.append(str(w))
    w = parse_word(K5)
    sc = check_sigma_form(sigma_polynomial(w), 5)
    wbar, _ = quotient_word(w)
    zc = trace_polynomial(wbar, SIG_32).z_constant
    st = word_stats(w)
    k5_ok = sc.matches and sc.u1 == 1 and sc.u2 == 0 and zc in (SQRT3, -SQRT3) and zc == two_cos(4 * st.sum_alpha + 30)
    ok = not bad and k5_ok
    return ok, f"{n} sigma polynomials symmetric with integer coefficients (bad {bad}); k=5 survivor u={sc.u}, z-constant ±√3: {zc in (SQRT3, -SQRT3)}"


def criterion_10():
    parts = {}
    s4 = parse_presentation("gens: x, y; rels: x^3, y^4, (x*y)^2")
    parts["order 24"] = (group_order(s4) == 24, group_order(s4))
    factor = parse_presentation("gens: x, u; rels: x^3, u^2, (x*u)^2")
    idx = subgroup_index(factor, [(2,)])
    parts["index 3"] = (idx == 3, idx)
    target = canonicalize(parse_word(K5))
    res = low_index_endgame(target, 4)
    ranks = sorted({(c["index"], c["abelianization"]["free_rank"]) for c in res.evidence["classes"]})
    parts["index-4 subgroup with free rank >= 2"] = (
        any(i == 4 and r >= 2 for i, r in ranks), f"(index, rank) seen {ranks}"
    )
    path = default_witness_path()
    if path is not None:
        wit = load_witness(path)
        ok, note = check_witness(wit)
        parts["witness file verifies"] = (ok, f"index {wit.index}: {note}")
    ok = all(p for p, _ in parts.values())
    detail = "; ".join(f"{k}: {'ok' if p else 'NO'} {v}" for k, (p, v) in parts.items())
    return ok, detail


def criterion_11():
    a = strip_timing(reproduce_all(jobs=1).to_json())
    b = strip_timing(reproduce_all(jobs=1).to_json())
    c = strip_timing(reproduce_all(jobs=max(2, JOBS)).to_json())
    sa, sb, sc = (json.dumps(x, sort_keys=True, ensure_ascii=False) for x in (a, b, c))
    return sa == sb == sc, f"three reproduce runs (jobs 1, 1, {max(2, JOBS)}) byte-identical modulo timing; report size {len(sa)} bytes"


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
            criterion_7, criterion_8, criterion_9, criterion_10, criterion_11]


@pytest.mark.parametrize("n", range(1, 12))
def test_criterion(n, capsys):
    ok, detail = CRITERIA[n - 1]()
    report(capsys, n, ok, detail)
    assert ok, detail


if __name__ == "__main__":
    results = []
    for i, fn in enumerate(CRITERIA, 1):
        ok, detail = fn()
        results.append(report(None, i, ok, detail))
    raise SystemExit(0 if all(results) else 1)
