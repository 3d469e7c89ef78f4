import json
import random

import pytest

from tits342.algebra import SQRT2, Polynomial
from tits342.certify import (
    SUITES,
    InternalContradiction,
    PreconditionError,
    SigmaFormCheck,
    Witness,
    analyze,
    cell_data,
    check_sigma_form,
    check_tau_form,
    check_witness,
    default_witness_path,
    dual_root_certificate,
    endgame_k1,
    essential_cyclic_suite,
    load_witness,
    low_index_endgame,
    mod12_check,
    repeated_root_gate,
    search,
    verify_suite,
)
from tits342.trace import SIG_34, TraceReport, trace_polynomial
from tits342.words import (
    Word,
    canonicalize,
    enumerate_words,
    flip_x,
    flip_y,
    invert,
    parse_word,
    rotate,
    word_stats,
)

LAM = Polynomial([0, 1], "λ")
MU = Polynomial([0, 1], "μ")
K5 = "xyxyx2y3x2yxy3"


def synthetic_report(tau: Polynomial, k: int) -> TraceReport:
    w = Word(((1, 1),) * k)  # kappa 0
    return TraceReport(w, SIG_34, tau, tau)


# -- form checks ----------------------------------------------------------------------


def test_tau_form_examples():
    c = check_tau_form(synthetic_report(LAM * (LAM - SQRT2) ** 2, 3))
    assert c.matches and c.s == 1 and c.sign == 1 and c.kappa_used == 0
    assert not check_tau_form(trace_polynomial(parse_word("xy2"))).matches
    c5 = check_tau_form(trace_polynomial(parse_word(K5)))
    assert c5.matches and abs(5 - 2 * c5.s) == 1


def test_tau_form_sign_and_constant():
    assert check_tau_form(synthetic_report(-(LAM**2) * (LAM - SQRT2), 3)).sign == -1
    assert not check_tau_form(synthetic_report(2 * LAM**3, 3)).matches


@pytest.mark.parametrize("k", [1, 2, 3])
def test_tau_form_constant_on_classes(k):
    for w in enumerate_words(k):
        ref = check_tau_form(trace_polynomial(w)).matches
        code = w.code()
        for f in (lambda c: rotate(c, 1), flip_x, flip_y, invert):
            assert check_tau_form(trace_polynomial(Word.from_code(f(code)))).matches == ref


def test_sigma_form_examples():
    assert check_sigma_form(MU * (MU**2 - 2), 3).u == (1, 0, 1, 0)
    c = check_sigma_form(MU * (MU**4 - 3 * MU**2 + 1), 5)
    assert c.matches and c.u == (1, 0, 0, 1)
    c3 = check_sigma_form(MU**3, 3)
    assert c3.matches and c3.u == (3, 0, 0, 0)
    assert not check_sigma_form(MU**2 + 1, 2).matches
    assert not check_sigma_form(MU * (MU**2 - 2), 5).matches  # degree identity fails
    assert check_sigma_form(-MU, 1).sign == -1


def test_mod12():
    assert mod12_check(word_stats(parse_word(K5)))
    assert mod12_check(word_stats(parse_word("xy")))
    assert not mod12_check(word_stats(parse_word("xy2")))


# -- certificates, gates, cells ------------------------------------------------------


def test_dual_root_certificate_passes():
    assert all(i.passed for i in dual_root_certificate())


def test_cell_data_examples():
    c = cell_data(24)
    assert (c.c0, c.c1, c.c2, c.euler, c.square_cells) == (24, 48, 26, 2, 6) and c.gate
    c = cell_data(60)
    assert (c.c0, c.c1, c.c2, c.euler, c.square_cells) == (60, 120, 65, 5, 15) and c.gate
    c = cell_data(12)
    assert (c.c0, c.c1, c.c2, c.euler, c.square_cells) == (12, 24, 13, 1, 3) and c.gate
    assert c.gate_alt and c.square_cells_alt == 6
    with pytest.raises(ValueError):
        cell_data(30)


def test_gates():
    assert [g.rule for g in repeated_root_gate(SigmaFormCheck(True, 1, 0, 2, 0, 1))] == ["double-root-sqrt2"]
    assert [g.rule for g in repeated_root_gate(SigmaFormCheck(True, 1, 0, 0, 2, 1))] == ["double-root-golden"]
    assert repeated_root_gate(SigmaFormCheck(True, 1, 0, 1, 1, 1)) == []
    with pytest.raises(ValueError):
        repeated_root_gate(SigmaFormCheck(False, 1, 0, 0, 0, 0))


def test_essential_cyclic_suite():
    checks = essential_cyclic_suite(parse_word("xyxy2xy3"))
    assert len(checks) == 11 and all(c.passed for c in checks)
    with pytest.raises(PreconditionError):
        essential_cyclic_suite(parse_word("xy"))


# -- classifier ---------------------------------------------------------------------


def test_analyze_examples():
    assert analyze(parse_word("xy")).label == "VirtuallySoluble(S4)"
    assert analyze(parse_word("xy2")).label == "FreeSubgroup(amalgam)"
    assert analyze(parse_word("xyxy2")).label == "EvenK-Delegated"
    assert analyze(parse_word("xyxy2xy3")).label == "FreeSubgroup(essential-cyclic)"
    with pytest.raises(ValueError):
        analyze(parse_word("xyxy"))


def test_analyze_k5_survivor_trail():
    v = analyze(parse_word(K5))
    rules = [s.rule for s in v.trail]
    assert rules == ["no-essential-cyclic", "tau(-√2) != 0", "tau-form", "survivor-structure", "sigma-form", "double-root-sqrt2"]
    assert v.label == "FreeSubgroup(double-root-sqrt2)"
    json.dumps(v.to_json())


def test_analyze_k3_survivor_reaches_endgame():
    v = analyze(parse_word("xyxyx2y3"))
    assert v.outcome == "WitnessRequired" and v.resolved is False
    assert v.trail[-1].evidence["max_free_rank"] < 2


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_analyze_never_contradicts_exhaustive(k):
    for w in enumerate_words(k):
        v = analyze(w)
        assert v.outcome in ("FreeSubgroup", "VirtuallySoluble", "WitnessRequired", "EvenK-Delegated")


@pytest.mark.parametrize("k", [7, 9])
def test_analyze_never_contradicts_sampled(k):
    rng = random.Random(k)
    for _ in range(40):
        w = canonicalize(Word(tuple((rng.randint(1, 2), rng.randint(1, 3)) for _ in range(k))))
        try:
            analyze(w)
        except InternalContradiction:  # pragma: no cover
            pytest.fail(f"internal contradiction for {w}")
        except ValueError:
            pass  # proper power


def test_k1_endgame():
    assert endgame_k1(parse_word("xy")).evidence["order"] == 24
    r = endgame_k1(parse_word("x2y3"))
    assert r.rule == "S4"
    r = endgame_k1(parse_word("xy2"))
    assert (r.evidence["index_in_first"], r.evidence["index_in_second"]) == (3, 2)
    with pytest.raises(ValueError):
        endgame_k1(parse_word("xyxy2"))


# -- search ---------------------------------------------------------------------------


def test_search_matches_exact_mode():
    for k in (1, 3, 5):
        fast = [str(h.word) for h in search(k, with_verdicts=False)]
        slow = [str(h.word) for h in search(k, exact=True, with_verdicts=False)]
        assert fast == slow


def test_search_results():
    assert [str(h.word) for h in search(1, with_verdicts=False)] == ["xy"]
    assert [str(h.word) for h in search(5, with_verdicts=False)] == [str(canonicalize(parse_word(K5)))]
    assert search(7, with_verdicts=False) == []


def test_search_jobs_independent():
    a = [h.to_json() for h in search(7, jobs=1)] + [h.to_json() for h in search(5, jobs=1)]
    b = [h.to_json() for h in search(7, jobs=3)] + [h.to_json() for h in search(5, jobs=3)]
    assert a == b


def test_search_rejects_even():
    with pytest.raises(ValueError):
        search(4)


# -- witnesses and suites -------------------------------------------------------------


def test_packaged_witness_verifies():
    path = default_witness_path()
    assert path is not None
    wit = load_witness(path)
    assert canonicalize(wit.word) == canonicalize(parse_word(K5))
    ok, note = check_witness(wit)
    assert ok, note


def test_tampered_witness_rejected(tmp_path):
    wit = load_witness(default_witness_path())
    images = dict(wit.images)
    key = next(k for k, v in images.items() if v)
    images[key] = images[key] + images[key]
    bad = Witness(wit.word, wit.permutations, images)
    assert not check_witness(bad)[0]
    p = tmp_path / "w.json"
    p.write_text(json.dumps(bad.to_json()))
    res = low_index_endgame(parse_word(K5), 2, p)
    assert res.evidence["witness"]["status"] == "rejected"


def test_missing_witness_downgrades(tmp_path, monkeypatch):
    monkeypatch.setenv("TITS342_WITNESS_PATH", str(tmp_path / "missing.json"))
    res = low_index_endgame(parse_word(K5), 2)
    assert res.evidence["witness"]["status"] == "absent"
    assert "necessary condition" in res.evidence["witness"]["note"]


@pytest.mark.parametrize("name", [n for n in SUITES if n != "k5"])
def test_suites_pass(name):
    checks = verify_suite(name)
    assert checks and all(c.passed for c in checks), [c.name for c in checks if not c.passed]


def test_corrupted_constant_is_caught():
    failed = [c.name for c in verify_suite("double-root-sqrt2", corrupt="dual-M") if not c.passed]
    assert failed == ["rho((xy)^4) = -I + εM with M as expected"]
    with pytest.raises(KeyError):
        verify_suite("double-root-sqrt2", corrupt="nonsense")
    with pytest.raises(KeyError):
        verify_suite("nonsense")
