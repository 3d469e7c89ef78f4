import random

import pytest

from tits342.algebra import ONE, SQRT2, SQRT3, Polynomial, two_cos
from tits342.trace import (
    SIG_32,
    SIG_34,
    SigmaError,
    SignatureMismatch,
    constant_term_check,
    essential_cyclic_z12,
    has_essential_cyclic,
    horowitz_polynomial,
    leading_coefficient_check,
    leading_coefficient_formula,
    numeric_trace,
    sigma_polynomial,
    trace_polynomial,
    trace_polynomial_oracle,
)
from tits342.words import (
    Word,
    enumerate_words,
    flip_x,
    flip_y,
    invert,
    parse_word,
    rotate,
    word_stats,
)

LAM = Polynomial([0, 1], "λ")


def tau(text):
    return trace_polynomial(parse_word(text), SIG_34).tau


def same_up_to_sign(p, q):
    return p == q or p == -q


def canonical(kmax):
    for k in range(1, kmax + 1):
        yield from enumerate_words(k)


def random_words(n, kmax, seed):
    rng = random.Random(seed)
    for _ in range(n):
        k = rng.randint(1, kmax)
        yield Word(tuple((rng.randint(1, 2), rng.randint(1, 3)) for _ in range(k)))


def test_examples():
    assert tau("xy") == LAM
    assert tau("xy2") == SQRT2 * LAM - 1
    assert tau("xy3") == LAM - SQRT2


def test_signature_traces():
    assert SIG_34.trace_x == ONE and SIG_34.trace_y == SQRT2
    assert SIG_32.trace_x == ONE and not SIG_32.trace_y
    assert SIG_34.shift == two_cos(7)
    assert SIG_32.shift == -SQRT3


def test_signature_mismatch():
    with pytest.raises(SignatureMismatch):
        trace_polynomial(parse_word("xy2"), SIG_32)


def test_report_json():
    rep = trace_polynomial(parse_word("xy2"), SIG_34).to_json()
    assert rep["word"] == "xy2" and rep["k"] == 1 and rep["kappa"] == 1 and rep["degree"] == 1
    assert len(rep["coefficients"]) == 2 and all(len(c) == 8 for c in rep["coefficients"])


def test_oracle_on_proper_power():
    w = parse_word("xyxy")
    assert trace_polynomial_oracle(w, SIG_34) == LAM * LAM - 2
    assert horowitz_polynomial(parse_word("xy")) == {(0, 0, 1): 1}


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_degree_and_oracle_exhaustive(k):
    for w in enumerate_words(k):
        t = trace_polynomial(w, SIG_34).tau
        assert t.degree == k
        assert same_up_to_sign(t, trace_polynomial_oracle(w, SIG_34))


def test_oracle_random_words():
    for w in random_words(100, 10, seed=5):
        t = trace_polynomial(w, SIG_34).tau
        assert t.degree == w.k
        assert same_up_to_sign(t, trace_polynomial_oracle(w, SIG_34))


def test_leading_coefficient():
    assert leading_coefficient_check(parse_word("xy"))
    assert leading_coefficient_check(parse_word("xy2"))
    for w in canonical(4):
        assert leading_coefficient_check(w)
        assert leading_coefficient_formula(w) == SQRT2 ** word_stats(w).kappa


def test_constant_term():
    assert trace_polynomial(parse_word("xy"), SIG_34).z_constant == two_cos(7)
    assert trace_polynomial(parse_word("xy3"), SIG_34).z_constant == two_cos(13)
    for w in canonical(4):
        assert constant_term_check(w)


def test_essential_cyclic_examples():
    assert not has_essential_cyclic(parse_word("xy"))
    assert has_essential_cyclic(parse_word("xyxy2xy3"))
    assert not has_essential_cyclic(parse_word("xyxyx2y3x2yxy3"))


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_essential_cyclic_agrees_with_z12(k):
    for w in enumerate_words(k):
        # has_essential_cyclic raises if the root test and the Z_12 count disagree
        assert has_essential_cyclic(w) == essential_cyclic_z12(w)


def test_rotation_and_inversion_invariance():
    for w in canonical(3):
        t = trace_polynomial(w, SIG_34).tau
        code = w.code()
        for i in range(w.k):
            assert trace_polynomial(Word.from_code(rotate(code, i)), SIG_34).tau == t
        assert trace_polynomial(Word.from_code(invert(code)), SIG_34).tau == t


def test_automorphisms_reflect_roots():
    # x -> x^2 or y -> y^3 sends tau(λ) to ±tau(√2 - λ)
    for w in canonical(3):
        reflected = trace_polynomial(w, SIG_34).tau.reflect().shift(-SQRT2)
        for f in (flip_x, flip_y):
            t2 = trace_polynomial(Word.from_code(f(w.code())), SIG_34).tau
            assert same_up_to_sign(t2, reflected)


def test_numeric_shadow():
    rng = random.Random(2)
    for w in random_words(30, 8, seed=9):
        t = trace_polynomial(w, SIG_34).tau
        for _ in range(5):
            x = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
            exact = sum(c.to_complex() * x**i for i, c in enumerate(t.coeffs))
            num = numeric_trace(w, SIG_34, x)
            assert abs(exact - num) <= 1e-9 * max(1.0, abs(num))


def test_sigma_examples():
    assert sigma_polynomial(parse_word("xy")) == Polynomial([0, 1], "μ")
    s = sigma_polynomial(parse_word("xyxyx2y3x2yxy3"))
    assert s == Polynomial([0, 4, 0, -4, 0, 1], "μ")
    with pytest.raises(SigmaError):
        sigma_polynomial(parse_word("xy2"))


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_sigma_parity_and_integrality(k):
    for w in enumerate_words(k):
        if word_stats(w).kappa:
            continue
        try:
            s = sigma_polynomial(w)
        except SigmaError:
            continue  # image word is a proper power
        assert all(isinstance(c, int) for c in s.coeffs)
        assert same_up_to_sign(s.reflect(), s)
        assert s.degree == k
