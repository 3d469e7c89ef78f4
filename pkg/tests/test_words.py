import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tits342.groups import free_product_normal_form
from tits342.words import (
    QuotientError,
    Word,
    WordSyntaxError,
    all_words,
    canonicalize,
    enumerate_words,
    flip_x,
    flip_y,
    format_word,
    invert,
    is_proper_power,
    orbit,
    parse_word,
    quotient_word,
    rotate,
    word_stats,
)

words = st.lists(st.tuples(st.integers(1, 2), st.integers(1, 3)), min_size=1, max_size=8).map(
    lambda s: Word(tuple(s))
)


def test_parse_examples():
    assert parse_word("xyxyx2y3x2yxy3").syllables == ((1, 1), (1, 1), (2, 3), (2, 1), (1, 3))
    assert parse_word("xy").syllables == ((1, 1),)


@pytest.mark.parametrize("bad", ["yx", "", "xx", "xyy", "x3y", "xy4", "xyx", "Xy", "xy z"])
def test_parse_errors(bad):
    with pytest.raises(WordSyntaxError):
        parse_word(bad)


def test_parse_error_position():
    with pytest.raises(WordSyntaxError) as e:
        parse_word("xyxq")
    assert e.value.position == 3


@given(words)
def test_format_roundtrip(w):
    assert parse_word(format_word(w)) == w


def test_canonicalize_examples():
    assert str(canonicalize(parse_word("xy3"))) == "xy"
    assert str(canonicalize(parse_word("x2y"))) == "xy"


def _letters(w: Word) -> list[int]:
    out = []
    for a, b in w.syllables:
        out += [1] * a + [2] * b
    return out


def test_inversion_matches_free_product():
    # the inverted syllables spell a cyclic conjugate of w^-1 in Z_3 * Z_4
    for w in all_words(3):
        inv = Word.from_code(invert(w.code()))
        target = [-a for a in reversed(_letters(w))]
        conjugates = {
            free_product_normal_form(target[i:] + target[:i]) for i in range(len(target))
        }
        assert free_product_normal_form(_letters(inv)) in conjugates


def _brute_classes(k: int) -> set[Word]:
    seen: set[Word] = set()
    classes = set()
    for w in all_words(k):
        if w in seen or is_proper_power(w):
            continue
        # closure under the four generators
        todo, orb = [w.code()], set()
        while todo:
            c = todo.pop()
            if c in orb:
                continue
            orb.add(c)
            todo += [rotate(c, 1), flip_x(c), flip_y(c), invert(c)]
        ws = {Word.from_code(c) for c in orb}
        seen |= ws
        classes.add(min(ws))
    return classes


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_enumeration_matches_brute_force(k):
    emitted = list(enumerate_words(k))
    assert len(emitted) == len(set(emitted))
    assert emitted == sorted(emitted)
    assert set(emitted) == _brute_classes(k)


def test_class_counts():
    assert [len(list(enumerate_words(k))) for k in range(1, 6)] == [2, 6, 14, 63, 230]
    assert [str(w) for w in enumerate_words(1)] == ["xy", "xy2"]


def test_k2_emitted_words_are_canonical():
    for w in enumerate_words(2):
        assert canonicalize(w) == w and not is_proper_power(w)


def test_k5_contains_survivor():
    assert canonicalize(parse_word("xyxyx2y3x2yxy3")) in set(enumerate_words(5))


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_canonicalize_constant_on_orbits(k):
    for w in all_words(k):
        c = canonicalize(w)
        assert canonicalize(c) == c
        assert all(canonicalize(v) == c for v in orbit(w))
        assert c == min(orbit(w))


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_kappa_invariant_on_orbits(k):
    for w in all_words(k):
        kappa = word_stats(w).kappa
        assert all(word_stats(v).kappa == kappa for v in orbit(w))


def test_proper_powers():
    assert is_proper_power(parse_word("xyxy"))
    assert not is_proper_power(parse_word("xyxy2"))
    assert is_proper_power(parse_word("xyx2yxyx2y"))


def test_word_stats():
    assert word_stats(parse_word("xyxyx2y3x2yxy3")).as_tuple() == (7, 9, 0, 7)
    assert word_stats(parse_word("xy")).as_tuple() == (1, 1, 0, 7)
    assert word_stats(parse_word("xy2")).as_tuple() == (1, 2, 1, 10)


def test_quotient_word():
    wbar, power = quotient_word(parse_word("xyxyx2y3x2yxy3"))
    assert str(wbar) == "xyxyx2yx2yxy" and not power
    assert str(quotient_word(parse_word("xy3"))[0]) == "xy"
    with pytest.raises(QuotientError):
        quotient_word(parse_word("xy2"))


def test_bad_syllables_rejected():
    with pytest.raises(ValueError):
        Word(((3, 1),))
    with pytest.raises(ValueError):
        Word(())


def test_all_words_count():
    assert sum(1 for _ in all_words(3)) == 216
    assert len(set(itertools.islice(all_words(4), 100))) == 100
