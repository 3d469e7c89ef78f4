"""Cyclic words x^a1 y^b1 ... x^ak y^bk in Z_3 * Z_4 and their symmetries.

A syllable (a, b) has a in {1, 2} and b in {1, 2, 3}.  Internally a
syllable is also encoded as the integer 3*(a-1) + (b-1) in 0..5, which
preserves the lexicographic order on (a, b) pairs; canonical forms are
the least elements of an orbit in that order.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterator, Sequence

Syllable = tuple[int, int]
Code = tuple[int, ...]


class WordSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class QuotientError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Word:
    syllables: tuple[Syllable, ...]

    def __post_init__(self):
        if not self.syllables:
            raise ValueError("a word needs at least one syllable")
        for a, b in self.syllables:
            if a not in (1, 2) or b not in (1, 2, 3):
                raise ValueError(f"bad syllable {(a, b)}")

    @property
    def k(self) -> int:
        return len(self.syllables)

    @property
    def alphas(self) -> tuple[int, ...]:
        return tuple(a for a, _ in self.syllables)

    @property
    def betas(self) -> tuple[int, ...]:
        return tuple(b for _, b in self.syllables)

    def code(self) -> Code:
        return tuple(3 * (a - 1) + (b - 1) for a, b in self.syllables)

    @classmethod
    def from_code(cls, code: Sequence[int]) -> "Word":
        return cls(tuple((c // 3 + 1, c % 3 + 1) for c in code))

    @classmethod
    def of(cls, *pairs: Syllable) -> "Word":
        return cls(tuple(tuple(p) for p in pairs))  # type: ignore[misc]

    def letters(self) -> list[tuple[str, int]]:
        """The word as (generator, positive exponent) pairs."""
        out = []
        for a, b in self.syllables:
            out += [("x", a), ("y", b)]
        return out

    def __str__(self) -> str:
        return format_word(self)


_SYLLABLE_RE = re.compile(r"x([12]?)y([123]?)")


def parse_word(text: str) -> Word:
    """Parse e.g. ``"xyx2y3"`` into a Word."""
    s = text.strip()
    if not s:
        raise WordSyntaxError("empty word", 0)
    pos = 0
    syl = []
    while pos < len(s):
        if s[pos] != "x":
            if s[pos] == "y" and pos == 0:
                raise WordSyntaxError("word must start with an x-syllable", pos)
            raise WordSyntaxError(f"expected 'x', found {s[pos]!r}", pos)
        m = _SYLLABLE_RE.match(s, pos)
        if m is None:
            j = pos + 1
            if j < len(s) and s[j] in "12":
                j += 1
            if j < len(s) and s[j].isdigit():
                raise WordSyntaxError(f"bad x exponent {s[j]!r}", j)
            if j >= len(s):
                raise WordSyntaxError("x-syllable must be followed by a y-syllable", j)
            if s[j] == "x":
                raise WordSyntaxError("syllables must alternate x and y", j)
            if s[j] == "y" and j + 1 < len(s) and s[j + 1].isdigit():
                raise WordSyntaxError(f"bad y exponent {s[j + 1]!r}", j + 1)
            raise WordSyntaxError(f"unexpected {s[j]!r}", j)
        a = int(m.group(1) or 1)
        b = int(m.group(2) or 1)
        syl.append((a, b))
        pos = m.end()
        if pos < len(s) and s[pos].isdigit():
            raise WordSyntaxError(f"bad exponent {s[pos]!r}", pos)
        if pos < len(s) and s[pos] == "y":
            raise WordSyntaxError("syllables must alternate x and y", pos)
    return Word(tuple(syl))


def format_word(w: Word) -> str:
    parts = []
    for a, b in w.syllables:
        parts.append("x" if a == 1 else f"x{a}")
        parts.append("y" if b == 1 else f"y{b}")
    return "".join(parts)


# -- symmetries on integer codes ----------------------------------------------

_XFLIP = (3, 4, 5, 0, 1, 2)  # x -> x^2
_YFLIP = (2, 1, 0, 5, 4, 3)  # y -> y^3


def rotate(code: Code, i: int) -> Code:
    return code[i:] + code[:i]


def flip_x(code: Code) -> Code:
    return tuple(_XFLIP[c] for c in code)


def flip_y(code: Code) -> Code:
    return tuple(_YFLIP[c] for c in code)


def invert(code: Code) -> Code:
    """Syllables of w^-1 rotated to start with an x-syllable.

    (3-a1, 4-bk), (3-ak, 4-b(k-1)), ..., (3-a2, 4-b1)
    """
    k = len(code)
    alphas = [c // 3 for c in code]  # a - 1
    betas = [c % 3 for c in code]  # b - 1
    out = []
    for j in range(k):
        a = alphas[(-j) % k]
        b = betas[(-j - 1) % k]
        out.append(3 * (1 - a) + (2 - b))
    return tuple(out)


def _transforms(code: Code) -> list[Code]:
    fx = flip_x(code)
    fy = flip_y(code)
    fxy = flip_y(fx)
    base = [code, fx, fy, fxy]
    return base + [invert(c) for c in base]


def min_rotation(code: Code) -> Code:
    return min(code[i:] + code[:i] for i in range(len(code)))


def canonical_code(code: Code) -> Code:
    return min(min_rotation(c) for c in _transforms(code))


def canonicalize(w: Word) -> Word:
    """Least element of the orbit of w under rotation, inversion and the
    automorphisms x -> x^2, y -> y^3."""
    return Word.from_code(canonical_code(w.code()))


def orbit(w: Word) -> set[Word]:
    code = w.code()
    return {
        Word.from_code(c[i:] + c[:i]) for c in _transforms(code) for i in range(len(code))
    }


def is_proper_power_code(code: Code) -> bool:
    k = len(code)
    for p in range(1, k):
        if k % p == 0 and code == code[p:] + code[:p]:
            return True
    return False


def is_proper_power(w: Word) -> bool:
    return is_proper_power_code(w.code())


# -- enumeration ----------------------------------------------------------------


def _lyndon_words(k: int, alphabet: int = 6) -> Iterator[Code]:
    """Lyndon words of length exactly k, in lexicographic order (Duval)."""
    w = [-1]
    while w:
        w[-1] += 1
        m = len(w)
        if m == k:
            yield tuple(w)
        # extend periodically to length k
        while len(w) < k:
            w.append(w[len(w) - m])
        while w and w[-1] == alphabet - 1:
            w.pop()


def _is_canonical_lyndon(code: Code) -> bool:
    # code is already rotation-minimal
    first = code[0]
    k = len(code)
    for t in _transforms(code)[1:]:
        for i in range(k):
            if t[i] < first:
                return False
            if t[i] == first and t[i:] + t[:i] < code:
                return False
    return True


def enumerate_codes(k: int) -> Iterator[Code]:
    if k < 1:
        raise ValueError("k must be at least 1")
    for code in _lyndon_words(k):
        if _is_canonical_lyndon(code):
            yield code


def enumerate_words(k: int) -> Iterator[Word]:
    """One canonical representative per class of non-proper-power words of
    syllable length k, in increasing order."""
    for code in enumerate_codes(k):
        yield Word.from_code(code)


def all_words(k: int) -> Iterator[Word]:
    """Every word of syllable length k (6^k of them), proper powers included."""
    for code in itertools.product(range(6), repeat=k):
        yield Word.from_code(code)


# -- statistics and the quotient map ------------------------------------------


@dataclass(frozen=True)
class WordStats:
    sum_alpha: int
    sum_beta: int
    kappa: int
    mod12: int

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.sum_alpha, self.sum_beta, self.kappa, self.mod12)


def word_stats(w: Word) -> WordStats:
    sa = sum(w.alphas)
    sb = sum(w.betas)
    return WordStats(sa, sb, w.betas.count(2), (4 * sa + 3 * sb) % 12)


def quotient_word(w: Word) -> tuple[Word, bool]:
    """Image of w in <x, y | x^3, y^2>: every y^3 becomes y.

    Returns the image and whether it is a proper power.
    """
    if 2 in w.betas:
        raise QuotientError(f"{w} has a y^2 syllable; no quotient word")
    wbar = Word(tuple((a, 1) for a in w.alphas))
    return wbar, is_proper_power(wbar)
