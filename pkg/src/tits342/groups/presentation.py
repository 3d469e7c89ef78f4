"""Finitely presented groups: words, free reduction and a small text format.

Letters are nonzero integers: generator i (1-based) is ``i`` and its inverse
is ``-i``.  The text format is::

    gens: x, y; rels: x^3, y^4, (x*y)^2

with ``^`` for (possibly negative) powers, ``*`` for concatenation and
parentheses for grouping.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Sequence

Letters = tuple[int, ...]


class PresentationSyntaxError(ValueError):
    pass


def free_reduce(word: Sequence[int]) -> Letters:
    out: list[int] = []
    for a in word:
        if out and out[-1] == -a:
            out.pop()
        else:
            out.append(a)
    return tuple(out)


def cyclic_reduce(word: Sequence[int]) -> Letters:
    w = list(free_reduce(word))
    i, j = 0, len(w) - 1
    while i < j and w[i] == -w[j]:
        i += 1
        j -= 1
    return tuple(w[i : j + 1])


def inverse(word: Sequence[int]) -> Letters:
    return tuple(-a for a in reversed(word))


def power(word: Sequence[int], n: int) -> Letters:
    if n < 0:
        return tuple(inverse(word)) * (-n)
    return tuple(word) * n


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relators: tuple[Letters, ...] = field(default_factory=tuple)

    def __post_init__(self):
        n = len(self.generators)
        rels = []
        for r in self.relators:
            for a in r:
                if a == 0 or abs(a) > n:
                    raise ValueError(f"letter {a} out of range in relator {r}")
            r = cyclic_reduce(r)
            if r:
                rels.append(r)
        object.__setattr__(self, "relators", tuple(rels))

    @property
    def ngens(self) -> int:
        return len(self.generators)

    def word(self, text: str) -> Letters:
        return parse_word_expr(text, self.generators)

    def format_word(self, word: Sequence[int]) -> str:
        return format_letters(word, self.generators)

    def __str__(self) -> str:
        rels = ", ".join(self.format_word(r) for r in self.relators)
        return f"gens: {', '.join(self.generators)}; rels: {rels}"

    def to_json(self) -> dict:
        return {
            "generators": list(self.generators),
            "relators": [list(r) for r in self.relators],
            "text": str(self),
        }


def format_letters(word: Sequence[int], names: Sequence[str]) -> str:
    if not word:
        return "1"
    parts = []
    i = 0
    w = list(word)
    while i < len(w):
        j = i
        while j < len(w) and w[j] == w[i]:
            j += 1
        name = names[abs(w[i]) - 1]
        e = (j - i) * (1 if w[i] > 0 else -1)
        parts.append(name if e == 1 else f"{name}^{e}")
        i = j
    return "*".join(parts)


_TOKEN = re.compile(r"\s*(?:(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<int>-?\d+)|(?P<op>[()*^]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    toks = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            raise PresentationSyntaxError(f"unexpected {text[pos]!r} at position {pos}")
        kind = m.lastgroup
        toks.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    return toks


def parse_word_expr(text: str, generators: Sequence[str]) -> Letters:
    index = {g: i + 1 for i, g in enumerate(generators)}
    toks = _tokenize(text)
    pos = 0

    def peek():
        return toks[pos] if pos < len(toks) else None

    def expr() -> list[int]:
        nonlocal pos
        out = factor()
        while True:
            t = peek()
            if t is None or t[1] == ")":
                return out
            if t[1] == "*":
                pos += 1
            out = out + factor()

    def factor() -> list[int]:
        nonlocal pos
        t = peek()
        if t is None:
            raise PresentationSyntaxError("unexpected end of word")
        if t[0] == "name":
            if t[1] not in index:
                raise PresentationSyntaxError(f"unknown generator {t[1]!r} at position {t[2]}")
            pos += 1
            base = [index[t[1]]]
        elif t[1] == "(":
            pos += 1
            base = expr()
            t = peek()
            if t is None or t[1] != ")":
                raise PresentationSyntaxError("missing ')'")
            pos += 1
        elif t[0] == "int" and t[1] == "1":
            pos += 1
            base = []
        else:
            raise PresentationSyntaxError(f"unexpected {t[1]!r} at position {t[2]}")
        t = peek()
        if t is not None and t[1] == "^":
            pos += 1
            t = peek()
            if t is None or t[0] != "int":
                raise PresentationSyntaxError("'^' must be followed by an integer")
            pos += 1
            base = list(power(base, int(t[1])))
        return base

    w = expr()
    if pos != len(toks):
        raise PresentationSyntaxError(f"unexpected {toks[pos][1]!r} at position {toks[pos][2]}")
    return free_reduce(w)


def parse_presentation(text: str) -> Presentation:
    """Parse ``gens: x, y; rels: x^3, y^4, (x*y)^2``."""
    m = re.match(r"^\s*gens\s*:(?P<gens>[^;]*)(?:;\s*rels\s*:(?P<rels>.*))?$", text.strip(), re.S)
    if m is None:
        raise PresentationSyntaxError("expected 'gens: ...; rels: ...'")
    gens = tuple(g.strip() for g in m.group("gens").split(",") if g.strip())
    if not gens:
        raise PresentationSyntaxError("no generators")
    if len(set(gens)) != len(gens):
        raise PresentationSyntaxError("repeated generator name")
    rels_text = (m.group("rels") or "").strip()
    rels = []
    if rels_text:
        depth = 0
        cur = ""
        for ch in rels_text:
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            if ch == "," and depth == 0:
                rels.append(cur)
                cur = ""
            else:
                cur += ch
        rels.append(cur)
    return Presentation(gens, tuple(parse_word_expr(r, gens) for r in rels if r.strip()))


def triangle_presentation(word, orders: tuple[int, int] = (3, 4), r: int = 2) -> Presentation:
    """<x, y | x^p, y^q, w^r> for a syllable word ``w``."""
    p, q = orders
    w: list[int] = []
    for a, b in word.syllables:
        w += [1] * a + [2] * b
    return Presentation(("x", "y"), ((1,) * p, (2,) * q, tuple(w) * r))
