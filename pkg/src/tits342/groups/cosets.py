"""Coset tables and HLT coset enumeration with lookahead."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .presentation import Letters, Presentation

DEFAULT_MAX_COSETS = 10**6


class CosetLimitExceeded(RuntimeError):
    """The coset bound was hit; the index may be infinite (this proves nothing)."""


class InconsistentTable(ValueError):
    pass


def col(letter: int) -> int:
    """Column index of a letter: generator i -> 2(i-1), inverse -> 2(i-1)+1."""
    return 2 * (letter - 1) if letter > 0 else 2 * (-letter - 1) + 1


def inv_col(c: int) -> int:
    return c ^ 1


@dataclass(frozen=True)
class CosetTable:
    """Complete coset table; coset 0 is the subgroup itself.

    ``rows[c][col(letter)]`` is the coset c * letter.
    """

    ngens: int
    rows: tuple[tuple[int, ...], ...]

    @property
    def index(self) -> int:
        return len(self.rows)

    def act(self, coset: int, word: Sequence[int]) -> int:
        for a in word:
            coset = self.rows[coset][col(a)]
        return coset

    def permutation(self, gen: int) -> tuple[int, ...]:
        return tuple(r[col(gen)] for r in self.rows)

    def is_valid(self, relators: Sequence[Letters], subgroup: Sequence[Letters] = ()) -> bool:
        n = self.index
        for c in range(n):
            for g in range(self.ngens):
                d = self.rows[c][2 * g]
                if self.rows[d][2 * g + 1] != c:
                    return False
        for r in relators:
            for c in range(n):
                if self.act(c, r) != c:
                    return False
        return all(self.act(0, h) == 0 for h in subgroup)

    def standardized(self, base: int = 0) -> "CosetTable":
        """Renumber cosets breadth-first from ``base``, scanning columns in order."""
        order = [base]
        seen = {base: 0}
        i = 0
        while i < len(order):
            c = order[i]
            for d in self.rows[c]:
                if d not in seen:
                    seen[d] = len(order)
                    order.append(d)
            i += 1
        if len(order) != self.index:
            raise InconsistentTable("coset table is not transitive")
        rows = tuple(tuple(seen[d] for d in self.rows[c]) for c in order)
        return CosetTable(self.ngens, rows)

    def to_json(self) -> dict:
        return {
            "index": self.index,
            "permutations": [list(self.permutation(g + 1)) for g in range(self.ngens)],
        }

    @classmethod
    def from_permutations(cls, perms: Sequence[Sequence[int]]) -> "CosetTable":
        n = len(perms[0])
        rows = []
        invs = []
        for p in perms:
            q = [0] * n
            for i, j in enumerate(p):
                q[j] = i
            invs.append(q)
        for c in range(n):
            row = []
            for p, q in zip(perms, invs):
                row += [p[c], q[c]]
            rows.append(tuple(row))
        return cls(len(perms), tuple(rows))


class _Enumerator:
    def __init__(self, ngens: int, max_cosets: int):
        self.ncols = 2 * ngens
        self.table: list[list[int | None]] = [[None] * self.ncols]
        self.parent = [0]  # union-find forwarding; parent[c] == c iff live
        self.live = 1
        self.max_cosets = max_cosets

    def is_live(self, c: int) -> bool:
        return self.parent[c] == c

    def define(self, c: int, x: int) -> int:
        if self.live >= self.max_cosets:
            raise _Full
        n = len(self.table)
        self.table.append([None] * self.ncols)
        self.parent.append(n)
        self.live += 1
        self.table[c][x] = n
        self.table[n][inv_col(x)] = c
        return n

    def rep(self, c: int) -> int:
        root = c
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[c] != root:
            self.parent[c], c = root, self.parent[c]
        return root

    def _merge(self, a: int, b: int, queue: list[int]) -> None:
        a, b = self.rep(a), self.rep(b)
        if a == b:
            return
        lo, hi = min(a, b), max(a, b)
        self.parent[hi] = lo
        self.live -= 1
        queue.append(hi)

    def coincidence(self, a: int, b: int) -> None:
        queue: list[int] = []
        self._merge(a, b, queue)
        i = 0
        table = self.table
        while i < len(queue):
            g = queue[i]
            i += 1
            for x in range(self.ncols):
                d = table[g][x]
                if d is None:
                    continue
                xi = inv_col(x)
                if table[d][xi] == g:
                    table[d][xi] = None
                mu, nu = self.rep(g), self.rep(d)
                if table[mu][x] is not None:
                    self._merge(nu, table[mu][x], queue)
                elif table[nu][xi] is not None:
                    self._merge(mu, table[nu][xi], queue)
                else:
                    table[mu][x] = nu
                    table[nu][xi] = mu

    def scan(self, c: int, word: Sequence[int], fill: bool) -> None:
        """Scan ``word`` from coset c; with ``fill`` define cosets to close gaps."""
        table = self.table
        f = b = c
        i, j = 0, len(word) - 1
        while True:
            while i <= j and table[f][word[i]] is not None:
                f = table[f][word[i]]
                i += 1
            if i > j:
                if f != c:
                    self.coincidence(f, c)
                return
            while j >= i and table[b][inv_col(word[j])] is not None:
                b = table[b][inv_col(word[j])]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if i == j:
                table[f][word[i]] = b
                table[b][inv_col(word[i])] = f
                return
            if not fill:
                return
            self.define(f, word[i])

    def lookahead(self, relators: Sequence[Sequence[int]]) -> None:
        c = 0
        while c < len(self.table):
            for r in relators:
                if not self.is_live(c):
                    break
                self.scan(c, r, fill=False)
            c += 1

    def compact(self) -> list[list[int]]:
        live = [c for c in range(len(self.table)) if self.is_live(c)]
        renum = {c: i for i, c in enumerate(live)}
        rows = []
        for c in live:
            row = self.table[c]
            if any(d is None for d in row):
                raise InconsistentTable("enumeration finished with an incomplete table")
            rows.append([renum[self.rep(d)] for d in row])
        return rows


class _Full(Exception):
    pass


def _column_words(words: Sequence[Letters]) -> list[list[int]]:
    return [[col(a) for a in w] for w in words]


def todd_coxeter(
    p: Presentation,
    subgroup_gens: Sequence[Letters] = (),
    max_cosets: int = DEFAULT_MAX_COSETS,
) -> CosetTable:
    """Enumerate the cosets of <subgroup_gens> in p (HLT strategy, lookahead on overflow)."""
    rels = _column_words(p.relators)
    # order-independent result: relators are processed in a fixed sorted order
    rels.sort(key=lambda r: (len(r), r))
    gens = _column_words([g for g in subgroup_gens if g])
    e = _Enumerator(p.ngens, max_cosets)

    def attempt(c: int, fn) -> None:
        while e.is_live(c):
            try:
                fn()
                return
            except _Full:
                before = e.live
                e.lookahead(rels)
                if e.live >= before:
                    raise CosetLimitExceeded(
                        f"more than {max_cosets} cosets needed (index may be infinite)"
                    ) from None

    for h in gens:
        attempt(0, lambda h=h: e.scan(0, h, fill=True))
    c = 0
    while c < len(e.table):
        for r in rels:
            if not e.is_live(c):
                break
            attempt(c, lambda r=r: e.scan(c, r, fill=True))
        if e.is_live(c):
            for x in range(e.ncols):
                if e.table[c][x] is None:
                    attempt(c, lambda x=x: e.define(c, x) if e.table[c][x] is None else None)
        c += 1
    table = CosetTable(p.ngens, tuple(tuple(r) for r in e.compact()))
    return table.standardized()


def group_order(p: Presentation, max_cosets: int = DEFAULT_MAX_COSETS) -> int:
    return todd_coxeter(p, (), max_cosets).index


def subgroup_index(p: Presentation, gens: Sequence[Letters], max_cosets: int = DEFAULT_MAX_COSETS) -> int:
    return todd_coxeter(p, gens, max_cosets).index
