"""Low-index subgroups by backtracking over partial coset tables."""

from __future__ import annotations

from typing import Iterator, Sequence

from .cosets import CosetTable, col, inv_col
from .presentation import Letters, Presentation


class SearchLimitExceeded(RuntimeError):
    pass


class _Partial:
    def __init__(self, ncols: int, max_index: int):
        self.ncols = ncols
        self.max_index = max_index
        self.rows: list[list[int]] = [[-1] * ncols]
        self.trail: list[tuple[int, int]] = []

    def set(self, c: int, x: int, d: int) -> bool:
        rows = self.rows
        xi = inv_col(x)
        if rows[c][x] == -1 and rows[d][xi] == -1:
            rows[c][x] = d
            rows[d][xi] = c
            self.trail.append((c, x))
            if c != d or x != xi:
                self.trail.append((d, xi))
            return True
        return rows[c][x] == d and rows[d][xi] == c

    def undo(self, mark: int, n: int) -> None:
        rows = self.rows
        while len(self.trail) > mark:
            c, x = self.trail.pop()
            rows[c][x] = -1
        del rows[n:]

    def scan(self, c: int, word: Sequence[int]) -> bool | None:
        """Return False on conflict, True if a deduction was made, None otherwise."""
        rows = self.rows
        f = c
        i, j = 0, len(word) - 1
        while i <= j:
            nf = rows[f][word[i]]
            if nf == -1:
                break
            f = nf
            i += 1
        if i > j:
            return False if f != c else None
        b = c
        while j >= i:
            nb = rows[b][inv_col(word[j])]
            if nb == -1:
                break
            b = nb
            j -= 1
        if j < i:
            return False if f != b else None
        if i == j:
            x = word[i]
            if rows[f][x] == -1 and rows[b][inv_col(x)] == -1:
                return True if self.set(f, x, b) else False
            return False
        return None

    def close(self, rels: Sequence[Sequence[int]], sub: Sequence[Sequence[int]]) -> bool:
        while True:
            changed = False
            for h in sub:
                r = self.scan(0, h)
                if r is False:
                    return False
                changed |= bool(r)
            for c in range(len(self.rows)):
                for w in rels:
                    r = self.scan(c, w)
                    if r is False:
                        return False
                    changed |= bool(r)
            if not changed:
                return True

    def first_hole(self) -> tuple[int, int] | None:
        for c, row in enumerate(self.rows):
            for x, d in enumerate(row):
                if d == -1:
                    return c, x
        return None


def subgroups_up_to_index(
    p: Presentation,
    max_index: int,
    subgroup_gens: Sequence[Letters] = (),
    limit: int = 10**6,
) -> Iterator[CosetTable]:
    """Every subgroup (containing ``subgroup_gens``) of index <= max_index, as a
    standardized coset table.  ``limit`` bounds the number of search nodes."""
    if max_index < 1:
        raise ValueError("max_index must be at least 1")
    ncols = 2 * p.ngens
    rels = [[col(a) for a in r] for r in p.relators]
    sub = [[col(a) for a in h] for h in subgroup_gens if h]
    state = _Partial(ncols, max_index)
    nodes = 0

    def search() -> Iterator[CosetTable]:
        nonlocal nodes
        nodes += 1
        if nodes > limit:
            raise SearchLimitExceeded(f"low-index search exceeded {limit} nodes")
        hole = state.first_hole()
        if hole is None:
            yield CosetTable(p.ngens, tuple(tuple(r) for r in state.rows))
            return
        c, x = hole
        xi = inv_col(x)
        n = len(state.rows)
        targets = [d for d in range(n) if state.rows[d][xi] == -1]
        if n < max_index:
            targets.append(n)
        for d in targets:
            mark = len(state.trail)
            if d == n:
                state.rows.append([-1] * ncols)
            if state.set(c, x, d) and state.close(rels, sub):
                yield from search()
            state.undo(mark, n)

    if not state.close(rels, sub):
        return
    yield from search()


def _canonical_in_class(t: CosetTable) -> bool:
    return all(t.standardized(b).rows >= t.rows for b in range(1, t.index))


def low_index_subgroups(
    p: Presentation, max_index: int, limit: int = 10**6
) -> list[CosetTable]:
    """One table per conjugacy class of subgroups of index <= max_index.

    Classes are represented by the table that is least over all base points;
    the list is ordered by index, then by table.
    """
    out = [t for t in subgroups_up_to_index(p, max_index, limit=limit) if _canonical_in_class(t)]
    out.sort(key=lambda t: (t.index, t.rows))
    return out
