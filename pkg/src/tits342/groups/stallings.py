"""Stallings foldings over F_2 = <a, b> and epimorphism-onto-F_2 witnesses."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence

from .presentation import Letters, Presentation, free_reduce

F2_NAMES = ("a", "b")


@dataclass(frozen=True)
class StallingsGraph:
    """Folded labelled graph; edges are (source, label in {1, 2}, target)."""

    nvertices: int
    edges: frozenset[tuple[int, int, int]]
    base: int = 0

    def is_folded(self) -> bool:
        out, inc = set(), set()
        for u, l, v in self.edges:
            if (u, l) in out or (v, l) in inc:
                return False
            out.add((u, l))
            inc.add((v, l))
        return True

    @property
    def rank(self) -> int:
        return len(self.edges) - self.nvertices + 1

    def is_rose(self) -> bool:
        """One vertex carrying one a-loop and one b-loop: the subgroup is all of F_2."""
        return self.nvertices == 1 and self.edges == frozenset({(0, 1, 0), (0, 2, 0)})

    def canonical(self) -> tuple:
        """Relabel vertices breadth-first from the base for comparison."""
        adj: dict[int, list[tuple[int, int]]] = {}
        for u, l, v in self.edges:
            adj.setdefault(u, []).append((l, v))
            adj.setdefault(v, []).append((-l, u))
        order = {self.base: 0}
        queue = [self.base]
        for u in queue:
            for l, v in sorted(adj.get(u, [])):
                if v not in order:
                    order[v] = len(order)
                    queue.append(v)
        return tuple(sorted((order[u], l, order[v]) for u, l, v in self.edges))


def _petals(words: Sequence[Letters]) -> tuple[int, list[tuple[int, int, int]]]:
    n = 1
    edges = []
    for w in words:
        w = free_reduce(w)
        if not w:
            continue
        cur = 0
        for i, a in enumerate(w):
            nxt = 0 if i == len(w) - 1 else n
            if nxt:
                n += 1
            if a > 0:
                edges.append((cur, a, nxt))
            else:
                edges.append((nxt, -a, cur))
            cur = nxt
    return n, edges


def fold(words: Sequence[Letters], seed: int | None = None) -> StallingsGraph:
    """Stallings graph of the subgroup generated by ``words``.

    With ``seed`` the folds are performed in a random order; the result is
    the same graph up to relabelling.
    """
    for w in words:
        for a in w:
            if abs(a) not in (1, 2):
                raise ValueError(f"letter {a} is not in F_2")
    n, edges = _petals(words)
    parent = list(range(n))
    rng = random.Random(seed) if seed is not None else None

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    edge_set = set(edges)
    while True:
        cur = {(find(u), l, find(v)) for u, l, v in edge_set}
        edge_set = cur
        seen_out: dict[tuple[int, int], int] = {}
        seen_in: dict[tuple[int, int], int] = {}
        folds = []
        for u, l, v in sorted(cur):
            if (u, l) in seen_out and seen_out[(u, l)] != v:
                folds.append((seen_out[(u, l)], v))
            else:
                seen_out[(u, l)] = v
            if (v, l) in seen_in and seen_in[(v, l)] != u:
                folds.append((seen_in[(v, l)], u))
            else:
                seen_in[(v, l)] = u
        if not folds:
            break
        if rng is not None:
            rng.shuffle(folds)
            folds = folds[:1]
        else:
            folds = folds[:1]
        x, y = folds[0]
        x, y = find(x), find(y)
        if x != y:
            parent[max(x, y)] = min(x, y)
    verts = sorted({find(0)} | {u for u, _, _ in edge_set} | {v for _, _, v in edge_set})
    ren = {v: i for i, v in enumerate(verts)}
    # base vertex is the representative of 0
    base = ren[find(0)]
    graph = StallingsGraph(
        len(verts), frozenset((ren[u], l, ren[v]) for u, l, v in edge_set), base
    )
    return graph


def f2_witness_check(p: Presentation, images: Mapping[str, Letters]) -> bool:
    """Do ``images`` define an epimorphism p -> F_2?

    True iff every relator maps to the identity and the images generate F_2.
    """
    if set(images) != set(p.generators):
        raise ValueError("images must be given for exactly the generators of p")
    img = [free_reduce(images[g]) for g in p.generators]
    for r in p.relators:
        w: list[int] = []
        for a in r:
            x = img[abs(a) - 1]
            w.extend(x if a > 0 else tuple(-c for c in reversed(x)))
        if free_reduce(w):
            return False
    return fold(img).is_rose()


def reduced_words(max_length: int) -> Iterator[Letters]:
    """Reduced words in F_2 by length, then lexicographically in a, A, b, B."""
    letters = (1, -1, 2, -2)
    yield ()
    for n in range(1, max_length + 1):
        for w in itertools.product(letters, repeat=n):
            if all(w[i] != -w[i + 1] for i in range(n - 1)):
                yield w


def f2_witness_search(
    p: Presentation, length_bound: int, max_nodes: int = 2 * 10**6
) -> dict[str, Letters] | None:
    """First epimorphism p -> F_2 with image words of length <= length_bound.

    Deterministic and bounded; ``None`` is not a proof that none exists.
    """
    if length_bound < 1:
        raise ValueError("length_bound must be at least 1")
    cands = list(reduced_words(length_bound))
    g = p.ngens
    # relators become checkable once their highest generator is assigned
    by_last: dict[int, list[Letters]] = {}
    for r in p.relators:
        by_last.setdefault(max(abs(a) for a in r), []).append(r)
    img: list[Letters] = [()] * g
    nodes = 0

    def ok(r: Letters) -> bool:
        w: list[int] = []
        for a in r:
            x = img[abs(a) - 1]
            w.extend(x if a > 0 else tuple(-c for c in reversed(x)))
        return not free_reduce(w)

    def go(i: int) -> dict[str, Letters] | None:
        nonlocal nodes
        if i == g:
            if fold(img).is_rose():
                return {name: img[j] for j, name in enumerate(p.generators)}
            return None
        for c in cands:
            nodes += 1
            if nodes > max_nodes:
                return None
            img[i] = c
            if all(ok(r) for r in by_last.get(i + 1, ())):
                found = go(i + 1)
                if found is not None:
                    return found
        img[i] = ()
        return None

    return go(0)
