"""Reidemeister-Schreier rewriting and abelianization."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from ..algebra.snf import AbelianGroupStructure, snf
from .cosets import CosetTable, InconsistentTable, col
from .presentation import Letters, Presentation, cyclic_reduce, free_reduce, inverse


@dataclass(frozen=True)
class SchreierData:
    """Presentation of a finite-index subgroup plus the bookkeeping that built it."""

    presentation: Presentation
    # generator name -> the element it stands for, as a word in the parent
    meanings: dict[str, Letters] = field(hash=False)
    raw_generator_count: int
    transversal: tuple[Letters, ...]


def _transversal(t: CosetTable) -> tuple[list[Letters], set[tuple[int, int]]]:
    """Breadth-first Schreier transversal and the set of tree edges (coset, column)."""
    reps: list[Letters | None] = [None] * t.index
    reps[0] = ()
    tree: set[tuple[int, int]] = set()
    queue = [0]
    i = 0
    ncols = 2 * t.ngens
    while i < len(queue):
        c = queue[i]
        i += 1
        for x in range(ncols):
            d = t.rows[c][x]
            if reps[d] is None:
                g = x // 2 + 1
                reps[d] = reps[c] + ((g if x % 2 == 0 else -g),)
                tree.add((c, x))
                tree.add((d, x ^ 1))
                queue.append(d)
    if any(r is None for r in reps):
        raise InconsistentTable("coset table is not transitive")
    return reps, tree  # type: ignore[return-value]


def _is_power_of_letter(r: Letters) -> bool:
    return len(set(r)) == 1


def reidemeister_schreier(
    p: Presentation, t: CosetTable, simplify: bool = True
) -> SchreierData:
    """Presentation of the subgroup with coset table t.

    Schreier generators are the non-tree edges (coset c, generator g),
    named ``s{c}_{g}``.  With ``simplify`` generators are eliminated (a) when
    a relator reduces to a single generator and (b) using the rewrites of the
    power relators g^n of the parent, which each contain a generator once.
    """
    if t.ngens != p.ngens:
        raise InconsistentTable("coset table and presentation have different generators")
    if not t.is_valid(p.relators):
        raise InconsistentTable("coset table does not satisfy the relators")
    reps, tree = _transversal(t)
    gen_of: dict[tuple[int, int], int] = {}
    names: list[str] = []
    meanings: dict[str, Letters] = {}
    for c in range(t.index):
        for g in range(1, p.ngens + 1):
            if (c, col(g)) not in tree:
                gen_of[(c, g)] = len(names) + 1
                name = f"s{c}_{p.generators[g - 1]}"
                names.append(name)
                d = t.rows[c][col(g)]
                meanings[name] = free_reduce(reps[c] + (g,) + inverse(reps[d]))
    raw = len(names)

    def rewrite(c: int, word: Sequence[int]) -> Letters:
        out = []
        for a in word:
            if a > 0:
                s = gen_of.get((c, a))
                if s:
                    out.append(s)
                c = t.rows[c][col(a)]
            else:
                d = t.rows[c][col(a)]
                s = gen_of.get((d, -a))
                if s:
                    out.append(-s)
                c = d
        return free_reduce(out)

    rels: list[Letters] = []
    power_rels: list[Letters] = []
    seen: set[Letters] = set()
    for r in p.relators:
        for c in range(t.index):
            w = cyclic_reduce(rewrite(c, r))
            if not w:
                continue
            key = min(w[i:] + w[:i] for i in range(len(w)))
            if key in seen:
                continue
            seen.add(key)
            (power_rels if _is_power_of_letter(r) else rels).append(w)
    pres_gens = list(names)
    if simplify:
        pres_gens, power_rels, rels = _eliminate(pres_gens, power_rels, rels)
        # renumber
    keep = pres_gens
    index = {n: i + 1 for i, n in enumerate(names)}
    renum = {index[n]: i + 1 for i, n in enumerate(keep)}

    def ren(w: Letters) -> Letters:
        return tuple(renum[a] if a > 0 else -renum[-a] for a in w)

    all_rels = [ren(w) for w in power_rels + rels]
    pres = Presentation(tuple(keep), tuple(all_rels))
    return SchreierData(
        presentation=pres,
        meanings={n: meanings[n] for n in keep},
        raw_generator_count=raw,
        transversal=tuple(reps),
    )


def _substitute(w: Letters, g: int, value: Letters) -> Letters:
    out: list[int] = []
    inv = inverse(value)
    for a in w:
        if a == g:
            out.extend(value)
        elif a == -g:
            out.extend(inv)
        else:
            out.append(a)
    return cyclic_reduce(out)


def _eliminate(
    names: list[str], power_rels: list[Letters], rels: list[Letters]
) -> tuple[list[str], list[Letters], list[Letters]]:
    alive = set(range(1, len(names) + 1))
    power_rels = list(power_rels)
    rels = list(rels)

    def step(pool: list[Letters], only_trivial: bool) -> bool:
        for idx, w in enumerate(pool):
            if only_trivial and len(w) != 1:
                continue
            counts: dict[int, int] = {}
            for a in w:
                counts[abs(a)] = counts.get(abs(a), 0) + 1
            once = sorted(g for g, n in counts.items() if n == 1)
            if not once:
                continue
            g = once[-1]
            pos = next(i for i, a in enumerate(w) if abs(a) == g)
            # w = u g^e v  =>  g = (v u)^-1 if e = 1, else g = v u
            rest = w[pos + 1 :] + w[:pos]
            value = inverse(rest) if w[pos] > 0 else rest
            pool.pop(idx)
            alive.discard(g)
            for lst in (power_rels, rels):
                lst[:] = [x for x in (_substitute(x, g, value) for x in lst) if x]
            return True
        return False

    while step(power_rels, True) or step(rels, True) or step(power_rels, False):
        pass
    kept = [names[i - 1] for i in sorted(alive)]
    return kept, power_rels, rels


def abelianization(p: Presentation) -> AbelianGroupStructure:
    rows = []
    for r in p.relators:
        v = [0] * p.ngens
        for a in r:
            v[abs(a) - 1] += 1 if a > 0 else -1
        rows.append(v)
    return snf(rows, p.ngens)
