"""Smith normal form of integer matrices and the resulting abelian groups."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


@dataclass(frozen=True)
class AbelianGroupStructure:
    """Z_{d1} + ... + Z_{dr} + Z^free_rank with d1 | d2 | ... and every di > 1."""

    torsion: tuple[int, ...]
    free_rank: int

    def is_finite(self) -> bool:
        return self.free_rank == 0

    @property
    def order(self) -> int | None:
        if self.free_rank:
            return None
        out = 1
        for d in self.torsion:
            out *= d
        return out

    def __str__(self) -> str:
        parts = [f"Z_{d}" for d in self.torsion]
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        return " + ".join(parts) if parts else "0"

    def to_json(self) -> dict:
        return {"torsion": list(self.torsion), "free_rank": self.free_rank}


def smith_diagonal(rows: Sequence[Sequence[int]], ncols: int | None = None) -> list[int]:
    """Nonzero invariant factors (with divisibility chain) of an integer matrix."""
    m = [list(map(int, r)) for r in rows]
    if ncols is None:
        ncols = len(m[0]) if m else 0
    for r in m:
        if len(r) != ncols:
            raise ValueError("ragged integer matrix")
    m = [r for r in m if any(r)]
    diag: list[int] = []
    t = 0
    nrows = len(m)
    while t < nrows and t < ncols:
        # pivot: smallest nonzero absolute value in the remaining block
        best = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                v = m[i][j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        m[t], m[i] = m[i], m[t]
        for r in m:
            r[t], r[j] = r[j], r[t]
        while True:
            p = m[t][t]
            done = True
            for i in range(t + 1, nrows):
                if m[i][t]:
                    q = m[i][t] // p
                    if q:
                        mt, mi = m[t], m[i]
                        for j in range(t, ncols):
                            mi[j] -= q * mt[j]
                    if m[i][t]:
                        done = False
            for j in range(t + 1, ncols):
                if m[t][j]:
                    q = m[t][j] // p
                    if q:
                        for r in m:
                            r[j] -= q * r[t]
                    if m[t][j]:
                        done = False
            if done:
                # divisibility: p must divide the whole remaining block
                bad = None
                for i in range(t + 1, nrows):
                    for j in range(t + 1, ncols):
                        if m[i][j] % p:
                            bad = i
                            break
                    if bad is not None:
                        break
                if bad is None:
                    break
                for j in range(t, ncols):
                    m[t][j] += m[bad][j]
                continue
            # re-pivot on the smallest nonzero entry of row t / column t
            cand = [(abs(m[i][t]), i, t) for i in range(t, nrows) if m[i][t]]
            cand += [(abs(m[t][j]), t, j) for j in range(t, ncols) if m[t][j]]
            _, i, j = min(cand)
            m[t], m[i] = m[i], m[t]
            for r in m:
                r[t], r[j] = r[j], r[t]
        diag.append(abs(m[t][t]))
        t += 1
    return diag


def snf(rows: Sequence[Sequence[int]], ncols: int | None = None) -> AbelianGroupStructure:
    """Cokernel Z^ncols / (row lattice) as an abelian group."""
    if ncols is None:
        if not rows:
            raise ValueError("ncols is required for an empty relation matrix")
        ncols = len(rows[0])
    diag = smith_diagonal(rows, ncols)
    return AbelianGroupStructure(
        torsion=tuple(d for d in diag if d != 1), free_rank=ncols - len(diag)
    )


def in_row_lattice(rows: Sequence[Sequence[int]], v: Sequence[int]) -> bool:
    """Whether v lies in the Z-span of rows."""
    n = len(v)
    base = smith_diagonal(rows, n)
    ext = smith_diagonal(list(rows) + [list(v)], n)
    if len(ext) != len(base):
        return False
    prod_b = prod_e = 1
    for x in base:
        prod_b *= x
    for x in ext:
        prod_e *= x
    return prod_b == prod_e
