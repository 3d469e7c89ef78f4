"""Checks behind the free-subgroup argument for words with an essential
representation onto Z_12."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..algebra import in_row_lattice, snf
from ..groups import (
    CosetTable,
    abelianization,
    free_product_normal_form,
    inverse,
    reidemeister_schreier,
    triangle_presentation,
)
from ..trace import has_essential_cyclic
from ..words import Word, word_stats

X, Y = 1, 2
Xi, Yi = -1, -2


def _a(j: int) -> tuple[int, ...]:
    """a_1..a_3 = y^j x y^-j x^-1 and a_4..a_6 = x y^j x y^-j x^-2."""
    if j <= 3:
        return (Y,) * j + (X,) + (Yi,) * j + (Xi,)
    j -= 3
    return (X,) + (Y,) * j + (X,) + (Yi,) * j + (Xi, Xi)


GENERATORS = {i: _a(i) for i in range(1, 7)}

# y^2 a_i y^2 rewritten in the a's: list of (index, exponent)
CONJUGATION_TABLE = {
    1: ((3, 1), (2, -1)),
    2: ((2, -1),),
    3: ((1, 1), (2, -1)),
    4: ((2, 1), (6, 1), (5, -1), (2, -1)),
    5: ((2, 1), (5, -1), (2, -1)),
    6: ((2, 1), (4, 1), (5, -1), (2, -1)),
}


def _expand(terms) -> tuple[int, ...]:
    out: list[int] = []
    for i, e in terms:
        out.extend(GENERATORS[i] if e > 0 else inverse(GENERATORS[i]))
    return tuple(out)


def _abelianize(terms) -> list[int]:
    v = [0] * 6
    for i, e in terms:
        v[i - 1] += e
    return v


@dataclass
class SuiteCheck:
    name: str
    passed: bool
    evidence: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "evidence": self.evidence}


class PreconditionError(ValueError):
    pass


def z12_images(w: Word) -> tuple[int, int] | None:
    """Images (x, y) in Z_12 of orders 3 and 4 sending w to 6, if any."""
    st = word_stats(w)
    for a in (4, 8):
        for b in (3, 9):
            if (a * st.sum_alpha + b * st.sum_beta) % 12 == 6:
                return a, b
    return None


def kernel_table(a: int, b: int) -> CosetTable:
    return CosetTable.from_permutations(
        [[(c + a) % 12 for c in range(12)], [(c + b) % 12 for c in range(12)]]
    )


def essential_cyclic_suite(w: Word) -> list[SuiteCheck]:
    if not has_essential_cyclic(w):
        raise PreconditionError(f"{w} has no essential cyclic representation")
    checks = []
    y2 = (Y, Y)
    for i, rhs in CONJUGATION_TABLE.items():
        lhs = y2 + GENERATORS[i] + y2
        ok = free_product_normal_form(lhs) == free_product_normal_form(_expand(rhs))
        checks.append(SuiteCheck(f"y^2 a{i} y^2 identity", ok))

    # a_i (y^2 a_i y^2) lies in the subgroup S; abelianized these are the rows below
    rows = []
    for i, rhs in CONJUGATION_TABLE.items():
        v = _abelianize(rhs)
        v[i - 1] += 1
        if any(v) and v not in rows:
            rows.append(v)
    kl = snf(rows, 6)
    checks.append(SuiteCheck("K/L free rank 4", kl.free_rank == 4 and not kl.torsion,
                             {"rows": rows, "structure": kl.to_json()}))
    rows_n = rows + [[0, 0, 0, 0, 0, 1]]
    kn = snf(rows_n, 6)
    checks.append(SuiteCheck("K/N free rank 3", kn.free_rank == 3 and not kn.torsion,
                             {"structure": kn.to_json()}))
    # conjugation by y^2 sends a_i to the class of its table entry; antipodal means
    # a_i + phi(a_i) vanishes in K/N
    antipodal = all(
        in_row_lattice(rows_n, [x + (1 if j == i - 1 else 0) for j, x in enumerate(_abelianize(rhs))])
        for i, rhs in CONJUGATION_TABLE.items()
    )
    checks.append(SuiteCheck("antipodal action on K/N", antipodal))

    a, b = z12_images(w)
    p = triangle_presentation(w)
    t = kernel_table(a, b)
    members = all(t.act(0, g) == 0 for g in GENERATORS.values())
    checks.append(SuiteCheck("a1..a6 lie in the kernel of the Z_12 map", members, {"images": [a, b]}))
    data = reidemeister_schreier(p, t)
    ab = abelianization(data.presentation)
    checks.append(
        SuiteCheck(
            "kernel has 6 Schreier generators after pruning",
            data.presentation.ngens == 6,
            {
                "raw_generators": data.raw_generator_count,
                "generators": list(data.presentation.generators),
                "relators": len(data.presentation.relators),
                "abelianization": ab.to_json(),
            },
        )
    )
    return checks
