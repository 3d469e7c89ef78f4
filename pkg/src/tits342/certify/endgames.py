"""Finite group-theoretic endgames: the two k = 1 words and low-index checks
for longer survivors, with optional F_2 epimorphism witnesses."""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from ..groups import (
    CosetTable,
    Presentation,
    abelianization,
    f2_witness_check,
    f2_witness_search,
    group_order,
    low_index_subgroups,
    reidemeister_schreier,
    subgroup_index,
    triangle_presentation,
)
from ..words import Word, canonicalize, parse_word

WITNESS_ENV = "TITS342_WITNESS_PATH"
_F2_LETTERS = {"a": 1, "A": -1, "b": 2, "B": -2}


@dataclass
class EndgameResult:
    outcome: str  # "VirtuallySoluble", "FreeSubgroup" or "WitnessRequired"
    rule: str
    resolved: bool
    evidence: dict = field(default_factory=dict)


# -- k = 1 ----------------------------------------------------------------------------


def endgame_k1(w: Word) -> EndgameResult:
    c = str(canonicalize(w))
    if c == "xy":
        p = triangle_presentation(parse_word("xy"))
        order = group_order(p)
        ab = abelianization(p)
        ok = order == 24 and ab.torsion == (2,) and ab.free_rank == 0
        return EndgameResult(
            "VirtuallySoluble", "S4", ok,
            {"presentation": str(p), "order": order, "abelianization": ab.to_json()},
        )
    if c == "xy2":
        # x^3 = y^4 = (xy^2)^2 = 1 is the amalgam of <x, u | x^3, u^2, (xu)^2> (u = y^2)
        # and <y | y^4> over <u> = <y^2>
        first = Presentation(("x", "u"), ((1, 1, 1), (2, 2), (1, 2, 1, 2)))
        second = Presentation(("y",), ((1, 1, 1, 1),))
        i1 = subgroup_index(first, [(2,)])
        i2 = subgroup_index(second, [(1, 1)])
        # an amalgam A *_C B contains F_2 unless both indices are at most 2
        ok = i1 == 3 and i2 == 2
        return EndgameResult(
            "FreeSubgroup", "amalgam", ok,
            {"first_factor": str(first), "second_factor": str(second),
             "index_in_first": i1, "index_in_second": i2},
        )
    raise ValueError(f"{w} is not a word with k = 1")


# -- witness files ------------------------------------------------------------------


@dataclass(frozen=True)
class Witness:
    word: Word
    permutations: tuple[tuple[int, ...], ...]
    images: dict[str, tuple[int, ...]]

    @property
    def index(self) -> int:
        return len(self.permutations[0])

    def to_json(self) -> dict:
        return {
            "word": str(self.word),
            "index": self.index,
            "permutations": [list(p) for p in self.permutations],
            "images": {g: format_f2(v) for g, v in self.images.items()},
        }


def parse_f2(text: str) -> tuple[int, ...]:
    try:
        return tuple(_F2_LETTERS[ch] for ch in text)
    except KeyError as e:
        raise ValueError(f"bad F_2 letter {e.args[0]!r}") from None


def format_f2(word) -> str:
    inv = {v: k for k, v in _F2_LETTERS.items()}
    return "".join(inv[a] for a in word)


def default_witness_path() -> Path | None:
    env = os.environ.get(WITNESS_ENV)
    if env:
        return Path(env)
    ref = resources.files("tits342") / "data" / "k5_witness.json"
    return Path(str(ref)) if ref.is_file() else None


def load_witness(path: str | os.PathLike) -> Witness:
    data = json.loads(Path(path).read_text())
    perms = tuple(tuple(int(i) for i in p) for p in data["permutations"])
    if data.get("index", len(perms[0])) != len(perms[0]):
        raise ValueError("witness index does not match its permutations")
    return Witness(
        parse_word(data["word"]),
        perms,
        {g: parse_f2(v) for g, v in data["images"].items()},
    )


def check_witness(witness: Witness) -> tuple[bool, str]:
    """Rebuild the subgroup presentation from the stored table and test the images."""
    p = triangle_presentation(witness.word)
    table = CosetTable.from_permutations(witness.permutations)
    if not table.is_valid(p.relators):
        return False, "stored permutations do not satisfy the relators"
    data = reidemeister_schreier(p, table)
    if set(witness.images) != set(data.presentation.generators):
        return False, "image keys do not match the Schreier generators"
    if not f2_witness_check(data.presentation, witness.images):
        return False, "images do not define an epimorphism onto F_2"
    return True, "epimorphism onto F_2 verified"


def find_witness(w: Word, max_index: int, length_bound: int = 2) -> Witness | None:
    """First (index, class) in low-index order whose subgroup has a bounded F_2 witness."""
    p = triangle_presentation(w)
    for t in low_index_subgroups(p, max_index):
        data = reidemeister_schreier(p, t)
        if abelianization(data.presentation).free_rank < 2:
            continue
        images = f2_witness_search(data.presentation, length_bound)
        if images is not None:
            perms = tuple(t.permutation(g) for g in (1, 2))
            return Witness(w, perms, images)
    return None


# -- low-index endgame ---------------------------------------------------------------


def low_index_endgame(
    w: Word, max_index: int = 4, witness_path: str | os.PathLike | None = None
) -> EndgameResult:
    """Necessary condition: some subgroup of index <= max_index has abelianization
    of free rank >= 2.  A witness file for this word strengthens it to a proof."""
    p = triangle_presentation(w)
    classes = []
    for t in low_index_subgroups(p, max_index):
        ab = abelianization(reidemeister_schreier(p, t).presentation)
        classes.append({"index": t.index, "abelianization": ab.to_json()})
    best = max((c["abelianization"]["free_rank"] for c in classes), default=0)
    necessary = best >= 2
    evidence: dict = {
        "max_index": max_index,
        "classes": classes,
        "max_free_rank": best,
        "necessary_condition": necessary,
    }
    path = witness_path if witness_path is not None else default_witness_path()
    verified = False
    if path is None or not Path(path).is_file():
        evidence["witness"] = {"status": "absent", "note": "no witness file; necessary condition only"}
    else:
        wit = load_witness(path)
        if canonicalize(wit.word) != canonicalize(w):
            evidence["witness"] = {"status": "absent", "note": f"witness file is for {wit.word}"}
        else:
            verified, note = check_witness(wit)
            evidence["witness"] = {
                "status": "verified" if verified else "rejected",
                "note": note,
                "index": wit.index,
            }
    return EndgameResult("WitnessRequired", "low-index", necessary or verified, evidence)
