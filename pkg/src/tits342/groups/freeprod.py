"""Syllable normal forms in the free product Z_p * Z_q = <x, y | x^p, y^q>."""

from __future__ import annotations

from typing import Sequence

NormalForm = tuple[tuple[str, int], ...]

_NAMES = {1: "x", 2: "y"}


def free_product_normal_form(word: Sequence[int], orders: tuple[int, int] = (3, 4)) -> NormalForm:
    """Reduce a word in letters {1, -1, 2, -2} (x, x^-1, y, y^-1).

    The result alternates generators, with each exponent in 1..order-1.
    """
    stack: list[list] = []
    for a in word:
        g = abs(a)
        if g not in _NAMES:
            raise ValueError(f"letter {a} is not x or y")
        e = 1 if a > 0 else -1
        n = orders[g - 1]
        if stack and stack[-1][0] == g:
            stack[-1][1] = (stack[-1][1] + e) % n
            if stack[-1][1] == 0:
                stack.pop()
        else:
            stack.append([g, e % n])
    return tuple((_NAMES[g], e) for g, e in stack)


def format_normal_form(nf: NormalForm) -> str:
    if not nf:
        return "1"
    return "".join(g if e == 1 else f"{g}^{e}" for g, e in nf)


def same_element(u: Sequence[int], v: Sequence[int], orders: tuple[int, int] = (3, 4)) -> bool:
    return free_product_normal_form(u, orders) == free_product_normal_form(v, orders)
