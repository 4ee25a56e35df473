"""Literal encoding shared by every stage of the solver.

A literal is a plain ``int``: variable ``v`` maps to ``2*v`` (positive) and
``2*v + 1`` (negative). Variable 0 is reserved for the Boolean constants, so
``TRUE == 0`` and ``FALSE == 1``. Negation is ``l ^ 1`` for every literal,
constants included.
"""

from __future__ import annotations

TRUE = 0
FALSE = 1


def lit(signed: int) -> int:
    """Literal for a DIMACS-style signed variable index (``3`` or ``-3``)."""
    if signed == 0:
        raise ValueError("0 is not a variable index")
    return 2 * signed if signed > 0 else -2 * signed + 1


def neg(l: int) -> int:
    return l ^ 1


def var_of(l: int) -> int:
    """Variable index of ``l``; 0 for the constants."""
    return l >> 1


def is_const(l: int) -> bool:
    return l < 2


def is_negative(l: int) -> bool:
    return bool(l & 1)


def to_dimacs(l: int) -> int:
    if l < 2:
        raise ValueError("constants have no DIMACS form")
    v = l >> 1
    return -v if l & 1 else v


def lit_str(l: int, num_original: int | None = None) -> str:
    """Human-readable form: ``1``, ``0``, ``x3``, ``-b7``."""
    if l == TRUE:
        return "1"
    if l == FALSE:
        return "0"
    v = l >> 1
    name = "b" if num_original is not None and v > num_original else "x"
    return ("-" if l & 1 else "") + f"{name}{v}"
