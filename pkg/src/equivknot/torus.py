"""Intravergent braids for torus knots and their equivariant unknotting number."""

from __future__ import annotations

from math import gcd

from .braid import BraidWord
from .intravergent import IntravergentBraid


def normalize_torus_parameters(p: int, q: int) -> tuple[int, int]:
    """
    Order (p, q) so that the first entry, the strand count, is odd.

    When both are odd the smaller one is used, which gives the shorter word.
    """
    p, q = int(p), int(q)
    if p < 2 or q < 2:
        raise ValueError(f"torus parameters must be at least 2, got ({p}, {q})")
    if gcd(p, q) != 1:
        raise ValueError(f"T({p},{q}) is not a knot: gcd = {gcd(p, q)}")
    if p % 2 == 0 and q % 2 == 0:
        raise ValueError(f"T({p},{q}): one parameter must be odd")
    if p % 2 == 0 or (q % 2 == 1 and q < p):
        p, q = q, p
    return p, q


def torus_braid(p: int, q: int) -> IntravergentBraid:
    """(sigma_1 sigma_2 ... sigma_{p-1})^q on p strands, with p the odd parameter."""
    p, q = normalize_torus_parameters(p, q)
    return IntravergentBraid(BraidWord(p, tuple(range(1, p)) * q))


def torus_equivariant_unknotting_number(p: int, q: int) -> int:
    p, q = normalize_torus_parameters(p, q)
    return (p - 1) * (q - 1) // 2
