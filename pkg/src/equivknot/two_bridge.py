"""
Arithmetic of 2-bridge knots given by fractions p/q.

Fractions are kept exactly as computed, signs included, so that values such as
-357/-50 survive; :func:`normalize` brings them to 0 < q < p. Two fractions with
the same p give the same unoriented knot when q' = q^{+-1} (mod p), or its
mirror when q' = -q^{+-1}.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from math import gcd, isqrt
from typing import Optional, Sequence


@dataclass(frozen=True)
class TwoBridgeFraction:
    p: int
    q: int
    mirrored: bool = field(default=False, compare=False)

    def __post_init__(self):
        p, q = int(self.p), int(self.q)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        if p % 2 == 0:
            raise ValueError(f"{p}/{q} has even numerator: a 2-component link, not a knot")
        if gcd(p, q) != 1:
            raise ValueError(f"{p}/{q} is not reduced")

    def __str__(self) -> str:
        return format_fraction(self)

    @property
    def is_unknot(self) -> bool:
        return abs(self.p) == 1

    def is_normalized(self) -> bool:
        return (self.p == 1 and self.q == 0) or 0 < self.q < self.p


_FRACTION = re.compile(r"^\s*(-?\d+)\s*(?:/\s*(-?\d+)\s*)?$")


def parse_fraction(text: str) -> TwoBridgeFraction:
    """Parse ``"P/Q"`` (either part may carry a leading minus) or a bare integer ``"P"``."""
    match = _FRACTION.match(text)
    if not match:
        raise ValueError(f"malformed fraction {text!r}; expected P/Q")
    p, q = match.group(1), match.group(2)
    return TwoBridgeFraction(int(p), int(q) if q is not None else 1)


def format_fraction(f: TwoBridgeFraction) -> str:
    return f"{f.p}/{f.q}"


def continued_fraction_terms(coeffs: Sequence[int]) -> tuple[int, int]:
    """
    Numerator and denominator of [a_1, ..., a_k] = a_1 - 1/(a_2 - 1/(... - 1/a_k)).

    Evaluated from the right with x = a - 1/(P/Q) = (aP - Q)/P, which keeps the
    terms coprime and their signs as produced.
    """
    coeffs = [int(a) for a in coeffs]
    if not coeffs:
        raise ValueError("continued fraction needs at least one coefficient")
    num, den = coeffs[-1], 1
    for k in range(len(coeffs) - 2, -1, -1):
        if num == 0:
            raise ZeroDivisionError(f"suffix {coeffs[k + 1:]} evaluates to 0")
        num, den = coeffs[k] * num - den, num
    return num, den


def eval_continued_fraction(coeffs: Sequence[int]) -> TwoBridgeFraction:
    return TwoBridgeFraction(*continued_fraction_terms(coeffs))


def normalize(f: TwoBridgeFraction) -> TwoBridgeFraction:
    """
    Representative with p > 0 and 0 < q < p (1/0 for the unknot); the knot is unchanged.

    ``mirrored`` is set when the raw fraction was negative, that is when the input
    is the mirror image of the knot of |p|/|q|.
    """
    p, q = f.p, f.q
    mirrored = p * q < 0
    if p < 0:
        p, q = -p, -q
    if p == 1:
        return TwoBridgeFraction(1, 0, mirrored)
    return TwoBridgeFraction(p, q % p, mirrored)


def _inverse(q: int, p: int) -> int:
    return pow(q, -1, p)


def same_knot(f1: TwoBridgeFraction, f2: TwoBridgeFraction, chirality_sensitive: bool = False) -> bool:
    a, b = normalize(f1), normalize(f2)
    if a.p != b.p:
        return False
    if a.p == 1:
        return True
    p = a.p
    allowed = {a.q % p, _inverse(a.q, p)}
    if not chirality_sensitive:
        allowed |= {-x % p for x in allowed}
    return b.q in allowed


def is_torus_fraction(f: TwoBridgeFraction) -> Optional[int]:
    """k such that f gives T(2, 2k+1) up to mirror image, or None."""
    g = normalize(f)
    if g.p == 1:
        return 0
    if g.q in (1, g.p - 1):
        return (g.p - 1) // 2
    return None


def jm_fraction(m: int) -> TwoBridgeFraction:
    """7(14m+19) / 2(7m+10), the fraction of [6, -1, 2m+1, -1, 6]."""
    return TwoBridgeFraction(7 * (14 * m + 19), 2 * (7 * m + 10))


# ---------------------------------------------------------------------------
# unknotting by one 4-move

SIGN_CHOICES = ("p+1", "p-1", "-p+1", "-p-1")
CONGRUENCE_CHOICES = ("q", "-q", "q^-1", "-q^-1")


def _signed_target(choice: str, p: int) -> int:
    return {"p+1": p + 1, "p-1": p - 1, "-p+1": -p + 1, "-p-1": -p - 1}[choice]


def _congruence_value(choice: str, p: int, q: int) -> int:
    inv = _inverse(q, p)
    return {"q": q, "-q": -q, "q^-1": inv, "-q^-1": -inv}[choice] % p


@dataclass(frozen=True)
class U4Witness:
    """Integers r, s with gcd 1, 4rs = +-p+-1 and +-q^{+-1} = 4s^2 (mod p)."""

    p: int
    q: int
    r: int
    s: int
    sign_choice: str
    congruence_choice: str

    def verify(self) -> bool:
        p, q = self.p, self.q
        return (
            gcd(self.r, self.s) == 1
            and 4 * self.r * self.s == _signed_target(self.sign_choice, p)
            and _congruence_value(self.congruence_choice, p, q) == (4 * self.s * self.s) % p
        )

    def to_dict(self) -> dict:
        return {
            "p": self.p, "q": self.q, "r": self.r, "s": self.s,
            "sign_choice": self.sign_choice, "congruence_choice": self.congruence_choice,
        }


@dataclass(frozen=True)
class U4Candidate:
    """One factorization examined by the search, with the outcome of each test."""

    sign_choice: str
    r: int
    s: int
    coprime: bool
    matched: Optional[str]


def _factor_pairs(n: int):
    """(r, s) with r * s = n, ordered by |r| and then positive before negative."""
    size = abs(n)
    small = [d for d in range(1, isqrt(size) + 1) if size % d == 0]
    divisors = sorted(set(small) | {size // d for d in small})
    for d in divisors:
        for r in (d, -d):
            yield r, n // r


def u4_search(f: TwoBridgeFraction) -> tuple[Optional[U4Witness], list[U4Candidate]]:
    """
    Exhaustive search for a witness that the 2-bridge knot f is unknotted by one
    4-move. Returns the first witness in the fixed search order and the list of
    candidates examined up to that point.
    """
    g = normalize(f)
    if g.p == 1:
        raise ValueError("already unknot; u4 = 0")
    p, q = g.p, g.q
    trace: list[U4Candidate] = []
    for choice in SIGN_CHOICES:
        n = _signed_target(choice, p)
        if n % 4:
            continue
        for r, s in _factor_pairs(n // 4):
            coprime = gcd(r, s) == 1
            matched = None
            if coprime:
                target = (4 * s * s) % p
                matched = next(
                    (c for c in CONGRUENCE_CHOICES if _congruence_value(c, p, q) == target), None
                )
            trace.append(U4Candidate(choice, r, s, coprime, matched))
            if matched is not None:
                return U4Witness(p, q, r, s, choice, matched), trace
    return None, trace


def u4_equals_one(f: TwoBridgeFraction) -> Optional[U4Witness]:
    return u4_search(f)[0]
