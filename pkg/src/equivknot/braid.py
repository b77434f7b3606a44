"""
Braid words on a fixed number of strands.

A word is stored as a tuple of signed integers: ``+i`` is the Artin generator
sigma_i (a positive half-twist of strands i and i+1) and ``-i`` its inverse.
Positions in words and generator indices are 1-based throughout, and words are
read left to right.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import garside


class BraidError(ValueError):
    """A rewrite was requested at a position where it does not apply."""


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise ValueError(f"strand count must be positive, got {self.strands}")
        letters = tuple(int(x) for x in self.letters)
        for pos, x in enumerate(letters, start=1):
            if x == 0 or abs(x) >= self.strands:
                raise ValueError(
                    f"letter {x} at position {pos} is not a generator of B_{self.strands}"
                )
        object.__setattr__(self, "letters", letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, pos):
        return self.letters[pos]

    def __str__(self) -> str:
        return format_word(self)

    def replace(self, letters: Iterable[int]) -> "BraidWord":
        return BraidWord(self.strands, tuple(letters))

    def is_positive(self) -> bool:
        return all(x > 0 for x in self.letters)

    def inverse(self) -> "BraidWord":
        return self.replace(-x for x in reversed(self.letters))

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if other.strands != self.strands:
            raise ValueError("cannot multiply braids on different strand counts")
        return self.replace(self.letters + other.letters)

    def __pow__(self, k: int) -> "BraidWord":
        if k < 0:
            return self.inverse() ** (-k)
        return self.replace(self.letters * k)


_SEPARATORS = re.compile(r"[,\s]+")


def parse_word(text: str, strands: int) -> BraidWord:
    """Parse ``"1 2 -2 1"`` or ``"1,2,-2,1"`` into a word on ``strands`` strands."""
    tokens = [t for t in _SEPARATORS.split(text.strip()) if t]
    try:
        letters = tuple(int(t) for t in tokens)
    except ValueError as exc:
        raise ValueError(f"malformed braid word {text!r}") from exc
    return BraidWord(strands, letters)


def format_word(w: BraidWord, sep: str = " ") -> str:
    return sep.join(str(x) for x in w.letters)


def exponent_sum(w: BraidWord) -> int:
    return sum(1 if x > 0 else -1 for x in w.letters)


def underlying_permutation(w: BraidWord) -> tuple[int, ...]:
    """
    The permutation of strands induced by ``w``, signs ignored.

    Returned as the final arrangement of strand labels: entry ``p - 1`` is the
    label of the strand that ends in position ``p``. Letters are applied
    first to last, each swapping the entries in positions i and i+1.
    """
    arrangement = list(range(1, w.strands + 1))
    for x in w.letters:
        i = abs(x)
        arrangement[i - 1], arrangement[i] = arrangement[i], arrangement[i - 1]
    return tuple(arrangement)


def cycle_count(perm: Sequence[int]) -> int:
    seen = [False] * len(perm)
    cycles = 0
    for start in range(len(perm)):
        if seen[start]:
            continue
        cycles += 1
        k = start
        while not seen[k]:
            seen[k] = True
            k = perm[k] - 1
    return cycles


def closure_components(w: BraidWord) -> int:
    """Number of components of the closure of ``w`` (1 means a knot)."""
    return cycle_count(underlying_permutation(w))


def _check_pos(w: BraidWord, pos: int, width: int) -> None:
    if not 1 <= pos <= len(w) - width + 1:
        raise BraidError(
            f"position {pos} out of range for a {width}-letter pattern in a word of length {len(w)}"
        )


def can_commute(w: BraidWord, pos: int) -> bool:
    if not 1 <= pos < len(w):
        return False
    return abs(abs(w[pos - 1]) - abs(w[pos])) >= 2


def apply_commutation(w: BraidWord, pos: int) -> BraidWord:
    """Swap the letters at ``pos`` and ``pos + 1``; their indices must differ by at least 2."""
    _check_pos(w, pos, 2)
    if not can_commute(w, pos):
        raise BraidError(
            f"letters {w[pos - 1]}, {w[pos]} at positions {pos}, {pos + 1} do not commute"
        )
    letters = list(w.letters)
    letters[pos - 1], letters[pos] = letters[pos], letters[pos - 1]
    return w.replace(letters)


def can_apply_relation(w: BraidWord, pos: int) -> bool:
    if not 1 <= pos <= len(w) - 2:
        return False
    a, b, c = w.letters[pos - 1 : pos + 2]
    return a == c and abs(abs(a) - abs(b)) == 1 and (a > 0) == (b > 0)


def apply_braid_relation(w: BraidWord, pos: int) -> BraidWord:
    """Rewrite s_i s_j s_i as s_j s_i s_j (|i - j| = 1, equal signs) starting at ``pos``."""
    _check_pos(w, pos, 3)
    if not can_apply_relation(w, pos):
        triple = w.letters[pos - 1 : pos + 2]
        raise BraidError(f"no braid relation pattern at position {pos}: {triple}")
    a, b, _ = w.letters[pos - 1 : pos + 2]
    letters = list(w.letters)
    letters[pos - 1 : pos + 2] = [b, a, b]
    return w.replace(letters)


def free_reduce(w: BraidWord) -> BraidWord:
    out: list[int] = []
    for x in w.letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return w.replace(out)


def canonical_form(w: BraidWord) -> garside.NormalForm:
    """Left normal form of ``w``; equal for two words exactly when they are equal braids."""
    return garside.left_normal_form(w.strands, w.letters)


def braids_equal(w1: BraidWord, w2: BraidWord, full: bool = True) -> bool:
    """
    Decide whether two words represent the same element of the braid group.

    Exponent sum and strand permutation are checked first. With ``full=False``
    only these cheap necessary conditions are tested.
    """
    if w1.strands != w2.strands:
        raise ValueError(f"strand counts differ: {w1.strands} != {w2.strands}")
    if exponent_sum(w1) != exponent_sum(w2):
        return False
    if underlying_permutation(w1) != underlying_permutation(w2):
        return False
    if not full:
        return True
    return canonical_form(w1) == canonical_form(w2)
