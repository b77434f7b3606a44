"""
Garside left normal form in the braid group B_s.

A simple element (positive permutation braid) is stored as a tuple ``pi`` with
``pi[p]`` the final position of the strand that starts at position ``p``
(0-based). Every braid has a unique expression Delta^k A_1 ... A_r with each
A_j simple, A_1 != Delta, A_r != 1 and every adjacent pair left-weighted:
the starting set of A_{j+1} is contained in the finishing set of A_j.
"""

from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple, Sequence

Simple = tuple[int, ...]


class NormalForm(NamedTuple):
    delta_power: int
    factors: tuple[Simple, ...]


def identity(s: int) -> Simple:
    return tuple(range(s))


@lru_cache(maxsize=None)
def delta(s: int) -> Simple:
    return tuple(s - 1 - p for p in range(s))


def _swap(q: int, i: int) -> int:
    # transposition of 0-based positions i-1 and i
    if q == i - 1:
        return i
    if q == i:
        return i - 1
    return q


def generator(s: int, i: int) -> Simple:
    return tuple(_swap(p, i) for p in range(s))


def inverse(pi: Simple) -> Simple:
    out = [0] * len(pi)
    for p, q in enumerate(pi):
        out[q] = p
    return tuple(out)


def starting_set(pi: Simple) -> frozenset[int]:
    """Generators sigma_i that left-divide ``pi``."""
    return frozenset(i for i in range(1, len(pi)) if pi[i - 1] > pi[i])


def finishing_set(pi: Simple) -> frozenset[int]:
    """Generators sigma_i that right-divide ``pi``."""
    return starting_set(inverse(pi))


def tau(pi: Simple) -> Simple:
    """Conjugation by Delta: sigma_i -> sigma_{s-i}."""
    s = len(pi)
    return tuple(s - 1 - pi[s - 1 - p] for p in range(s))


def complement_of_generator(s: int, i: int) -> Simple:
    """The simple element X with X sigma_i = Delta, so that sigma_i^{-1} = Delta^{-1} X."""
    return tuple(_swap(q, i) for q in delta(s))


def _left_weight(a: Simple, b: Simple) -> tuple[Simple, Simple]:
    # move generators from the front of b onto the back of a while a stays simple
    while True:
        movable = starting_set(b) - finishing_set(a)
        if not movable:
            return a, b
        i = min(movable)
        a = tuple(_swap(q, i) for q in a)
        b = tuple(b[_swap(q, i)] for q in range(len(b)))


def _push(nf: list[Simple], f: Simple, e: Simple) -> None:
    """Right-multiply the left-weighted list ``nf`` by the simple ``f``, in place."""
    nf.append(f)
    for j in range(len(nf) - 2, -1, -1):
        a, b = _left_weight(nf[j], nf[j + 1])
        if a == nf[j]:
            break
        nf[j], nf[j + 1] = a, b
    # a factor emptied by left-weighting forces every later factor to be trivial
    while nf and nf[-1] == e:
        nf.pop()


def normalize_factors(s: int, factors: Sequence[Simple]) -> tuple[int, tuple[Simple, ...]]:
    """Left-weight a sequence of simple factors; return (number of leading Deltas, rest)."""
    e, d = identity(s), delta(s)
    nf: list[Simple] = []
    for f in factors:
        if f != e:
            _push(nf, f, e)
    lead = 0
    while lead < len(nf) and nf[lead] == d:
        lead += 1
    return lead, tuple(nf[lead:])


def left_normal_form(s: int, letters: Sequence[int]) -> NormalForm:
    """
    Normal form of the braid word ``letters`` (signed 1-based generators) in B_s.

    Each inverse letter is rewritten as sigma_i^{-1} = Delta^{-1} (Delta sigma_i^{-1})
    and the Delta^{-1} is pushed to the front, conjugating the prefix by Delta.
    """
    e = identity(s)
    shift = 0
    nf: list[Simple] = []
    for x in letters:
        i = abs(x)
        if x > 0:
            _push(nf, generator(s, i), e)
        else:
            nf = [tau(f) for f in nf]
            shift += 1
            _push(nf, complement_of_generator(s, i), e)
    d = delta(s)
    lead = 0
    while lead < len(nf) and nf[lead] == d:
        lead += 1
    return NormalForm(lead - shift, tuple(nf[lead:]))


def is_left_weighted(nf: NormalForm, s: int) -> bool:
    fs = nf.factors
    if fs and (fs[0] == delta(s) or fs[-1] == identity(s)):
        return False
    return all(starting_set(b) <= finishing_set(a) for a, b in zip(fs, fs[1:]))


def simple_to_word(pi: Simple) -> list[int]:
    """A positive word for a simple element (bubble sort on final positions)."""
    word = []
    arrangement = list(inverse(pi))  # arrangement[q] = strand that must end at q
    current = list(range(len(pi)))
    # sort current into arrangement by adjacent swaps of strands that must cross
    target_pos = {strand: q for q, strand in enumerate(arrangement)}
    changed = True
    while changed:
        changed = False
        for q in range(len(current) - 1):
            if target_pos[current[q]] > target_pos[current[q + 1]]:
                current[q], current[q + 1] = current[q + 1], current[q]
                word.append(q + 1)
                changed = True
    return word


def normal_form_to_word(nf: NormalForm, s: int) -> list[int]:
    d = simple_to_word(delta(s))
    if nf.delta_power >= 0:
        word = d * nf.delta_power
    else:
        word = [-x for x in reversed(d)] * (-nf.delta_power)
    for f in nf.factors:
        word.extend(simple_to_word(f))
    return word
