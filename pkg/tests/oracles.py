"""Independent reference implementations used only by the tests."""

from __future__ import annotations

import random
from collections import deque

import sympy

from equivknot.braid import BraidWord, closure_components
from equivknot.intravergent import IntravergentBraid


def inertia_by_descartes(rows) -> tuple[int, int, int]:
    """
    Inertia from the characteristic polynomial. A symmetric matrix has only
    real eigenvalues, so Descartes' rule of signs counts them exactly.
    """
    n = len(rows)
    if n == 0:
        return 0, 0, 0
    x = sympy.Symbol("x")
    poly = sympy.Matrix(rows).charpoly(x)
    coeffs = poly.all_coeffs()  # leading first
    zero = 0
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
        zero += 1

    def changes(cs):
        signs = [c > 0 for c in cs if c != 0]
        return sum(a != b for a, b in zip(signs, signs[1:]))

    deg = len(coeffs) - 1
    plus = changes(coeffs)
    minus = changes([c * (-1) ** (deg - k) for k, c in enumerate(coeffs)])
    return plus, minus, zero


def two_bridge_signature_sum(p: int, q: int) -> int:
    """Sum of (-1)^floor(iq/p) over 0 < i < p, with q replaced by an odd representative."""
    if q % 2 == 0:
        q -= p
    return sum(1 if (i * q) // p % 2 == 0 else -1 for i in range(1, p))


# --- the Artin action on the free group, a faithful model of the braid group ---


def _reduce(word):
    out = []
    for x in word:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def _inv(word):
    return tuple(-x for x in reversed(word))


def _letter_images(strands: int, a: int):
    i = abs(a)
    images = {j: (j,) for j in range(1, strands + 1)}
    if a > 0:
        images[i] = (i, i + 1, -i)
        images[i + 1] = (i,)
    else:
        images[i] = (i + 1,)
        images[i + 1] = (-(i + 1), i, i + 1)
    return images


def artin_key(w: BraidWord) -> tuple:
    """Images of the free generators under the automorphism of ``w``."""
    phi = {j: (j,) for j in range(1, w.strands + 1)}
    for a in w.letters:
        step = _letter_images(w.strands, a)
        new = {}
        for j, img in step.items():
            out = []
            for x in img:
                out.extend(phi[x] if x > 0 else _inv(phi[-x]))
            new[j] = _reduce(out)
        phi = new
    return tuple(phi[j] for j in range(1, w.strands + 1))


def positive_class(letters: tuple[int, ...]) -> frozenset:
    """All positive words reachable by commutations and braid relations."""
    seen = {letters}
    todo = deque([letters])
    while todo:
        w = todo.popleft()
        for k in range(len(w) - 1):
            a, b = w[k], w[k + 1]
            if abs(a - b) >= 2:
                nxt = w[:k] + (b, a) + w[k + 2 :]
                if nxt not in seen:
                    seen.add(nxt)
                    todo.append(nxt)
            if k + 2 < len(w) and a == w[k + 2] and abs(a - b) == 1:
                nxt = w[:k] + (b, a, b) + w[k + 3 :]
                if nxt not in seen:
                    seen.add(nxt)
                    todo.append(nxt)
    return frozenset(seen)


def random_intravergent(rng: random.Random, strand_choices=(3, 5, 7, 9), max_length: int = 40) -> IntravergentBraid:
    """Symmetric random positive word whose closure is a knot."""
    while True:
        s = rng.choice(strand_choices)
        half = rng.randint(1, max_length // 2)
        left = [rng.randint(1, s - 1) for _ in range(half)]
        w = BraidWord(s, tuple(left + [s - x for x in reversed(left)]))
        if closure_components(w) == 1:
            return IntravergentBraid(w)
