"""
Exact inertia of symmetric integer matrices, and signatures of the knots used
in the bounds.

The inertia is found by symmetric (congruence) elimination in integers. A
nonzero diagonal pivot a splits off a 1x1 block and leaves a times the Schur
complement; when the whole diagonal vanishes, a 2x2 block [[0, b], [b, 0]] of
inertia (1, 1) is split off instead. Scaling by a or b only swaps the positive
and negative counts when the scale is negative, so no fractions are needed.
"""

from __future__ import annotations

from functools import reduce
from math import gcd
from typing import NamedTuple, Sequence

from .knots import ConnectedSum, Descriptor, JmQuotient, Rational, TorusKnot, Unknot
from .two_bridge import is_torus_fraction

Matrix = tuple[tuple[int, ...], ...]


class Inertia(NamedTuple):
    n_plus: int
    n_minus: int
    n_zero: int

    @property
    def signature(self) -> int:
        return self.n_plus - self.n_minus


def as_symmetric_matrix(rows: Sequence[Sequence[int]]) -> Matrix:
    """Validate and freeze a square symmetric integer matrix."""
    m = tuple(tuple(int(x) for x in row) for row in rows)
    n = len(m)
    for i, row in enumerate(m):
        if len(row) != n:
            raise ValueError(f"row {i} has length {len(row)}, expected {n}")
    for i in range(n):
        for j in range(i + 1, n):
            if m[i][j] != m[j][i]:
                raise ValueError(f"matrix is not symmetric: entry ({i},{j}) = {m[i][j]} != {m[j][i]}")
    return m


def _primitive(rows: list[list[int]]) -> list[list[int]]:
    g = reduce(gcd, (x for row in rows for x in row), 0)
    if g > 1:
        rows = [[x // g for x in row] for row in rows]
    return rows


def matrix_signature(rows: Sequence[Sequence[int]]) -> Inertia:
    a = [list(row) for row in as_symmetric_matrix(rows)]
    plus = minus = 0
    while a:
        n = len(a)
        k = next((i for i in range(n) if a[i][i] != 0), None)
        if k is not None:
            pivot = a[k][k]
            rest = [i for i in range(n) if i != k]
            a = [[pivot * a[i][j] - a[i][k] * a[k][j] for j in rest] for i in rest]
            if pivot > 0:
                plus += 1
            else:
                minus += 1
                a = [[-x for x in row] for row in a]
        else:
            pair = next(((i, j) for i in range(n) for j in range(i + 1, n) if a[i][j] != 0), None)
            if pair is None:
                break  # the remaining block is zero
            i0, j0 = pair
            b = a[i0][j0]
            plus += 1
            minus += 1
            rest = [i for i in range(n) if i not in pair]
            a = [
                [b * a[i][j] - (a[i][i0] * a[j0][j] + a[i][j0] * a[i0][j]) for j in rest]
                for i in rest
            ]
            if b < 0:
                a = [[-x for x in row] for row in a]
        a = _primitive(a)
    total = len(rows)
    return Inertia(plus, minus, total - plus - minus)


def signature(rows: Sequence[Sequence[int]]) -> int:
    return matrix_signature(rows).signature


def goeritz_jm(m: int) -> Matrix:
    """Goeritz matrix of the 2-bridge quotient of J_m^+ (diagonal 7, 2m+3, 7)."""
    return ((7, -1, 0), (-1, 2 * m + 3, -1), (0, -1, 7))


def signature_q2_jm(m: int) -> int:
    """Signature of the quotient of J_m^+: sigma(G) minus the correction term 2m+3."""
    return signature(goeritz_jm(m)) - (2 * m + 3)


def torus_2_symmetrized_seifert(k: int) -> Matrix:
    """
    V + V^T for the standard genus-k Seifert surface of T(2, 2k+1): the 2k x 2k
    tridiagonal matrix with 2 on the diagonal and -1 beside it.
    """
    size = 2 * k
    return tuple(
        tuple(2 if i == j else -1 if abs(i - j) == 1 else 0 for j in range(size)) for i in range(size)
    )


class UnsupportedDescriptor(ValueError):
    pass


def signature_magnitude(d: Descriptor) -> int:
    """|sigma| of an unknot, T(2, odd), J_m quotient, or a connected sum of these."""
    if isinstance(d, Unknot):
        return 0
    if isinstance(d, ConnectedSum):
        return sum(signature_magnitude(p) for p in d.parts)
    if isinstance(d, JmQuotient):
        return abs(signature_q2_jm(d.m))
    k = None
    if isinstance(d, TorusKnot) and 2 in (d.p, d.q):
        k = (d.p * d.q // 2 - 1) // 2
    elif isinstance(d, Rational):
        k = is_torus_fraction(d.fraction)
    if k is None:
        raise UnsupportedDescriptor(f"no signature computation for {d}; supply value explicitly")
    return abs(signature(torus_2_symmetrized_seifert(k))) if k else 0


def parse_matrix_text(text: str) -> Matrix:
    """Matrix file format: the dimension n on the first line, then n rows of integers."""
    lines = [line.split("#")[0].strip() for line in text.splitlines()]
    lines = [line for line in lines if line]
    if not lines:
        raise ValueError("empty matrix file")
    try:
        n = int(lines[0])
        rows = [[int(x) for x in line.split()] for line in lines[1:]]
    except ValueError as exc:
        raise ValueError(f"malformed matrix file: {exc}") from None
    if n < 0 or len(rows) != n:
        raise ValueError(f"matrix file declares n = {n} but has {len(rows)} rows")
    return as_symmetric_matrix(rows)


def format_matrix_text(rows: Sequence[Sequence[int]]) -> str:
    return "\n".join([str(len(rows))] + [" ".join(str(x) for x in row) for row in rows]) + "\n"
