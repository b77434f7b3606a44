"""
Intravergent braids: words on s = 2n+1 strands and of even length 2m that are
invariant under rotation by pi about the centre of the diagram.

The rotation sends the letter at position j to position 2m+1-j and the
generator sigma_i to sigma_{2n+1-i}. Every move here is applied together with
its mirror image so that the result is again intravergent.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .braid import (
    BraidError,
    BraidWord,
    apply_braid_relation,
    apply_commutation,
    can_apply_relation,
    can_commute,
)

ISOTOPY = "isotopy"
DESTABILIZATION = "destabilization"
TYPE_A = "type_A"
TYPE_B = "type_B"

COMMUTATION = "commutation"
BRAID_RELATION = "braid_relation"
# middle four letters before a type B move, written relative to n
B_DOWN = "n+1,n,n+1,n"   # becomes n, n+1
B_UP = "n,n+1,n,n+1"     # becomes n+1, n

MOVE_COSTS = {ISOTOPY: 0, DESTABILIZATION: 0, TYPE_A: 2, TYPE_B: 1}


def mirror_letter(x: int, strands: int) -> int:
    return strands - x if x > 0 else -(strands + x)


def mirror_position(pos: int, length: int) -> int:
    return length + 1 - pos


def validate_intravergent(w: BraidWord) -> bool:
    """True iff ``w`` has an odd strand count, even length and the rotation symmetry."""
    if w.strands % 2 == 0 or len(w) % 2:
        return False
    length = len(w)
    return all(
        w[length - j] == mirror_letter(w[j - 1], w.strands) for j in range(1, length + 1)
    )


@dataclass(frozen=True)
class IntravergentBraid:
    word: BraidWord

    def __post_init__(self):
        if not validate_intravergent(self.word):
            raise ValueError(f"word {self.word} on {self.word.strands} strands is not intravergent")

    @classmethod
    def from_letters(cls, strands: int, letters) -> "IntravergentBraid":
        return cls(BraidWord(strands, tuple(letters)))

    @property
    def strands(self) -> int:
        return self.word.strands

    @property
    def letters(self) -> tuple[int, ...]:
        return self.word.letters

    @property
    def n(self) -> int:
        return (self.strands - 1) // 2

    @property
    def half(self) -> int:
        """m, half the word length; positions 1..m form the left half."""
        return len(self.word) // 2

    def __len__(self) -> int:
        return len(self.word)

    def is_positive(self) -> bool:
        return self.word.is_positive()

    def is_trivial(self) -> bool:
        return self.strands == 1 and len(self.word) == 0

    def __str__(self) -> str:
        return f"{self.word} (s={self.strands})"


@dataclass(frozen=True)
class EquivariantMove:
    kind: str
    positions: tuple[int, ...] = ()
    variant: Optional[str] = None
    cost: int = field(init=False)

    def __post_init__(self):
        if self.kind not in MOVE_COSTS:
            raise ValueError(f"unknown move kind {self.kind!r}")
        object.__setattr__(self, "positions", tuple(int(p) for p in self.positions))
        object.__setattr__(self, "cost", MOVE_COSTS[self.kind])

    def to_dict(self) -> dict:
        return {"kind": self.kind, "positions": list(self.positions), "variant": self.variant}

    @classmethod
    def from_dict(cls, data: dict) -> "EquivariantMove":
        return cls(data["kind"], tuple(data.get("positions", ())), data.get("variant"))


def _sites(length: int, pos: int, width: int) -> list[int]:
    """Start positions of a ``width``-letter site and its mirror, deduplicated."""
    mirror = length + 2 - pos - width
    return [pos] if mirror == pos else sorted((pos, mirror))


def symmetric_commutation(b: IntravergentBraid, pos: int) -> IntravergentBraid:
    """Commute the letters at ``pos``, ``pos+1`` and at the mirrored pair."""
    w = b.word
    sites = _sites(len(w), pos, 2)
    for p in sites:
        if not can_commute(w, p):
            raise BraidError(f"symmetric commutation at {pos}: letters at {p}, {p + 1} do not commute")
    for p in sites:
        w = apply_commutation(w, p)
    return IntravergentBraid(w)


def symmetric_braid_relation(b: IntravergentBraid, pos: int) -> IntravergentBraid:
    """Apply the braid relation at ``pos`` and at the mirrored triple."""
    w = b.word
    sites = _sites(len(w), pos, 3)
    if len(sites) == 2 and sites[1] - sites[0] < 3:
        raise BraidError(f"braid relation at {pos} overlaps its mirror at {sites}")
    for p in sites:
        if not can_apply_relation(w, p):
            raise BraidError(f"symmetric braid relation at {pos}: no pattern at {p}")
    for p in sites:
        w = apply_braid_relation(w, p)
    return IntravergentBraid(w)


def symmetric_destabilization(b: IntravergentBraid) -> IntravergentBraid:
    """
    Remove the unique sigma_1 and the unique sigma_{2n} (a symmetric pair of
    Markov destabilizations), then shift every remaining index down by one.
    """
    w = b.word
    if not w.is_positive():
        raise BraidError("destabilization requires a positive word")
    ones = [p for p, x in enumerate(w.letters, start=1) if x == 1]
    if len(ones) != 1:
        raise BraidError(f"destabilization needs exactly one sigma_1, found {len(ones)}")
    a = ones[0]
    partner = mirror_position(a, len(w))
    assert w[partner - 1] == b.strands - 1
    kept = [x - 1 for p, x in enumerate(w.letters, start=1) if p not in (a, partner)]
    return IntravergentBraid(BraidWord(b.strands - 2, tuple(kept)))


def type_A_move(b: IntravergentBraid, pos: int) -> tuple[IntravergentBraid, EquivariantMove]:
    """Delete a positive square sigma_i sigma_i at ``pos`` together with its mirror square."""
    w = b.word
    if not 1 <= pos < len(w) or w[pos - 1] != w[pos] or w[pos - 1] < 0:
        raise BraidError(f"no positive square at position {pos}")
    mirror = len(w) - pos
    # a square can never be its own mirror on an odd strand count
    assert mirror != pos and abs(mirror - pos) >= 2, (pos, mirror)
    doomed = {pos, pos + 1, mirror, mirror + 1}
    kept = [x for p, x in enumerate(w.letters, start=1) if p not in doomed]
    move = EquivariantMove(TYPE_A, tuple(sorted(doomed)))
    return IntravergentBraid(w.replace(kept)), move


def type_B_pattern(b: IntravergentBraid) -> Optional[str]:
    """Which type B pattern occupies the middle four letters, if any."""
    if len(b) < 4:
        return None
    n, m = b.n, b.half
    middle = b.letters[m - 2 : m + 2]
    if middle == (n + 1, n, n + 1, n):
        return B_DOWN
    if middle == (n, n + 1, n, n + 1):
        return B_UP
    return None


def type_B_move(b: IntravergentBraid) -> tuple[IntravergentBraid, EquivariantMove]:
    """Replace the middle four letters by two, a single crossing change on the axis."""
    variant = type_B_pattern(b)
    if variant is None:
        middle = b.letters[max(b.half - 2, 0) : b.half + 2]
        raise BraidError(f"middle letters {middle} do not match a type B pattern")
    n, m = b.n, b.half
    replacement = [n, n + 1] if variant == B_DOWN else [n + 1, n]
    letters = list(b.letters)
    letters[m - 2 : m + 2] = replacement
    move = EquivariantMove(TYPE_B, (m - 1, m, m + 1, m + 2), variant)
    return IntravergentBraid(b.word.replace(letters)), move


def isotopy_move(variant: str, b: IntravergentBraid, pos: int) -> EquivariantMove:
    width = 2 if variant == COMMUTATION else 3
    return EquivariantMove(ISOTOPY, tuple(_sites(len(b), pos, width)), variant)


def apply_move(b: IntravergentBraid, move: EquivariantMove) -> IntravergentBraid:
    """Replay ``move`` on ``b``, checking its preconditions structurally."""
    if move.kind == ISOTOPY:
        pos = move.positions[0]
        if move.variant == COMMUTATION:
            out = symmetric_commutation(b, pos)
        elif move.variant == BRAID_RELATION:
            out = symmetric_braid_relation(b, pos)
        else:
            raise BraidError(f"unknown isotopy variant {move.variant!r}")
        if isotopy_move(move.variant, b, pos).positions != move.positions:
            raise BraidError(f"recorded positions {move.positions} are not a mirror pair")
        return out
    if move.kind == DESTABILIZATION:
        ones = [p for p, x in enumerate(b.letters, start=1) if x == 1]
        if len(ones) == 1 and move.positions != (ones[0], mirror_position(ones[0], len(b))):
            raise BraidError(f"destabilization positions {move.positions} do not match")
        return symmetric_destabilization(b)
    if move.kind == TYPE_A:
        if len(move.positions) != 4:
            raise BraidError("type A move needs four positions")
        out, expected = type_A_move(b, move.positions[0])
        if expected.positions != move.positions:
            raise BraidError(f"type A positions {move.positions} are not a mirrored square pair")
        return out
    if move.kind == TYPE_B:
        if type_B_pattern(b) != move.variant:
            raise BraidError(f"type B variant {move.variant!r} does not match the middle letters")
        return type_B_move(b)[0]
    raise BraidError(f"unknown move kind {move.kind!r}")
