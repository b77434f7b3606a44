"""
Equivariant unknotting of positive intravergent braids.

:func:`equivariant_unknot` reduces a positive intravergent braid whose closure
is a knot to the trivial braid on one strand, using only symmetric isotopies,
symmetric Markov destabilizations, type A moves (cost 2) and type B moves
(cost 1). The case analysis follows the count and placement of sigma_1 letters;
the rewriting of the word between two sigma_1's is done by
:func:`sigma_low_rewrite`. Every step is recorded in a :class:`MoveLog`, which
:func:`verify_move_log` replays independently.
"""

from __future__ import annotations

import json
import logging
import os
from collections import deque
from dataclasses import dataclass, field
from typing import Optional

from .braid import BraidError, BraidWord, braids_equal, canonical_form, can_apply_relation, can_commute, closure_components
from .intravergent import (
    B_DOWN,
    B_UP,
    BRAID_RELATION,
    COMMUTATION,
    DESTABILIZATION,
    ISOTOPY,
    TYPE_B,
    EquivariantMove,
    IntravergentBraid,
    apply_move,
    isotopy_move,
    mirror_letter,
    symmetric_braid_relation,
    symmetric_commutation,
    symmetric_destabilization,
    type_A_move,
    type_B_move,
    type_B_pattern,
)

log = logging.getLogger(__name__)

SCHEMA_VERSION = 1
DEFAULT_SEARCH_DEPTH = 8
SEARCH_DEPTH_ENV = "SI_UNKNOT_SEARCH_DEPTH"

STAIRCASE = "staircase"
CONTAINS_SQUARE = "contains_square"
DISPLACED_SIGMA_ONE = "displaced_sigma_one"


class UnknotterError(RuntimeError):
    """The case analysis reached a state it cannot handle (should be unreachable)."""


# ---------------------------------------------------------------------------
# the sigma_1 lemma


@dataclass(frozen=True)
class SigmaLowOutcome:
    """
    Result of rewriting a positive word that starts (or ends) with its only sigma_1.

    ``moves`` lists the local rewrites, as ``(variant, position)`` pairs with
    1-based positions in the word, that turn the input into ``rewritten``.
    ``index`` is i for the staircase sigma_1 ... sigma_i and for a square
    sigma_i^2; ``position`` locates the square.
    """

    variant: str
    rewritten: tuple[int, ...]
    moves: tuple[tuple[str, int], ...] = ()
    index: Optional[int] = None
    position: Optional[int] = None


def _sigma_low_left(letters: tuple[int, ...]) -> SigmaLowOutcome:
    w = list(letters)
    length = len(w)
    j = next((k for k in range(2, length + 1) if w[k - 1] != k), None)
    if j is None:
        return SigmaLowOutcome(STAIRCASE, tuple(w), index=length)
    i = w[j - 1]
    if i == j - 1:
        return SigmaLowOutcome(CONTAINS_SQUARE, tuple(w), index=i, position=j - 1)
    moves: list[tuple[str, int]] = []

    def commute(p):
        w[p - 1], w[p] = w[p], w[p - 1]
        moves.append((COMMUTATION, p))

    if i > j:
        # sigma_i commutes with sigma_1 .. sigma_{j-1}
        for p in range(j - 1, 0, -1):
            commute(p)
    else:
        # i < j-1: slide sigma_i back to sigma_{i+1}, apply the relation, send sigma_{i+1} to the front
        for p in range(j - 1, i + 1, -1):
            commute(p)
        w[i - 1 : i + 2] = [i + 1, i, i + 1]
        moves.append((BRAID_RELATION, i))
        for p in range(i - 1, 0, -1):
            commute(p)
    return SigmaLowOutcome(DISPLACED_SIGMA_ONE, tuple(w), tuple(moves))


def sigma_low_rewrite(w: BraidWord, orientation: str = "left") -> SigmaLowOutcome:
    """
    Rewrite a positive word that begins (``orientation="left"``) or ends
    (``"right"``) with sigma_1 and has no other sigma_1.

    The result has the same length and is equal to ``w`` in the braid group.
    Exactly one of the following holds for the rewritten word (read backwards
    for ``"right"``): it is the staircase sigma_1 sigma_2 ... sigma_i; it
    contains a square sigma_i sigma_i with i > 1; or it contains one sigma_1 that
    is no longer its first letter.
    """
    letters = w.letters
    if not letters or not w.is_positive():
        raise ValueError("sigma_low_rewrite needs a nonempty positive word")
    if orientation not in ("left", "right"):
        raise ValueError(f"orientation must be 'left' or 'right', got {orientation!r}")
    end = 0 if orientation == "left" else -1
    if letters[end] != 1 or letters.count(1) != 1:
        raise ValueError(f"word must {'begin' if end == 0 else 'end'} with its only sigma_1: {w}")
    if orientation == "left":
        return _sigma_low_left(letters)
    length = len(letters)
    out = _sigma_low_left(letters[::-1])
    moves = tuple(
        (v, length - p if v == COMMUTATION else length - 1 - p) for v, p in out.moves
    )
    position = None if out.position is None else length - out.position
    return SigmaLowOutcome(out.variant, out.rewritten[::-1], moves, out.index, position)


def _rewrite_is_clean(segment: tuple[int, ...], top: int) -> bool:
    """
    Whether clearing the segment sigma_1 ... sigma_1 (no other sigma_1) by
    repeated use of the lemma avoids creating a new sigma_top.
    """
    w = segment
    while True:
        out = _sigma_low_left(w[:-1])
        if out.variant != DISPLACED_SIGMA_ONE:
            return True
        if out.rewritten.count(top) > w.count(top):
            return False
        w = out.rewritten[1:] + w[-1:]


# ---------------------------------------------------------------------------
# move logs


@dataclass
class MoveLog:
    initial: IntravergentBraid
    steps: list[EquivariantMove] = field(default_factory=list)

    @property
    def total_cost(self) -> int:
        return sum(step.cost for step in self.steps)

    def count(self, kind: str) -> int:
        return sum(1 for step in self.steps if step.kind == kind)

    def to_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "initial": {"strands": self.initial.strands, "word": list(self.initial.letters)},
            "steps": [step.to_dict() for step in self.steps],
            "total_cost": self.total_cost,
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    @classmethod
    def from_dict(cls, data: dict) -> "MoveLog":
        version = data.get("schema_version", SCHEMA_VERSION)
        if version != SCHEMA_VERSION:
            raise ValueError(f"unsupported move log schema version {version}")
        init = data["initial"]
        initial = IntravergentBraid(BraidWord(int(init["strands"]), tuple(init["word"])))
        steps = [EquivariantMove.from_dict(s) for s in data["steps"]]
        return cls(initial, steps)

    @classmethod
    def from_json(cls, text: str) -> "MoveLog":
        return cls.from_dict(json.loads(text))


@dataclass
class VerificationReport:
    ok: bool
    steps_checked: int
    failed_step: Optional[int] = None
    message: str = ""
    final: Optional[IntravergentBraid] = None

    def __bool__(self) -> bool:
        return self.ok


def verify_move_log(move_log: MoveLog, full: bool = True, recorded_cost: Optional[int] = None) -> VerificationReport:
    """
    Replay a move log from its initial braid.

    Isotopy steps are certified with :func:`braids_equal` (``full=False`` uses
    only the exponent-sum and permutation filters). The other moves are
    checked through their structural preconditions. Every intermediate braid
    must be intravergent with a knot closure, and the last one trivial.
    ``failed_step`` is the 0-based index of the first bad step.
    """
    b = move_log.initial
    if closure_components(b.word) != 1:
        return VerificationReport(False, 0, None, "initial closure is not a knot", b)
    current_form = None  # canonical form of b, reused across runs of isotopies
    for k, step in enumerate(move_log.steps):
        try:
            nxt = apply_move(b, step)
        except (BraidError, ValueError, AssertionError) as exc:
            return VerificationReport(False, k, k, f"step {k} ({step.kind}): {exc}", b)
        if step.kind == ISOTOPY:
            if not braids_equal(b.word, nxt.word, full=False):
                return VerificationReport(False, k, k, f"step {k}: isotopy changes the braid", b)
            if full:
                current_form = current_form or canonical_form(b.word)
                next_form = canonical_form(nxt.word)
                if next_form != current_form:
                    return VerificationReport(False, k, k, f"step {k}: isotopy changes the braid", b)
                current_form = next_form
        else:
            current_form = None
        if closure_components(nxt.word) != 1:
            return VerificationReport(False, k, k, f"step {k}: closure is no longer a knot", nxt)
        b = nxt
    n = len(move_log.steps)
    if not b.is_trivial():
        return VerificationReport(False, n, None, f"final braid {b} is not trivial", b)
    if recorded_cost is not None and recorded_cost != move_log.total_cost:
        return VerificationReport(
            False, n, None, f"recorded cost {recorded_cost} != step cost sum {move_log.total_cost}", b
        )
    return VerificationReport(True, n, None, "ok", b)


def verify_move_log_json(text: str, full: bool = True) -> VerificationReport:
    data = json.loads(text)
    return verify_move_log(MoveLog.from_dict(data), full=full, recorded_cost=data.get("total_cost"))


# ---------------------------------------------------------------------------
# the unknotting algorithm


def flip(b: IntravergentBraid) -> IntravergentBraid:
    """Conjugate by Delta: sigma_i -> sigma_{2n+1-i} letterwise. Positions of all moves are unchanged."""
    return IntravergentBraid(b.word.replace(mirror_letter(x, b.strands) for x in b.letters))


def _unflip_move(move: EquivariantMove) -> EquivariantMove:
    if move.kind == TYPE_B:
        return EquivariantMove(TYPE_B, move.positions, B_UP if move.variant == B_DOWN else B_DOWN)
    if move.kind == DESTABILIZATION:
        return EquivariantMove(DESTABILIZATION, move.positions[::-1])
    return move


def _search_depth() -> int:
    raw = os.environ.get(SEARCH_DEPTH_ENV)
    return int(raw) if raw else DEFAULT_SEARCH_DEPTH


def _reducing_move(b: IntravergentBraid) -> Optional[str]:
    """Name of a cost-reducing move applicable right now, in order of preference."""
    if b.letters.count(1) == 1:
        return DESTABILIZATION
    if type_B_pattern(b) is not None:
        return "type_B"
    if _first_square(b) is not None:
        return "type_A"
    return None


def _first_square(b: IntravergentBraid) -> Optional[int]:
    x = b.letters
    for p in range(1, len(x)):
        if x[p - 1] == x[p] and p != b.half:
            return p
    return None


def _symmetric_isotopies(b: IntravergentBraid):
    length, m = len(b), b.half
    for p in range(1, m + 1):
        if can_commute(b.word, p):
            yield COMMUTATION, p
    for p in range(1, m + 1):
        if p + 2 <= length and p not in (m - 1, m) and can_apply_relation(b.word, p):
            yield BRAID_RELATION, p


class _Unknotter:
    def __init__(self, braid: IntravergentBraid, search_depth: int):
        self.b = braid
        self.steps: list[EquivariantMove] = []
        self.search_depth = search_depth
        self.fallbacks = 0
        self._seen: set[tuple[int, ...]] = set()

    # -- recording primitives -------------------------------------------------

    def isotopy(self, variant: str, pos: int) -> None:
        move = isotopy_move(variant, self.b, pos)
        if variant == COMMUTATION:
            self.b = symmetric_commutation(self.b, pos)
        else:
            self.b = symmetric_braid_relation(self.b, pos)
        self.steps.append(move)

    def local(self, start: int, moves) -> None:
        """Apply rewrites of a segment starting at ``start`` (lying in one half), mirrored."""
        for v, p in moves:
            self.isotopy(v, start - 1 + p)

    def reduce(self, kind: str, pos: Optional[int] = None) -> None:
        if kind == DESTABILIZATION:
            a = self.b.letters.index(1) + 1
            move = EquivariantMove(DESTABILIZATION, (a, len(self.b) + 1 - a))
            self.b = symmetric_destabilization(self.b)
        elif kind == "type_A":
            self.b, move = type_A_move(self.b, pos)
        else:
            self.b, move = type_B_move(self.b)
        self.steps.append(move)
        self._seen.clear()

    def swap_blocks_in_half(self, p: int, q: int, r: int) -> None:
        """Exchange adjacent blocks [p..q] and [q+1..r] of one half by commutations."""
        for k in range(r - q):
            for pos in range(q + k, p + k - 1, -1):
                self.isotopy(COMMUTATION, pos)

    def swap_center_blocks(self, size: int) -> None:
        """Exchange the last ``size`` letters of the left half with the first ``size`` of the right."""
        m = self.b.half
        labels = {pos: ("L" if pos <= m else "R") for pos in range(m - size + 1, m + size + 1)}
        while True:
            pos = next((p for p in range(m - size + 1, m + size) if labels[p] == "L" and labels[p + 1] == "R"), None)
            if pos is None:
                return
            self.isotopy(COMMUTATION, pos)
            mirror = 2 * m - pos
            for site in {pos, mirror}:
                labels[site], labels[site + 1] = labels[site + 1], labels[site]

    # -- driver ------------------------------------------------------------------

    def run(self) -> MoveLog:
        initial = self.b
        budget = 0
        while not self.b.is_trivial():
            key = (self.b.strands, self.b.letters)
            budget += 1
            if key in self._seen or budget > 50 * (len(initial) + 10) ** 2:
                self.fallback("isotopy cycle detected")
                continue
            self._seen.add(key)
            mark_b, mark_len = self.b, len(self.steps)
            try:
                self.step()
            except BraidError as exc:
                self.b = mark_b
                del self.steps[mark_len:]
                self.fallback(str(exc))
        return MoveLog(initial, self.steps)

    def fallback(self, reason: str) -> None:
        """Breadth-first search over symmetric isotopies for a state admitting a reducing move."""
        self.fallbacks += 1
        log.debug("fallback search from %s: %s", self.b, reason)
        start = self.b
        parent: dict[tuple[int, ...], Optional[tuple]] = {start.letters: None}
        frontier = deque([(start, 0)])
        while frontier:
            b, depth = frontier.popleft()
            kind = _reducing_move(b)
            if kind is not None:
                path = []
                key = b.letters
                while parent[key] is not None:
                    prev_key, v, p = parent[key]
                    path.append((v, p))
                    key = prev_key
                for v, p in reversed(path):
                    self.isotopy(v, p)
                self.reduce(kind, _first_square(self.b) if kind == "type_A" else None)
                return
            if depth >= self.search_depth:
                continue
            for v, p in _symmetric_isotopies(b):
                nb = symmetric_commutation(b, p) if v == COMMUTATION else symmetric_braid_relation(b, p)
                if nb.letters not in parent:
                    parent[nb.letters] = (b.letters, v, p)
                    frontier.append((nb, depth + 1))
        raise UnknotterError(
            f"no reducing move within {self.search_depth} symmetric isotopies of {start} "
            f"(triggered by: {reason})"
        )

    def step(self) -> None:
        b = self.b
        ones = [p for p, x in enumerate(b.letters, start=1) if x == 1]
        if not ones:
            raise UnknotterError(f"no sigma_1 in nontrivial braid {b}: closure is not a knot")
        if len(ones) == 1:
            self.reduce(DESTABILIZATION)
            return
        flipped, case, a, c, orientation = self.plan()
        mark = len(self.steps)
        if flipped:
            self.b = flip(self.b)
        try:
            if case == "same_half":
                self.same_half(a, c, orientation)
            else:
                self.split_halves(a, c)
        finally:
            if flipped:
                self.b = flip(self.b)
                self.steps[mark:] = [_unflip_move(mv) for mv in self.steps[mark:]]

    def plan(self) -> tuple[bool, str, int, int, Optional[str]]:
        """
        Choose the sigma_1 pair to work on.

        Conjugating by Delta (``flip``) exchanges the roles of sigma_1 and
        sigma_{2n} without changing any move, so both views are searched. A
        same-half pair is preferred when rewriting it never applies a braid
        relation that creates a sigma_{2n}: the mirror of such a letter is a new
        sigma_1 in the other half.
        """
        b = self.b
        m, top = b.half, b.strands - 1
        views = ((False, b.letters), (True, flip(b).letters))
        first = None
        for flipped, x in views:
            ones = [p for p, y in enumerate(x, start=1) if y == 1]
            for half in ([p for p in ones if p <= m], [p for p in ones if p > m]):
                for a, c in zip(half, half[1:]):
                    if _rewrite_is_clean(x[a - 1 : c], top):
                        return flipped, "same_half", a, c, "left"
                    if _rewrite_is_clean(x[a - 1 : c][::-1], top):
                        return flipped, "same_half", a, c, "right"
                    first = first or (flipped, "same_half", a, c, "left")
        if first is not None:
            return first
        # one sigma_1 per half; the left half's single sigma_{2n} must precede its sigma_1
        a = b.letters.index(1) + 1
        if b.letters.index(top) + 1 < a:
            return False, "split", a, len(b) - b.letters[::-1].index(1), None
        fx = views[1][1]
        return True, "split", fx.index(1) + 1, len(fx) - fx[::-1].index(1), None

    def same_half(self, a: int, b: int, orientation: str = "left") -> None:
        """
        Two sigma_1's at positions a < b in the same half. The lemma moves the
        sigma_1 at a rightwards, or with ``orientation="right"`` the one at b
        leftwards.
        """
        x = b - a
        if orientation == "left":
            start, seg = a, self.b.letters[a - 1 : b - 1]
        else:
            start, seg = a + 1, self.b.letters[a:b]
        out = sigma_low_rewrite(BraidWord(self.b.strands, seg), orientation)
        if out.variant == CONTAINS_SQUARE:
            self.reduce("type_A", start - 1 + out.position)
        elif out.variant == DISPLACED_SIGMA_ONE:
            self.local(start, out.moves)
            assert self.b.letters[a - 1 : b].count(1) == 2  # gap shrank by one
        elif x == 1:
            self.reduce("type_A", a)
        elif self.b.n == 1:
            # On three strands the mirrored relation would put a sigma_1 back.
            # A square-free word there alternates across the middle, so a
            # type B pattern sits on the axis.
            if type_B_pattern(self.b) is not None:
                self.reduce("type_B")
            else:
                self.reduce("type_A", _first_square(self.b))
        elif orientation == "left":
            # sigma_1 sigma_2 .. sigma_x sigma_1
            for pos in range(b - 1, a + 1, -1):
                self.isotopy(COMMUTATION, pos)
            self.isotopy(BRAID_RELATION, a)
        else:
            # sigma_1 sigma_x .. sigma_2 sigma_1
            for pos in range(a, b - 2):
                self.isotopy(COMMUTATION, pos)
            self.isotopy(BRAID_RELATION, b - 2)

    def split_halves(self, a: int, b: int) -> None:
        """One sigma_1 in each half, at a <= m < b."""
        m, n = self.b.half, self.b.n
        seg = BraidWord(self.b.strands, self.b.letters[a - 1 : m])
        out = sigma_low_rewrite(seg, "left")
        if out.variant == CONTAINS_SQUARE:
            self.reduce("type_A", a - 1 + out.position)
            return
        if out.variant == DISPLACED_SIGMA_ONE:
            self.local(a, out.moves)
            assert self.b.letters[a] == 1
            return
        i = m - a + 1
        if i < n:
            self.swap_center_blocks(i)
        elif i == n:
            self.middle_staircase(b)
        elif i == n + 1:
            self.reduce("type_B")
        else:
            self.isotopy(COMMUTATION, m)

    def middle_staircase(self, b: int) -> None:
        """Left half ends with sigma_1..sigma_n, right half starts with sigma_{n+1}..sigma_{2n}."""
        m, n = self.b.half, self.b.n
        start = m + n + 1
        seg = BraidWord(self.b.strands, self.b.letters[start - 1 : b])
        out = sigma_low_rewrite(seg, "right")
        if out.variant == CONTAINS_SQUARE:
            self.reduce("type_A", start - 1 + out.position)
            return
        if out.variant == DISPLACED_SIGMA_ONE:
            self.local(start, out.moves)
            assert self.b.letters[b - 2] == 1
            return
        j = b - start + 1
        if j < n:
            self.swap_blocks_in_half(m + 1, m + n, m + n + j)
            self.swap_center_blocks(j)
        elif j == n:
            for pos in range(m + n, m + 1, -1):
                self.isotopy(COMMUTATION, pos)
            self.reduce("type_B")
        elif j == 2 * n:
            self.reduce("type_A", m + n)
        else:
            for pos in range(m + n, m + j + 1 - n, -1):
                self.isotopy(COMMUTATION, pos)
            self.isotopy(BRAID_RELATION, m + j - n)
            for pos in range(m + j - n - 1, m, -1):
                self.isotopy(COMMUTATION, pos)
            self.isotopy(COMMUTATION, m)
            for pos in range(m + 1, m + n + 1):
                self.isotopy(COMMUTATION, pos)


def unknot_with_stats(b: IntravergentBraid, search_depth: Optional[int] = None) -> tuple[MoveLog, int]:
    """Like :func:`equivariant_unknot` but also return how many fallback searches ran."""
    if not isinstance(b, IntravergentBraid):
        b = IntravergentBraid(b)
    if not b.is_positive():
        raise ValueError(f"braid {b} is not positive")
    if closure_components(b.word) != 1:
        raise ValueError(f"closure of {b} is not a knot")
    runner = _Unknotter(b, _search_depth() if search_depth is None else search_depth)
    result = runner.run()
    if runner.fallbacks:
        log.info("unknotting %s used %d fallback searches", b, runner.fallbacks)
    return result, runner.fallbacks


def equivariant_unknot(b: IntravergentBraid, search_depth: Optional[int] = None) -> MoveLog:
    """
    Unknot the closure of a positive intravergent braid with equivariant moves.

    The returned log ends at the trivial braid on one strand. Its total cost
    is (len - strands + 1) / 2: destabilizations keep this quantity, a type A
    move lowers it by 2 at cost 2, a type B move lowers it by 1 at cost 1.
    """
    return unknot_with_stats(b, search_depth)[0]
