import dataclasses
import json
import random

import pytest

from equivknot.braid import BraidWord, braids_equal
from equivknot.intravergent import IntravergentBraid
from equivknot.unknotter import (
    CONTAINS_SQUARE,
    DISPLACED_SIGMA_ONE,
    SEARCH_DEPTH_ENV,
    STAIRCASE,
    MoveLog,
    equivariant_unknot,
    flip,
    sigma_low_rewrite,
    unknot_with_stats,
    verify_move_log,
    verify_move_log_json,
)

from oracles import random_intravergent


def IB(s, *letters):
    return IntravergentBraid(BraidWord(s, letters))


def test_sigma_low_examples():
    assert sigma_low_rewrite(BraidWord(3, (1,))).variant == STAIRCASE
    out = sigma_low_rewrite(BraidWord(3, (1, 2, 2)))
    assert (out.variant, out.index, out.position) == (CONTAINS_SQUARE, 2, 2)
    out = sigma_low_rewrite(BraidWord(5, (1, 3)))
    assert out.variant == DISPLACED_SIGMA_ONE and out.rewritten == (3, 1)


def test_sigma_low_right_orientation():
    out = sigma_low_rewrite(BraidWord(5, (3, 1)), orientation="right")
    assert out.variant == DISPLACED_SIGMA_ONE and out.rewritten == (1, 3)
    out = sigma_low_rewrite(BraidWord(4, (3, 2, 1)), orientation="right")
    assert out.variant == STAIRCASE and out.index == 3
    with pytest.raises(ValueError):
        sigma_low_rewrite(BraidWord(3, (1, 2, 1)))
    with pytest.raises(ValueError):
        sigma_low_rewrite(BraidWord(3, (2, 1)))


def test_small_cases():
    log = equivariant_unknot(IB(3, 1, 2))
    assert log.total_cost == 0 and [s.kind for s in log.steps] == ["destabilization"]
    trefoil = IB(3, 1, 2, 1, 2)
    assert equivariant_unknot(trefoil).total_cost == 1
    assert equivariant_unknot(IB(3, *(1, 2) * 4)).total_cost == 3
    log = equivariant_unknot(IB(3, *(1, 2) * 5))
    assert log.total_cost == 4 and verify_move_log(log).ok


def test_rejects_bad_input():
    with pytest.raises(ValueError):
        equivariant_unknot(IB(3, 1, -2))
    with pytest.raises(ValueError):
        equivariant_unknot(IB(3, 1, 2, 1, 2, 1, 2))  # three-component closure


def test_random_seven_strands_length_eighteen():
    rng = random.Random(18)
    while True:
        b = random_intravergent(rng, (7,), 18)
        if len(b) == 18:
            break
    log = equivariant_unknot(b)
    assert log.total_cost == 6
    assert verify_move_log(log).ok


def test_flip_is_conjugation_by_delta():
    b = IB(5, 1, 2, 3, 4, 1, 2, 3, 4)
    d = BraidWord(5, (1, 2, 3, 4, 1, 2, 3, 1, 2, 1))
    assert braids_equal(flip(b).word, d * b.word * d.inverse())


def test_log_json_roundtrip_and_replay():
    log = equivariant_unknot(IB(3, *(1, 2) * 5))
    text = log.to_json()
    again = MoveLog.from_json(text)
    assert again.to_json() == text
    assert verify_move_log_json(text).ok


def test_empty_log_on_trivial_braid():
    assert verify_move_log(MoveLog(IB(1))).ok
    assert not verify_move_log(MoveLog(IB(3, 1, 2))).ok


def test_corrupted_type_A_fails_at_that_step():
    log = equivariant_unknot(IB(5, *(1, 2, 3, 4) * 7))
    k = next(i for i, s in enumerate(log.steps) if s.kind == "type_A")
    bad = list(log.steps)
    pos = bad[k].positions
    bad[k] = dataclasses.replace(bad[k], positions=pos[:2] + (pos[2] + 1, pos[3] + 1))
    report = verify_move_log(MoveLog(log.initial, bad))
    assert not report.ok and report.failed_step == k


def test_recorded_cost_mismatch_fails():
    log = equivariant_unknot(IB(3, *(1, 2) * 5))
    data = log.to_dict()
    data["total_cost"] += 1

    assert not verify_move_log_json(json.dumps(data)).ok


def test_isotopy_that_changes_braid_is_caught():
    from equivknot.intravergent import EquivariantMove

    log = MoveLog(IB(5, 1, 2, 3, 4), [EquivariantMove("isotopy", (1, 3), "commutation")])
    report = verify_move_log(log)
    assert not report.ok and report.failed_step == 0


def test_search_depth_env(monkeypatch):
    monkeypatch.setenv(SEARCH_DEPTH_ENV, "3")
    log, fallbacks = unknot_with_stats(IB(3, *(1, 2) * 7))
    assert log.total_cost == 6 and fallbacks == 0


def test_deterministic():
    b = IB(5, *(1, 2, 3, 4) * 3)
    assert equivariant_unknot(b).to_json() == equivariant_unknot(b).to_json()
