import pytest

from equivknot.braid import BraidError, BraidWord, braids_equal
from equivknot.intravergent import (
    B_DOWN,
    B_UP,
    EquivariantMove,
    IntravergentBraid,
    apply_move,
    symmetric_braid_relation,
    symmetric_commutation,
    symmetric_destabilization,
    type_A_move,
    type_B_move,
    type_B_pattern,
    validate_intravergent,
)


def IB(s, *letters):
    return IntravergentBraid(BraidWord(s, letters))


def test_validate_examples():
    assert validate_intravergent(BraidWord(3, (1, 2)))
    assert not validate_intravergent(BraidWord(3, (1, 1)))
    for q in range(1, 8):
        assert validate_intravergent(BraidWord(5, (1, 2, 3, 4) * q))
    assert not validate_intravergent(BraidWord(4, (1, 3)))
    with pytest.raises(ValueError):
        IB(3, 1, 1)


def test_symmetric_commutation():
    b = IB(7, 1, 4, 2, 5, 3, 6)
    out = symmetric_commutation(b, 1)
    assert out.letters == (4, 1, 2, 5, 6, 3)
    assert braids_equal(out.word, b.word)
    # the centre pair is its own mirror
    c = IB(7, 1, 2, 5, 6)
    assert symmetric_commutation(c, 2).letters == (1, 5, 2, 6)
    with pytest.raises(BraidError):
        symmetric_commutation(IB(3, 1, 2), 1)


def test_symmetric_braid_relation():
    b = IB(5, 1, 2, 1, 4, 3, 4)
    out = symmetric_braid_relation(b, 1)
    assert out.letters == (2, 1, 2, 3, 4, 3)
    assert braids_equal(out.word, b.word)
    with pytest.raises(BraidError):
        symmetric_braid_relation(IB(5, 1, 3, 1, 4, 2, 4), 1)


def test_destabilization():
    assert symmetric_destabilization(IB(3, 1, 2)).is_trivial()
    assert symmetric_destabilization(IB(5, 1, 2, 3, 4)).letters == (1, 2)
    with pytest.raises(BraidError):
        symmetric_destabilization(IB(3, 1, 2, 1, 2))


def test_type_A():
    b = IB(5, 1, 3, 3, 1, 4, 2, 2, 4)
    out, move = type_A_move(b, 2)
    assert out.letters == (1, 1, 4, 4)
    assert move.positions == (2, 3, 6, 7) and move.cost == 2
    with pytest.raises(BraidError):
        type_A_move(b, 1)


def test_type_B():
    b = IB(3, 2, 1, 2, 1)
    assert type_B_pattern(b) == B_DOWN
    out, move = type_B_move(b)
    assert out.letters == (1, 2) and move.cost == 1
    c = IB(3, 1, 2, 1, 2)
    assert type_B_pattern(c) == B_UP
    assert type_B_move(c)[0].letters == (2, 1)
    with pytest.raises(BraidError):
        type_B_move(IB(5, 1, 2, 3, 4))


def test_move_roundtrip():
    m = EquivariantMove("type_B", (1, 2, 3, 4), B_DOWN)
    assert EquivariantMove.from_dict(m.to_dict()) == m
    assert apply_move(IB(3, 2, 1, 2, 1), m).letters == (1, 2)
    with pytest.raises(ValueError):
        EquivariantMove("teleport")
