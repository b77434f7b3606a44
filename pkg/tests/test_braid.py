import random

import pytest

from equivknot.braid import (
    BraidError,
    BraidWord,
    apply_braid_relation,
    apply_commutation,
    braids_equal,
    can_commute,
    closure_components,
    exponent_sum,
    format_word,
    free_reduce,
    parse_word,
    underlying_permutation,
)

from oracles import artin_key


def W(s, *letters):
    return BraidWord(s, letters)


def test_permutation_examples():
    assert underlying_permutation(W(5)) == (1, 2, 3, 4, 5)
    assert underlying_permutation(W(3, 1)) == (2, 1, 3)
    # read as a map p -> entry: 1 -> 2 -> 3 -> 1
    assert underlying_permutation(W(3, 1, 2)) == (2, 3, 1)


def test_closure_components():
    assert closure_components(W(4)) == 4
    assert closure_components(W(3, 1, 2)) == 1
    assert closure_components(W(3, 1, 2, 1, 2, 1, 2)) == 3


def test_letters_are_validated():
    with pytest.raises(ValueError):
        W(3, 3)
    with pytest.raises(ValueError):
        W(3, 0)
    with pytest.raises(ValueError):
        W(0)


def test_parse_and_format_roundtrip():
    w = parse_word("1, -2  3", 5)
    assert w.letters == (1, -2, 3)
    assert parse_word(format_word(w), 5) == w
    with pytest.raises(ValueError):
        parse_word("1 x", 3)


def test_commutation():
    assert apply_commutation(W(4, 1, 3), 1).letters == (3, 1)
    assert apply_commutation(W(5, 2, 4, 2), 2).letters == (2, 2, 4)
    assert not can_commute(W(3, 1, 2), 1)
    with pytest.raises(BraidError):
        apply_commutation(W(3, 1, 2), 1)


def test_braid_relation():
    assert apply_braid_relation(W(3, 1, 2, 1), 1).letters == (2, 1, 2)
    assert apply_braid_relation(W(3, 2, 1, 2), 1).letters == (1, 2, 1)
    with pytest.raises(BraidError):
        apply_braid_relation(W(4, 1, 3, 1), 1)


def test_braids_equal_examples():
    assert braids_equal(W(3, 1, 2, 1), W(3, 2, 1, 2))
    assert not braids_equal(W(3, 1), W(3, -1))
    assert braids_equal(W(4, 1, 3), W(4, 3, 1))
    assert braids_equal(W(3, 1, -1, 2), W(3, 2))
    assert braids_equal(W(3, 1, 1, 2), W(3, 2, 1, 1), full=False)
    assert not braids_equal(W(3, 1, 1, 2), W(3, 2, 1, 1))


def test_braids_equal_matches_artin_action_on_random_pairs():
    rng = random.Random(5)
    for _ in range(300):
        s = rng.randint(2, 5)
        a = W(s, *[rng.choice([1, -1]) * rng.randint(1, s - 1) for _ in range(rng.randint(0, 8))])
        b = W(s, *[rng.choice([1, -1]) * rng.randint(1, s - 1) for _ in range(rng.randint(0, 8))])
        assert braids_equal(a, b) == (artin_key(a) == artin_key(b))
        assert braids_equal(a, a * b * b.inverse())


def test_free_reduce_and_exponent_sum():
    w = W(4, 1, 2, -2, 3, -3, -1, 2)
    assert free_reduce(w).letters == (2,)
    assert exponent_sum(w) == 1
