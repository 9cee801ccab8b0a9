"""Smoke tests for the python bindings: a few published values per area."""

from fractions import Fraction

import pytest

import tdrl
from tdrl import OpKind, Pattern, Permutation


def test_apply_examples():
    id5 = Permutation.identity(5)
    assert str(tdrl.apply(id5, Pattern("01101"), OpKind.TDRL)) == "2 3 5 1 4"
    assert str(tdrl.apply(id5, Pattern("01101"), OpKind.MTDRL)) == "2 3 5 4 1"
    # windowed: only positions 2..4 move
    assert (
        str(tdrl.apply(id5, Pattern("101"), OpKind.TDRL, start=2)) == "1 2 4 3 5"
    )


def test_permutation_basics():
    p = Permutation([2, 3, 5, 1, 4])
    assert len(p) == 5
    assert p.elements == [2, 3, 5, 1, 4]
    assert Permutation.parse("2 3 5 1 4") == p
    assert len({p, Permutation([2, 3, 5, 1, 4])}) == 1
    with pytest.raises(ValueError):
        Permutation([1, 2, 2])


def test_ball_sizes_match_closed_forms():
    id5 = Permutation.identity(5)
    ball = tdrl.ball_out(id5, OpKind.TDRL)
    assert len(ball) == 2**5 - 5 == 27
    assert tdrl.closed_form(tdrl.CountKind.S_OUT, OpKind.TDRL, 5) == 27
    assert len(tdrl.ball_out(id5, OpKind.MTDRL)) == 2**4
    # witnesses actually produce their elements
    for element, start, pattern in ball:
        assert tdrl.apply(id5, pattern, OpKind.TDRL, start=start) == element


def test_big_values_are_python_ints():
    assert tdrl.closed_form(tdrl.CountKind.S_OUT, OpKind.TDRL, 100) == 2**100 - 100
    assert tdrl.factorial(25) == 15511210043330985984000000
    assert tdrl.sphere_packing_bound(4, 2, OpKind.TDRL) == 6


def test_reversible_fraction_is_exact():
    assert tdrl.reversible_fraction(5, OpKind.TDRL) == Fraction(21, 27)
    assert tdrl.reversible_fraction(20, OpKind.TDRL) < Fraction(1, 100)


def test_max_intersection_and_witnesses():
    value, witnesses = tdrl.max_intersection(4, OpKind.TDRL)
    assert value == 8
    pi, rho = tdrl.witness_pair(4, tdrl.WitnessFamily.CYCLIC_SHIFT)
    assert len(tdrl.intersect_out(pi, rho, OpKind.TDRL)) == 8
    assert tdrl.family_matches_kind(tdrl.WitnessFamily.CYCLIC_SHIFT, OpKind.TDRL)


def test_reconstruct():
    id3 = Permutation.identity(3)
    ball = [element for element, _, _ in tdrl.ball_out(id3, OpKind.TDRL)]
    result = tdrl.reconstruct(ball, OpKind.TDRL)
    assert result["unique"] is True
    assert result["candidates"] == [id3]
    assert result["guaranteed_threshold"] == 5


def test_codes():
    words = tdrl.greedy_code(4, 2, OpKind.TDRL)
    assert tdrl.verify_code(4, 2, OpKind.TDRL, words)
    assert 1 <= len(words) <= 6
    assert words[0] == Permutation.identity(4)


def test_guard_error():
    with pytest.raises(tdrl.GuardError):
        tdrl.ball_out(Permutation.identity(3), OpKind.TDRL, guard=2)
