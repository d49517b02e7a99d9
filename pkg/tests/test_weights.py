from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from ospdiag.cups import cup_diagram
from ospdiag.errors import HookViolation, ParseError, SignContractViolation
from ospdiag.labels import parse_weight
from ospdiag.weights import (GroupParams, HookPartition, defect, freeze, hook_from_weight,
                             hook_partitions, linked, s_sequence, signs_for, super_weight,
                             super_weights, tail_length, weight_diagram, weight_from_hook)

from conftest import hp

G64 = GroupParams(3, 2, False)
G32 = GroupParams(1, 1, True)


def test_s_sequence_half_integers():
    assert s_sequence(hp([]), G32, 3) == [Fraction(1, 2), Fraction(3, 2), Fraction(5, 2)]
    assert s_sequence(hp([2, 1]), G32, 2) == [Fraction(-3, 2), Fraction(1, 2)]


def test_weight_diagram_diamond():
    w = weight_diagram(hp([4, 2, 1]), G64)
    assert w.to_text() == "D O ^ v ^*"


def test_freeze_marks_fake_cups():
    f = freeze(hp([4, 2, 1]), G64)
    assert [f.is_frozen(i) for i in range(8)] == [False] * 5 + [True] * 3
    f = freeze(hp([]), G32)
    assert not f.is_frozen(1) and f.is_frozen(2) and f.is_frozen(9)
    f = freeze(hp([3, 3, 3]), GroupParams(3, 3, True))
    assert not any(f.is_frozen(i) for i in range(6))


@pytest.mark.parametrize("parts,sign,text", [
    ([], "+", "^ ^ ^ v*"),
    ([], "-", "^ ^ v*"),
    ([2, 1], "+", "v v ^ v*"),
    ([2, 1], "-", "^ v ^ v*"),
])
def test_super_weight_osp32(parts, sign, text):
    assert super_weight(hp(parts, sign), G32).to_text() == text


def test_super_weight_circle_at_zero():
    assert super_weight(hp([4, 1, 1], "+"), G64).to_text() == "O ^ ^ v ^ ^ v*"
    assert super_weight(hp([4, 1, 1], "-"), G64).to_text() == "O ^ ^ v ^ v*"


def test_sign_contract():
    with pytest.raises(SignContractViolation):
        super_weight(hp([1]), G32)
    g = GroupParams(2, 2, False)
    with pytest.raises(SignContractViolation):
        super_weight(hp([2, 2, 2], "+"), g)
    assert signs_for(hp([2, 2, 2]), g) == (None,)
    assert signs_for(hp([1, 1]), g) == ("+", "-")


def test_hook_violation():
    with pytest.raises(HookViolation):
        super_weight(hp([2, 2], "+"), G32)


def test_bad_partition():
    with pytest.raises(ParseError):
        HookPartition((1, 2))


def test_linked_through_diamond():
    g = GroupParams(2, 2, False)
    a = super_weight(hp([], "+"), g)
    b = super_weight(hp([3, 2, 2, 1]), g)
    assert linked(a, b)
    assert not linked(super_weight(hp([], "+"), G32), super_weight(hp([], "-"), G32))


groups = st.builds(GroupParams, st.integers(0, 3), st.integers(0, 3), st.booleans())


@st.composite
def group_and_partition(draw):
    g = draw(groups)
    parts = hook_partitions(g, 9)
    return g, draw(st.sampled_from(parts))


@settings(max_examples=300, deadline=None)
@given(group_and_partition())
def test_hook_roundtrip(gp):
    g, gam = gp
    assert hook_from_weight(weight_from_hook(gam, g), g) == gam


@settings(max_examples=300, deadline=None)
@given(group_and_partition())
def test_tail_and_defect(gp):
    g, gam = gp
    t = tail_length(gam, g)   # asserts both tail formulas agree
    assert 0 <= t <= min(g.m, g.n)
    for s in signs_for(gam, g):
        w = super_weight(gam.with_sign(s), g)
        assert defect(w, g) == cup_diagram(w).num_cups()
        assert len(cup_diagram(w).dotted_cups()) >= t - (1 if not g.odd else 0)


@settings(max_examples=200, deadline=None)
@given(group_and_partition())
def test_text_roundtrip(gp):
    g, gam = gp
    for s in signs_for(gam, g):
        w = super_weight(gam.with_sign(s), g)
        assert parse_weight(w.to_text(), g.odd) == w
    f = freeze(gam, g)
    assert parse_weight(f.to_text(), g.odd) == f


def test_super_weights_distinct():
    for g in (G32, G64, GroupParams(2, 2, False)):
        ws = [w for _, w in super_weights(g, 8)]
        assert len(ws) == len(set(ws))


def test_coefficients_to_hook():
    from ospdiag.cli import parse_seed
    assert parse_seed("(2|1)+", G32)[0] == hp([2, 1], "+")
    assert parse_seed("(3|2)-", G32)[0] == hp([3, 1, 1], "-")
