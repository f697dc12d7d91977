"""Scalar rigs and the label grammar."""

import pytest

from diffmod import (BOOL, INT, NAT, Z2, atom, bag, get_rig, inl, inr, pair,
                     pair_chain, point)
from diffmod.labels import (UNIT, from_json, show_label, to_json,
                            unpair_chain)

A, B, C = atom("a"), atom("b"), atom("c")


def test_rig_registry():
    assert get_rig("bool") is BOOL
    assert get_rig("nat") is NAT
    assert get_rig("int") is INT
    assert get_rig("z2") is Z2
    with pytest.raises(KeyError):
        get_rig("real")


def test_bool_is_idempotent():
    assert BOOL.add(1, 1) == 1
    assert BOOL.mul(1, 1) == 1
    assert BOOL.add(0, 0) == 0
    # coefficients arriving from counting arguments collapse to 0/1
    assert BOOL.normalize(2) == 1
    assert BOOL.normalize(0) == 0


def test_z2_normalizes_mod_two():
    assert Z2.normalize(2) == 0
    assert Z2.normalize(3) == 1
    assert Z2.add(1, 1) == 0


def test_nat_and_int():
    assert NAT.add(2, 3) == 5
    assert NAT.mul(2, 3) == 6
    assert not NAT.has_negatives
    assert INT.has_negatives
    assert INT.add(2, -3) == -1


def test_weights():
    assert A.weight == 0
    assert UNIT.weight == 0
    assert pair(A, B).weight == 0
    assert bag([]).weight == 0
    assert bag([A, B]).weight == 2
    assert bag([bag([A])]).weight == 2          # 1 member + inner weight 1
    assert point([]).weight == 0
    assert point([(A, 1)]).weight == 1          # one entry over a weight-0 key
    assert point([(bag([A]), 1)]).weight == 2


def test_bags_are_unordered():
    assert bag([A, B]) == bag([B, A])
    assert bag([A, A, B]) == bag([B, A, A])
    assert bag([A]) != bag([A, A])


def test_points_are_unordered_and_drop_nothing():
    assert point([(A, 1), (B, 2)]) == point([(B, 2), (A, 1)])
    assert point([(A, 1)]) != point([(A, 2)])


def test_sum_injections_are_distinct():
    assert inl(A) != inr(A)
    assert inl(A) != A


def test_pair_chain_roundtrip():
    parts = (A, bag([B]), pair(A, C))
    assert unpair_chain(pair_chain(parts), 3) == parts
    assert pair_chain((A,)) == A
    assert pair_chain(()) == UNIT


def test_labels_sort_deterministically():
    labels = [bag([B]), A, UNIT, pair(A, B), bag([])]
    once = sorted(labels)
    assert sorted(reversed(labels)) == once


def test_json_roundtrip():
    rig = get_rig("nat")
    for lab in (A, UNIT, pair(A, bag([B, B])), inl(A), inr(bag([])),
                point([(bag([A]), 2), (B, 1)])):
        assert from_json(to_json(lab, rig), rig) == lab


def test_show_label_is_readable():
    assert "a" in show_label(A)
    assert show_label(bag([])) == "[]"
