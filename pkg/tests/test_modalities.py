"""The two concrete comonads and their storage structure."""

from itertools import permutations

import pytest

from diffmod import (AtomsObject, NeedsWindow, atom, bag, bag_modality,
                     codereliction_from_deriving, deriving_from_codereliction,
                     get_rig, m_tensor_from_storage, m_unit_from_storage,
                     pair_chain, points_modality, run_suite)

from conftest import assert_equal_up_to

X = AtomsObject(["a"])
Y = AtomsObject(["b"])
X2 = AtomsObject(["a", "b"])
A, B = atom("a"), atom("b")


def assert_all_pass(reports):
    bad = [r for r in reports if not r.passed]
    assert not bad, [(r.suite, r.equation, r.witness) for r in bad]


def test_points_comonad_and_coalgebra():
    P = points_modality(get_rig("bool"))
    assert_all_pass(run_suite("comonad", P, (X2,), 3))
    assert_all_pass(run_suite("coalgebra", P, (X2,), 3))


def test_points_has_no_deriving_transformation():
    P = points_modality(get_rig("bool"))
    assert P.deriving(X) is None
    assert P.codereliction(X) is None


def test_bag_coalgebra_and_bialgebra():
    B_ = bag_modality(get_rig("bool"))
    assert_all_pass(run_suite("coalgebra", B_, (X,), 3))
    assert_all_pass(run_suite("bialgebra", B_, (X,), 3))


def test_bag_differential_rules_on_two_atoms():
    B_ = bag_modality(get_rig("bool"))
    assert_all_pass(run_suite("differential", B_, (X2,), 3))


def test_bag_delta_needs_a_window():
    B_ = bag_modality(get_rig("bool"))
    with pytest.raises(NeedsWindow):
        B_.delta(X).column(bag([A]), None)


def fuse_by_permutations(left, right):
    """Oracle: pair the occurrences of two equal-size bags in every way and
    count how many position bijections produce each fused bag."""
    out = {}
    for perm in permutations(range(len(right))):
        fused = bag([pair_chain((left[i], right[perm[i]]))
                     for i in range(len(left))])
        out[fused] = out.get(fused, 0) + 1
    return out


def test_bag_m_tensor_coefficients_over_nat():
    B_ = bag_modality(get_rig("nat"))
    m = B_.m_tensor(X2, X2)
    cases = [([A], [B]), ([A, A], [A, B]), ([A, B], [A, B]),
             ([A, A], [B, B]), ([A, A, B], [A, B, B])]
    for lm, rm in cases:
        got = dict(m.column(pair_chain((bag(lm), bag(rm))), None).items())
        assert got == fuse_by_permutations(lm, rm)


def test_bag_m_tensor_kills_mismatched_sizes():
    B_ = bag_modality(get_rig("nat"))
    m = B_.m_tensor(X2, X2)
    assert dict(m.column(pair_chain((bag([A]), bag([A, B]))), None).items()) == {}


def test_storage_isomorphism_recovers_the_monoidal_maps():
    B_ = bag_modality(get_rig("bool"))
    assert_equal_up_to(m_unit_from_storage(B_), B_.m_unit(), 3)
    assert_equal_up_to(m_tensor_from_storage(B_, X, Y), B_.m_tensor(X, Y), 3)


def test_codereliction_and_deriving_determine_each_other():
    B_ = bag_modality(get_rig("bool"))
    assert_equal_up_to(codereliction_from_deriving(B_, X2),
                       B_.codereliction(X2), 3)
    assert_equal_up_to(deriving_from_codereliction(B_, X2),
                       B_.deriving(X2), 3)
