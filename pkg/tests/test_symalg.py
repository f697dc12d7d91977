"""Symmetric-algebra structure maps, checked against a positional oracle.

The oracle computes comultiplication coefficients by brute force: every
member occurrence of a bag independently goes left or right, and the
coefficient of a split is the number of occurrence subsets realising it.
"""

from collections import Counter
from itertools import combinations

from diffmod import (AtomsObject, atom, bag, compose, get_rig, identity,
                     pair_chain)
from diffmod.symalg import (append_map, comultiply, counit_to_unit,
                            empty_bag_unit, multiply, singleton_map,
                            sym_object, sym_on_morphism)
from diffmod import from_columns, LinComb

from conftest import assert_equal_up_to

A, B = atom("a"), atom("b")
X = AtomsObject(["a", "b"])


def split_oracle(members):
    """Multiplicity of each (left, right) split over the natural numbers."""
    out = Counter()
    idx = range(len(members))
    for r in range(len(members) + 1):
        for chosen in combinations(idx, r):
            left = bag([members[i] for i in chosen])
            right = bag([members[i] for i in idx if i not in chosen])
            out[(left, right)] += 1
    return out


def comul_column_as_counter(rig_name, members):
    rig = get_rig(rig_name)
    col = comultiply(rig, X).column(bag(members), None)
    return {k: c for k, c in col.items()}


def test_comultiply_matches_split_oracle_over_nat():
    for members in ([], [A], [A, A], [A, B], [A, A, B], [A, A, A]):
        expect = split_oracle(members)
        got = comul_column_as_counter("nat", members)
        assert got == {pair_chain(k): c for k, c in expect.items()}


def test_comultiply_collapses_multiplicities_over_bool():
    got = comul_column_as_counter("bool", [A, A])
    expect = {pair_chain(k): 1 for k in split_oracle([A, A])}
    assert got == expect


def test_repeated_member_split_has_coefficient_two_over_nat():
    got = comul_column_as_counter("nat", [A, A])
    assert got[pair_chain((bag([A]), bag([A])))] == 2


def test_functor_preserves_identity_and_composition():
    rig = get_rig("nat")
    f = from_columns(rig, X, X, {A: LinComb.basis(rig, B),
                                 B: LinComb.basis(rig, A)}, name="f")
    assert_equal_up_to(sym_on_morphism(identity(rig, X)),
                       identity(rig, sym_object(X)), 3)
    assert_equal_up_to(sym_on_morphism(compose(f, f)),
                       compose(sym_on_morphism(f), sym_on_morphism(f)), 3)


def test_multiply_is_associative_and_unital():
    rig = get_rig("nat")
    m = multiply(rig, X)
    u = empty_bag_unit(rig, X)
    sx = sym_object(X)
    from diffmod import tensor_mor
    assert_equal_up_to(
        compose(m, tensor_mor(m, identity(rig, sx))),
        compose(m, tensor_mor(identity(rig, sx), m)), 3)
    assert_equal_up_to(
        compose(m, tensor_mor(u, identity(rig, sx))), identity(rig, sx), 3)


def test_append_and_singleton():
    rig = get_rig("nat")
    out = append_map(rig, X).column(pair_chain((bag([A]), B)), None)
    assert dict(out.items()) == {bag([A, B]): 1}
    assert dict(singleton_map(rig, X).column(A, None).items()) == {bag([A]): 1}


def test_counit_keeps_only_the_empty_bag():
    rig = get_rig("nat")
    eps = counit_to_unit(rig, X)
    assert dict(eps.column(bag([]), None).items()) == {pair_chain(()): 1}
    assert dict(eps.column(bag([A]), None).items()) == {}
