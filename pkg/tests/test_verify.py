"""Exhaustive refutation, the z2 witness, and the relational oracle."""

from diffmod import (AtomsObject, lemma27_witness, refute_deriving,
                     rel_oracle_compare)
from diffmod.verify import _partial_matchings


def test_refutation_is_exhaustive_and_leaves_no_survivor():
    out = refute_deriving(x_size=1, max_weight=3)
    assert out["candidatesTested"] == 16
    assert out["survivors"] == []


def test_two_distinct_coalgebra_morphisms_over_z2():
    reports = lemma27_witness(max_weight=4)
    assert len(reports) == 6
    assert all(r.passed for r in reports), \
        [(r.equation, r.witness) for r in reports if not r.passed]
    assert any(r.equation.startswith("maps-distinct") for r in reports)


def test_relational_oracle_agrees_with_the_construction():
    x = AtomsObject(["a", "b"])
    y = AtomsObject(["c"])
    reports = rel_oracle_compare(x, y, max_weight=2, m_weight=2)
    assert len(reports) == 11
    bad = [r for r in reports if not r.passed]
    assert not bad, [(r.equation, r.witness) for r in bad]


def test_partial_matchings_count():
    # between two 2-element ranges: the empty matching, four single
    # pairs, and two perfect matchings
    assert len(_partial_matchings(2, 2)) == 7
    assert len(_partial_matchings(0, 3)) == 1
