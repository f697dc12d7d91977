"""Acceptance gate: twelve criteria, each printed as one pass/fail line.

Every comparison is exact (scalar equality in the chosen rig inside the
truncation window); there are no tolerances.  Run with ``-s`` to see the
per-criterion lines as they complete.
"""

import random
import time
from collections import Counter
from itertools import combinations

import diffmod as dm
from diffmod import (ActionData, AtomsObject, LinComb, add_morphisms, atom,
                     bag, bag_modality, compose, free_differential,
                     from_columns, get_rig, identity, morphisms_equal_up_to,
                     pair, pair_chain, points_modality, rho, rho_sharp,
                     run_morphism_suite, run_suite, tensor_mor,
                     universal_extend, zero_mutant)
from diffmod.equations import Gens, build_suite, check_equation
from diffmod.labels import UNIT
from diffmod.symalg import append_map, comultiply, empty_bag_unit
from diffmod.verify import lemma27_witness, refute_deriving, rel_oracle_compare

from test_actions import check_universal_property, random_commuting_instance

BOOL = get_rig("bool")
X1 = AtomsObject(["a"])
X2 = AtomsObject(["a", "b"])
Y1 = AtomsObject(["b"])
A, B = atom("a"), atom("b")


def criterion(n, text, ok, started):
    line = "criterion %02d [%s] %s (%.2fs)" % (
        n, "PASS" if ok else "FAIL", text, time.time() - started)
    print(line)
    assert ok, line


def all_pass(reports):
    return all(r.passed for r in reports)


def test_c01_free_differential_on_points_satisfies_the_derivative_rules():
    t0 = time.time()
    FP = free_differential(points_modality(BOOL))
    ok = all(all_pass(run_suite("differential", FP, (x,), 4))
             for x in (X1, X2))
    ok = ok and time.time() - t0 < 60
    criterion(1, "derivative rules for the free construction at weight 4", ok, t0)


def test_c02_bag_modality_satisfies_the_derivative_and_codereliction_rules():
    t0 = time.time()
    BB = bag_modality(BOOL)
    ok = all_pass(run_suite("differential", BB, (X2,), 4))
    ok = ok and all_pass(run_suite("codereliction", BB, (X1, Y1), 4))
    ok = ok and time.time() - t0 < 60
    criterion(2, "bag derivative and codereliction rules at weight 4", ok, t0)


def test_c03_comonad_coalgebra_and_bialgebra_axioms_hold_everywhere():
    t0 = time.time()
    bundles = [points_modality(BOOL), bag_modality(BOOL),
               free_differential(points_modality(BOOL))]
    ok = all(all_pass(run_suite(s, b, (X1,), 3))
             for b in bundles for s in ("comonad", "coalgebra", "bialgebra"))
    ok = ok and time.time() - t0 < 120
    criterion(3, "comonad, coalgebra and bialgebra axioms for all three "
                 "modalities at weight 3", ok, t0)


def test_c04_storage_isomorphisms():
    t0 = time.time()
    bundles = [points_modality(BOOL), bag_modality(BOOL),
               free_differential(points_modality(BOOL))]
    ok = all(all_pass(run_suite("seely", b, (X1, Y1), 3)) for b in bundles)
    criterion(4, "biproduct-to-tensor storage isomorphisms at weight 3", ok, t0)


def test_c05_no_deriving_transformation_on_the_points_modality():
    t0 = time.time()
    out = refute_deriving(x_size=1, max_weight=3)
    ok = out["candidatesTested"] == 16 and out["survivors"] == []
    ok = ok and time.time() - t0 < 1
    criterion(5, "all 16 candidate deriving transformations on the points "
                 "functor refuted in under a second", ok, t0)


def test_c06_relational_oracle_agreement():
    t0 = time.time()
    reports = rel_oracle_compare(X2, X2, max_weight=3, m_weight=2)
    ok = len(reports) == 11 and all_pass(reports)
    ok = ok and time.time() - t0 < 120
    criterion(6, "independent relational oracle agrees on all 11 structure "
                 "maps", ok, t0)


def test_c07_two_distinct_coalgebra_morphisms_over_z2():
    t0 = time.time()
    reports = lemma27_witness(max_weight=4)
    ok = len(reports) == 6 and all_pass(reports)
    ok = ok and time.time() - t0 < 5
    criterion(7, "two distinct coalgebra morphisms onto the same coalgebra "
                 "over z2", ok, t0)


def test_c08_universal_property_on_randomized_instances():
    t0 = time.time()
    rng = random.Random(2026)
    for _ in range(100):
        action, f = random_commuting_instance(rng)
        check_universal_property(action, f)
    criterion(8, "universal property of the free commuting action on 100 "
                 "randomized instances", True, t0)


def test_c09_freeness_of_the_differential_construction():
    t0 = time.time()
    P = points_modality(BOOL)
    FP = free_differential(P)
    BB = bag_modality(BOOL)
    ext = FP.extend(FP.zeta(X1),
                    ActionData(FP.on_object(X1), X1, FP.deriving(X1)))
    ok, _ = morphisms_equal_up_to(ext, identity(BOOL, FP.on_object(X1)), 3)
    rs = rho_sharp(FP, BB, X1)
    ok2, _ = morphisms_equal_up_to(compose(rs, FP.zeta(X1)), rho(P, BB, X1), 3)
    criterion(9, "extensions along the unit recover the identity and the "
                 "initial morphism", ok and ok2, t0)


def test_c10_codereliction_and_deriving_round_trip():
    t0 = time.time()
    BB = bag_modality(BOOL)
    d = BB.deriving(X2)
    eta = dm.codereliction_from_deriving(BB, X2, d=d)
    back = dm.deriving_from_codereliction(BB, X2, eta=eta)
    ok, _ = morphisms_equal_up_to(back, d, 3)
    criterion(10, "deriving -> codereliction -> deriving round trip is exact",
              ok, t0)


def split_oracle(members):
    out = Counter()
    idx = range(len(members))
    for r in range(len(members) + 1):
        for chosen in combinations(idx, r):
            left = bag([members[i] for i in chosen])
            right = bag([members[i] for i in idx if i not in chosen])
            out[pair_chain((left, right))] += 1
    return dict(out)


def test_c11_splitting_coefficients_match_the_positional_oracle():
    t0 = time.time()
    nat_col = dict(comultiply(get_rig("nat"), X1).column(bag([A, A]), None).items())
    bool_col = dict(comultiply(BOOL, X1).column(bag([A, A]), None).items())
    expect = split_oracle([A, A])
    diag = pair_chain((bag([A]), bag([A])))
    ok = (nat_col == expect and expect[diag] == 2
          and bool_col == {k: 1 for k in expect})
    criterion(11, "bag splitting coefficients: 2 over the naturals, "
                  "collapsed to 1 over bool", ok, t0)


# --------------------------------------------------------------------------
# criterion 12: a single-fault mutant for every equation in every suite


def perturb(name, src_label, out_label):
    """Add one extra matrix entry to a structure map; skipped silently at
    the objects where the entry does not typecheck, so a mutation bound to
    one object leaves the same generator at other objects intact."""
    def factory(bundle, *objs):
        orig = dm.equations.GEN_DISPATCH[name](bundle, *objs)
        if not (orig.source.contains_cached(src_label)
                and orig.target.contains_cached(out_label)):
            return orig
        noise = from_columns(bundle.rig, orig.source, orig.target,
                             {src_label: LinComb.basis(bundle.rig, out_label)},
                             name="noise")
        return add_morphisms(orig, noise)
    return factory


BAG_A = bag([A])
BAG_AA = bag([A, A])
EMPTY = bag([])

MUTANTS = {
    ("comonad", "counit-outer"): ("eps", zero_mutant("eps")),
    ("comonad", "counit-inner"): ("eps", zero_mutant("eps")),
    ("comonad", "coassociativity"):
        ("delta", perturb("delta", BAG_A, bag([BAG_A, BAG_A]))),
    ("coalgebra", "comonoid-counit-left"): ("e", zero_mutant("e")),
    ("coalgebra", "comonoid-counit-right"): ("e", zero_mutant("e")),
    ("coalgebra", "comonoid-coassociativity"):
        ("comul", perturb("comul", BAG_A, pair_chain((BAG_AA, EMPTY)))),
    ("coalgebra", "comonoid-cocommutativity"):
        ("comul", perturb("comul", BAG_A, pair_chain((BAG_AA, EMPTY)))),
    ("coalgebra", "comul-morphism-e"):
        ("e", perturb("e", bag([BAG_A]), UNIT)),
    ("coalgebra", "comul-morphism-comul"):
        ("comul", perturb("comul", bag([BAG_A]),
                          pair_chain((bag([BAG_A]), bag([BAG_A]))))),
    ("differential", "constant-rule"):
        ("deriving", perturb("deriving", pair_chain((EMPTY, A)), EMPTY)),
    ("differential", "linear-rule"):
        ("deriving", perturb("deriving", pair_chain((BAG_A, A)), BAG_A)),
    ("differential", "product-rule"):
        ("deriving", perturb("deriving", pair_chain((EMPTY, A)), BAG_AA)),
    ("differential", "chain-rule"):
        ("deriving", perturb("deriving", pair_chain((EMPTY, A)), BAG_AA)),
    ("differential", "interchange-rule"):
        ("deriving", perturb("deriving", pair_chain((BAG_A, B)), EMPTY)),
    ("codereliction", "coder-counit"): ("coder", zero_mutant("coder")),
    ("codereliction", "coder-comul"): ("coder", perturb("coder", A, BAG_AA)),
    ("codereliction", "coder-monoidal"): ("coder", perturb("coder", A, EMPTY)),
    ("bialgebra", "monoid-associativity"):
        ("nabla", perturb("nabla", pair_chain((BAG_A, EMPTY)), BAG_AA)),
    ("bialgebra", "monoid-unit-left"): ("u", zero_mutant("u")),
    ("bialgebra", "monoid-unit-right"): ("u", zero_mutant("u")),
    ("bialgebra", "monoid-commutativity"):
        ("nabla", perturb("nabla", pair_chain((BAG_A, EMPTY)), BAG_AA)),
    ("bialgebra", "bimonoid-comul"):
        ("nabla", perturb("nabla", pair_chain((BAG_A, EMPTY)), BAG_AA)),
    ("bialgebra", "bimonoid-counit"):
        ("nabla", perturb("nabla", pair_chain((BAG_A, EMPTY)), EMPTY)),
    ("bialgebra", "bimonoid-unit-comul"): ("u", perturb("u", UNIT, BAG_A)),
    ("bialgebra", "bimonoid-unit-counit"): ("u", zero_mutant("u")),
    ("bialgebra", "counit-additive-nabla"): ("e", perturb("e", BAG_A, UNIT)),
    ("bialgebra", "counit-additive-u"): ("u", perturb("u", UNIT, BAG_A)),
    ("bialgebra", "convolution-zero"): ("u", perturb("u", UNIT, BAG_A)),
    ("bialgebra", "convolution-sum-0"):
        ("comul", perturb("comul", BAG_A, pair_chain((BAG_AA, EMPTY)))),
    ("bialgebra", "convolution-sum-1"):
        ("comul", perturb("comul", BAG_A, pair_chain((BAG_AA, EMPTY)))),
    ("bialgebra", "convolution-sum-2"):
        ("comul", perturb("comul", BAG_A, pair_chain((BAG_AA, EMPTY)))),
    ("monoidal", "eps-monoidal-binary"): ("m_tensor", zero_mutant("m_tensor")),
    ("monoidal", "eps-monoidal-nullary"): ("m_unit", zero_mutant("m_unit")),
    ("monoidal", "delta-monoidal-binary"):
        ("delta", perturb("delta", EMPTY, bag([bag([pair(A, B)])]))),
    ("monoidal", "delta-monoidal-nullary"): ("delta", zero_mutant("delta")),
    ("seely", "storage-retract"): ("comul", zero_mutant("comul")),
    ("seely", "storage-section"): ("comul", zero_mutant("comul")),
    ("seely", "storage-top-retract"): ("e", zero_mutant("e")),
    ("seely", "storage-top-section"): ("e", zero_mutant("e")),
}

SUITE_OBJECTS = [("comonad", (X1,)), ("coalgebra", (X1,)),
                 ("differential", (X2,)), ("codereliction", (X1, Y1)),
                 ("bialgebra", (X1,)), ("monoidal", (X1, Y1)),
                 ("seely", (X1, AtomsObject(["c"])))]


def test_c12_every_equation_kills_its_documented_mutant():
    t0 = time.time()
    BB = bag_modality(BOOL)
    survivors = []
    total = 0
    for suite, objs in SUITE_OBJECTS:
        for eq in build_suite(suite, Gens(BB), objs):
            total += 1
            gen, factory = MUTANTS[(suite, eq.id)]
            report = check_equation(eq, Gens(BB, {gen: factory}), 3)
            if report.status != "fail":
                survivors.append((suite, eq.id))
    ok = total == len(MUTANTS) and not survivors
    criterion(12, "every one of the %d suite equations kills its "
                  "single-fault mutant: %r survived" % (total, survivors),
              ok, t0)
