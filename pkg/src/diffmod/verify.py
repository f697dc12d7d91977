"""Refutations, witnesses, and the independent sets-and-relations oracle.

* ``refute_deriving`` shows by exhaustive search that the points
  modality admits no deriving transformation even on a one-atom object:
  the constant rule forces the empty relation and the linear rule rules
  it out.

* ``lemma27_witness`` builds the two-dimensional z2 coalgebra with a
  primitive generator and exhibits two distinct coalgebra morphisms
  into the free differential modality on a one-dimensional object that
  agree under the counit-to-object map.

* ``rel_oracle`` re-implements, straight from their relational
  descriptions, all eleven structure maps of the free differential
  modality on points over bool, so the generic construction can be
  compared against an independent route.
"""

import itertools
import time
from typing import Dict, List, Optional

from .category import (AtomsObject, LinComb, Morphism, UNIT_OBJ,
                       enumerate_basis, from_columns, morphisms_equal_up_to,
                       nfactors, tensor, tensor_mor)
from .equations import CheckReport, Equation, Gens, check_equation, evaluate
from .freediff import free_differential
from .labels import UNIT, Label, atom, bag, pair_chain, point, unpair_chain
from .modalities import points_modality, set_partitions
from .rig import BOOL, Z2


# ---------------------------------------------------------------------------
# exhaustive refutation: no deriving transformation on the points modality


def refute_deriving(x_size: int = 1, max_weight: int = 3) -> dict:
    if x_size > 2:
        raise ValueError("search space too large for object size %d" % x_size)
    rig = BOOL
    x = AtomsObject(["a", "b"][:x_size])
    bundle = points_modality(rig)
    px = bundle.on_object(x)
    src = tensor(px, x)
    src_labels = enumerate_basis(src, x_size + 1)
    tgt_labels = enumerate_basis(px, x_size + 1)

    candidates = []
    for choice in itertools.product(range(2 ** len(tgt_labels)), repeat=len(src_labels)):
        table = {}
        for lbl, mask in zip(src_labels, choice):
            lc = LinComb(rig, {t: 1 for i, t in enumerate(tgt_labels) if mask >> i & 1})
            if lc:
                table[lbl] = lc
        candidates.append(table)

    from .equations import differential_suite
    survivors = []
    # the chain rule needs d at PX as well, which a lone candidate cannot
    # supply; constant + linear already leave no survivors
    rules = ("constant-rule", "linear-rule", "product-rule", "interchange-rule")
    for table in candidates:
        cand = from_columns(rig, src, px, table, name="d?")
        over = Gens(bundle, {"deriving": lambda b, obj, c=cand: c})
        alive = True
        for eq in differential_suite(over, x):
            if eq.id not in rules:
                continue
            lhs = evaluate(eq.lhs, over)
            rhs = evaluate(eq.rhs, over)
            ok, _ = morphisms_equal_up_to(lhs, rhs, max_weight)
            if not ok:
                alive = False
                break
        if alive:
            survivors.append(sorted(
                (repr(l), repr(v)) for l, v in table.items()))
    return {"candidatesTested": len(candidates), "survivors": survivors}


# ---------------------------------------------------------------------------
# the z2 witness: coalgebra maps are not determined by their counit composite


def primitive_coalgebra(rig):
    """The two-dimensional coalgebra with a grouplike generator ``one`` and
    a primitive generator ``d``: e(one)=1, e(d)=0, split(one)=one*one,
    split(d)=d*one+one*d."""
    c = AtomsObject(["one", "pd"])
    one, d = atom("one"), atom("pd")
    e = from_columns(rig, c, UNIT_OBJ,
                     {one: LinComb.basis(rig, UNIT)}, name="e_C")
    comul = from_columns(rig, c, tensor(c, c), {
        one: LinComb.basis(rig, pair_chain((one, one))),
        d: LinComb(rig, {pair_chain((d, one)): rig.one,
                         pair_chain((one, d)): rig.one}),
    }, name="split_C")
    return c, e, comul


def lemma27_witness(max_weight: int = 4) -> List[CheckReport]:
    rig = Z2
    x = AtomsObject(["x"])
    xa = atom("x")
    base = points_modality(rig)
    free = free_differential(base)
    dx = free.on_object(x)
    c, e_c, comul_c = primitive_coalgebra(rig)
    one, d = atom("one"), atom("pd")

    j0 = point(())                      # the zero point of X
    lab_unit = pair_chain((j0, bag(())))
    lab_x = pair_chain((j0, bag((xa,))))
    lab_xx = pair_chain((j0, bag((xa, xa))))

    f = from_columns(rig, c, dx, {
        one: LinComb.basis(rig, lab_unit),
        d: LinComb.basis(rig, lab_x),
    }, name="f")
    f_prime = from_columns(rig, c, dx, {
        one: LinComb.basis(rig, lab_unit),
        d: LinComb(rig, {lab_x: 1, lab_xx: 1}),
    }, name="f'")

    gens = Gens(base)
    reports = []

    def comonoid_checks(m, tag):
        return [
            Equation("%s-counit" % tag, "lemma27",
                     ("compose", ("mor", m), ("mor", free.e(x))),
                     ("mor", e_c)),
            Equation("%s-comul" % tag, "lemma27",
                     ("compose", ("mor", m), ("mor", free.comul(x))),
                     ("compose", ("mor", comul_c), ("tensor", ("mor", m), ("mor", m)))),
        ]

    for eq in comonoid_checks(f, "f") + comonoid_checks(f_prime, "f-prime"):
        reports.append(check_equation(eq, gens, max_weight, objects=(c, x)))
    reports.append(check_equation(
        Equation("counit-composites-agree", "lemma27",
                 ("compose", ("mor", f), ("mor", free.eps(x))),
                 ("compose", ("mor", f_prime), ("mor", free.eps(x)))),
        gens, max_weight, objects=(c, x)))
    # the witness itself: the two maps differ (reported as an expected fail)
    distinct = check_equation(
        Equation("maps-distinct", "lemma27", ("mor", f), ("mor", f_prime)),
        gens, max_weight, objects=(c, x))
    distinct.status = "pass" if distinct.status == "fail" else "fail"
    distinct.equation = "maps-distinct (inequality)"
    reports.append(distinct)
    return reports


# ---------------------------------------------------------------------------
# the relational closed-form oracle over bool


def _support(p: Label):
    return frozenset(k for k, _ in p.payload)


def _point_of(keys) -> Label:
    return point((k, 1) for k in sorted(keys, key=Label.sort_key))


class RelOracle:
    """Closed-form structure maps of the free differential modality on
    points, over bool, built independently of the generic construction."""

    def __init__(self, x):
        self.rig = BOOL
        self.base = points_modality(BOOL)
        self.free = free_differential(self.base)
        self.x = x
        self.dx = self.free.on_object(x)

    def _mor(self, src, tgt, col, name, **kw):
        kw.setdefault("shift_lo", None)
        kw.setdefault("shift_hi", None)
        kw.setdefault("finite_columns", True)
        return Morphism(BOOL, src, tgt, col, name=name, **kw)

    def on_morphism(self, r: Morphism) -> Morphism:
        """Direct image on the point, elementwise matching on the bag."""
        free = free_differential(self.base)
        src = free.on_object(r.source)
        tgt = free.on_object(r.target)

        def col(label, wmax):
            p, b = unpair_chain(label, 2)
            image = set()
            for k in _support(p):
                image |= set(r.column(k).terms)
            v = _point_of(image)
            out = {}
            pools = [sorted(r.column(m).terms, key=Label.sort_key)
                     for m in b.payload]
            for combo in itertools.product(*pools):
                out[pair_chain((v, bag(combo)))] = 1
            return LinComb(BOOL, out).truncated(wmax)

        return self._mor(src, tgt, col, "P~(%s)" % r.name)

    def eps(self) -> Morphism:
        def col(label, wmax):
            p, b = unpair_chain(label, 2)
            if len(b.payload) == 1:
                return LinComb.basis(BOOL, b.payload[0]).truncated(wmax)
            if not b.payload:
                return LinComb(BOOL, {k: 1 for k in _support(p)}).truncated(wmax)
            return LinComb.zero(BOOL)
        return self._mor(self.dx, self.x, col, "eps~")

    def e(self) -> Morphism:
        def col(label, wmax):
            _, b = unpair_chain(label, 2)
            if not b.payload:
                return LinComb.basis(BOOL, UNIT).truncated(wmax)
            return LinComb.zero(BOOL)
        return self._mor(self.dx, UNIT_OBJ, col, "e~")

    def comul(self) -> Morphism:
        def col(label, wmax):
            p, b = unpair_chain(label, 2)
            out = {}
            members = list(b.payload)
            for mask in range(2 ** len(members)):
                left = bag(m for i, m in enumerate(members) if mask >> i & 1)
                right = bag(m for i, m in enumerate(members) if not mask >> i & 1)
                out[pair_chain((p, left, p, right))] = 1
            return LinComb(BOOL, out).truncated(wmax)
        return self._mor(self.dx, tensor(self.dx, self.dx), col, "split~")

    def delta(self) -> Morphism:
        ddx = self.free.on_object(self.dx)

        def col(label, wmax):
            p, b = unpair_chain(label, 2)
            outer = _point_of([pair_chain((p, bag(())))])
            out = {}
            for part in set_partitions(list(b.payload)):
                inner = bag(pair_chain((p, bag(block))) for block in part)
                out[pair_chain((outer, inner))] = 1
            return LinComb(BOOL, out).truncated(wmax)
        return self._mor(self.dx, ddx, col, "delta~")

    def deriving(self) -> Morphism:
        src = tensor(self.dx, self.x)

        def col(label, wmax):
            p, b, elem = unpair_chain(label, 3)
            return LinComb.basis(
                BOOL, pair_chain((p, bag(b.payload + (elem,))))).truncated(wmax)
        return self._mor(src, self.dx, col, "d~")

    def nabla(self) -> Morphism:
        def col(label, wmax):
            p1, b1, p2, b2 = unpair_chain(label, 4)
            joined = pair_chain((_point_of(_support(p1) | _support(p2)),
                                 bag(b1.payload + b2.payload)))
            return LinComb.basis(BOOL, joined).truncated(wmax)
        return self._mor(tensor(self.dx, self.dx), self.dx, col, "nabla~")

    def u(self) -> Morphism:
        def col(label, wmax):
            return LinComb.basis(
                BOOL, pair_chain((point(()), bag(())))).truncated(wmax)
        return self._mor(UNIT_OBJ, self.dx, col, "u~")

    def codereliction(self) -> Morphism:
        def col(label, wmax):
            return LinComb.basis(
                BOOL, pair_chain((point(()), bag((label,))))).truncated(wmax)
        return self._mor(self.x, self.dx, col, "eta~")

    def m_unit(self) -> Morphism:
        di = self.free.on_object(UNIT_OBJ)

        def col(label, wmax):
            return LinComb.basis(
                BOOL, pair_chain((point(((UNIT, 1),)), bag(())))).truncated(wmax)
        return self._mor(UNIT_OBJ, di, col, "m_I~")

    def m_tensor(self, y, oracle_y: "RelOracle") -> Morphism:
        """Partial matchings between the two bags; unmatched elements on
        either side pair with arbitrary points of the other support."""
        free = self.free
        dy = oracle_y.dx
        src = tensor(self.dx, dy)
        tgt = free.on_object(tensor(self.x, y))
        nx, ny = nfactors(self.x), nfactors(y)

        def join(a, c):
            return pair_chain(list(unpair_chain(a, nx)) + list(unpair_chain(c, ny)))

        def col(label, wmax):
            p, b, q, cbag = unpair_chain(label, 4)
            us, vs = _support(p), _support(q)
            prod_point = _point_of(join(a, c) for a in us for c in vs)
            bs, cs = list(b.payload), list(cbag.payload)
            out = {}
            for matching in _partial_matchings(len(bs), len(cs)):
                matched_b = {i for i, _ in matching}
                matched_c = {j for _, j in matching}
                fixed = [join(bs[i], cs[j]) for i, j in matching]
                free_b = [i for i in range(len(bs)) if i not in matched_b]
                free_c = [j for j in range(len(cs)) if j not in matched_c]
                pools = [[join(bs[i], v) for v in sorted(vs, key=Label.sort_key)]
                         for i in free_b]
                pools += [[join(u, cs[j]) for u in sorted(us, key=Label.sort_key)]
                          for j in free_c]
                for combo in itertools.product(*pools):
                    out[pair_chain((prod_point, bag(fixed + list(combo))))] = 1
            return LinComb(BOOL, out).truncated(wmax)

        return self._mor(src, tgt, col, "m~")


def _partial_matchings(n, m):
    """All sets of disjoint index pairs between ranges n and m."""
    out = [[]]
    for i in range(n):
        nxt = []
        for matching in out:
            nxt.append(matching)
            used = {j for _, j in matching}
            for j in range(m):
                if j not in used:
                    nxt.append(matching + [(i, j)])
        out = nxt
    return out


def rel_oracle_compare(x, y, max_weight: int = 3,
                       m_weight: int = 2) -> List[CheckReport]:
    """Compare every closed-form structure map against the construction."""
    oracle = RelOracle(x)
    oracle_y = RelOracle(y)
    free = oracle.free
    rig = BOOL

    sample = _sample_relation(rig, x, y)
    cases = [
        ("functor-action", oracle.on_morphism(sample), free.on_morphism(sample), max_weight),
        ("eps", oracle.eps(), free.eps(x), max_weight),
        ("delta", oracle.delta(), free.delta(x), max_weight),
        ("comul", oracle.comul(), free.comul(x), max_weight),
        ("e", oracle.e(), free.e(x), max_weight),
        ("deriving", oracle.deriving(), free.deriving(x), max_weight),
        ("nabla", oracle.nabla(), free.nabla(x), max_weight),
        ("u", oracle.u(), free.u(x), max_weight),
        ("codereliction", oracle.codereliction(), free.codereliction(x), max_weight),
        ("m-unit", oracle.m_unit(), free.m_unit(), max_weight),
        ("m-tensor", oracle.m_tensor(y, oracle_y), free.m_tensor(x, y), m_weight),
    ]
    reports = []
    for name, lhs, rhs, d in cases:
        start = time.monotonic()
        ok, failures = morphisms_equal_up_to(lhs, rhs, d)
        reports.append(CheckReport(
            suite="rel-oracle", equation=name, rig="bool",
            objects=[x.name, y.name], weight=d, window=None,
            status="pass" if ok else "fail",
            witness=failures[0] if failures else None,
            millis=int((time.monotonic() - start) * 1000)))
    return reports


def _sample_relation(rig, x, y) -> Morphism:
    """A deterministic non-functional relation: the first atom of x maps to
    every atom of y, the rest map to the first atom of y."""
    xs = enumerate_basis(x, 0)
    ys = enumerate_basis(y, 0)
    table = {}
    if xs and ys:
        table[xs[0]] = LinComb(rig, {b: rig.one for b in ys})
        for a in xs[1:]:
            table[a] = LinComb.basis(rig, ys[0])
    return from_columns(rig, x, y, table, name="R")
