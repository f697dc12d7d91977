"""Equation library and suite runner.

Equations are small expression trees over named modality generators
(eps, delta, e, comul, u, nabla, m_unit, m_tensor, deriving, coder),
the structural morphisms (id, swap, zero, injections/projections) and
the combinators compose / tensor / add / lift (application of the
modality functor).  Trees are evaluated against a ``Gens`` environment,
which wraps a modality bundle and supports overriding any generator --
that is what the mutation-sensitivity tests hook into.

Composition in trees is written in diagram order:
("compose", f, g) means "f then g".
"""

import time
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional

from .actions import (ActionData, boxtimes, free_action, free_nilsquare,
                      is_commuting, lift_modality, trivial_action)
from .category import (Morphism, UNIT_OBJ, add_morphisms, biproduct, compose,
                       compose_chain, identity, inj_left, inj_right,
                       morphisms_equal_up_to, proj_left, proj_right,
                       symmetry, tensor, tensor_many, tensor_mor,
                       zero_morphism, ZERO_OBJ)
from .labels import to_json


GEN_DISPATCH = {
    "eps": lambda b, x: b.eps(x),
    "delta": lambda b, x: b.delta(x),
    "e": lambda b, x: b.e(x),
    "comul": lambda b, x: b.comul(x),
    "u": lambda b, x: b.u(x),
    "nabla": lambda b, x: b.nabla(x),
    "m_unit": lambda b: b.m_unit(),
    "m_tensor": lambda b, x, y: b.m_tensor(x, y),
    "deriving": lambda b, x: b.deriving(x),
    "coder": lambda b, x: b.codereliction(x),
}


class Gens:
    """Generator environment: a bundle plus optional overrides."""

    def __init__(self, bundle, overrides: Optional[Dict[str, Callable]] = None):
        self.bundle = bundle
        self.rig = bundle.rig
        self.overrides = overrides or {}

    def get(self, name: str, *objs) -> Morphism:
        if name in self.overrides:
            return self.overrides[name](self.bundle, *objs)
        try:
            make = GEN_DISPATCH[name]
        except KeyError:
            raise KeyError("unknown generator %r" % name)
        m = make(self.bundle, *objs)
        if m is None:
            raise ValueError("bundle %s does not provide %r" % (self.bundle.kind, name))
        return m

    def lift(self, f: Morphism) -> Morphism:
        return self.bundle.on_morphism(f)

    def mutated(self, name: str, factory: Callable) -> "Gens":
        new = dict(self.overrides)
        new[name] = factory
        return Gens(self.bundle, new)


def zero_mutant(name: str) -> Callable:
    """Replace a generator by the zero morphism with the same endpoints."""
    def factory(bundle, *objs):
        true = GEN_DISPATCH[name](bundle, *objs)
        return zero_morphism(bundle.rig, true.source, true.target,
                             name="0[%s]" % name)
    return factory


def evaluate(expr, gens: Gens) -> Morphism:
    op = expr[0]
    if op == "gen":
        return gens.get(expr[1], *expr[2:])
    if op == "lift":
        return gens.lift(evaluate(expr[1], gens))
    if op == "compose":
        return compose_chain(*[evaluate(e, gens) for e in expr[1:]])
    if op == "tensor":
        return tensor_many(*[evaluate(e, gens) for e in expr[1:]])
    if op == "add":
        return add_morphisms(*[evaluate(e, gens) for e in expr[1:]])
    if op == "id":
        return identity(gens.rig, expr[1])
    if op == "swap":
        return symmetry(gens.rig, expr[1], expr[2])
    if op == "zero":
        return zero_morphism(gens.rig, expr[1], expr[2])
    if op == "mor":
        return expr[1]
    raise ValueError("unknown expression node %r" % (op,))


@dataclass
class Equation:
    id: str
    suite: str
    lhs: tuple
    rhs: tuple
    window: Optional[int] = None     # explicit inspection window, if any


@dataclass
class CheckReport:
    suite: str
    equation: str
    rig: str
    objects: List[str]
    weight: int
    window: Optional[int]
    status: str                      # "pass" | "fail"
    witness: Optional[tuple] = None  # (source label, lhs column, rhs column)
    millis: int = 0

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self, rig):
        out = {
            "suite": self.suite,
            "equation": self.equation,
            "objects": self.objects,
            "rig": self.rig,
            "weight": self.weight,
            "status": self.status,
            "millis": self.millis,
        }
        if self.window is not None:
            out["window"] = self.window
        if self.witness is not None:
            label, lhs, rhs = self.witness
            out["witness"] = {
                "source": to_json(label, rig),
                "lhs": [[to_json(l, rig), rig.encode(v)] for l, v in sorted(
                    lhs.items(), key=lambda kv: kv[0].sort_key())],
                "rhs": [[to_json(l, rig), rig.encode(v)] for l, v in sorted(
                    rhs.items(), key=lambda kv: kv[0].sort_key())],
            }
        return out


def check_equation(eq: Equation, gens: Gens, max_weight: int,
                   objects=(), window: Optional[int] = None) -> CheckReport:
    start = time.monotonic()
    lhs = evaluate(eq.lhs, gens)
    rhs = evaluate(eq.rhs, gens)
    if window is None:
        window = eq.window
    ok, failures = morphisms_equal_up_to(lhs, rhs, max_weight, window=window)
    millis = int((time.monotonic() - start) * 1000)
    eff_window = None
    if not (lhs.finite_columns and rhs.finite_columns):
        eff_window = window if window is not None else 2 * max_weight + 3
    return CheckReport(
        suite=eq.suite, equation=eq.id, rig=gens.rig.name,
        objects=[o.name for o in objects], weight=max_weight,
        window=eff_window, status="pass" if ok else "fail",
        witness=failures[0] if failures else None, millis=millis)


# ---------------------------------------------------------------------------
# suite definitions


def comonad_suite(gens: Gens, x) -> List[Equation]:
    bx = gens.bundle.on_object(x)
    return [
        Equation("counit-outer", "comonad",
                 ("compose", ("gen", "delta", x), ("gen", "eps", bx)),
                 ("id", bx)),
        Equation("counit-inner", "comonad",
                 ("compose", ("gen", "delta", x), ("lift", ("gen", "eps", x))),
                 ("id", bx)),
        Equation("coassociativity", "comonad",
                 ("compose", ("gen", "delta", x), ("gen", "delta", bx)),
                 ("compose", ("gen", "delta", x), ("lift", ("gen", "delta", x)))),
    ]


def coalgebra_suite(gens: Gens, x) -> List[Equation]:
    bundle = gens.bundle
    bx = bundle.on_object(x)
    idb = ("id", bx)
    comul = ("gen", "comul", x)
    delta = ("gen", "delta", x)
    return [
        Equation("comonoid-counit-left", "coalgebra",
                 ("compose", comul, ("tensor", ("gen", "e", x), idb)), idb),
        Equation("comonoid-counit-right", "coalgebra",
                 ("compose", comul, ("tensor", idb, ("gen", "e", x))), idb),
        Equation("comonoid-coassociativity", "coalgebra",
                 ("compose", comul, ("tensor", comul, idb)),
                 ("compose", comul, ("tensor", idb, comul))),
        Equation("comonoid-cocommutativity", "coalgebra",
                 ("compose", comul, ("swap", bx, bx)), comul),
        Equation("comul-morphism-e", "coalgebra",
                 ("compose", delta, ("gen", "e", bx)), ("gen", "e", x)),
        Equation("comul-morphism-comul", "coalgebra",
                 ("compose", delta, ("gen", "comul", bx)),
                 ("compose", comul, ("tensor", delta, delta))),
    ]


def differential_suite(gens: Gens, x) -> List[Equation]:
    bundle = gens.bundle
    rig = gens.rig
    bx = bundle.on_object(x)
    idx = ("id", x)
    idb = ("id", bx)
    d = ("gen", "deriving", x)
    comul = ("gen", "comul", x)
    src = tensor(bx, x)
    return [
        Equation("constant-rule", "differential",
                 ("compose", d, ("gen", "e", x)),
                 ("zero", src, UNIT_OBJ)),
        Equation("linear-rule", "differential",
                 ("compose", d, ("gen", "eps", x)),
                 ("tensor", ("gen", "e", x), idx)),
        Equation("product-rule", "differential",
                 ("compose", d, comul),
                 ("compose", ("tensor", comul, idx),
                  ("add",
                   ("tensor", idb, d),
                   ("compose", ("tensor", idb, ("swap", bx, x)),
                    ("tensor", d, idb))))),
        Equation("chain-rule", "differential",
                 ("compose", d, ("gen", "delta", x)),
                 ("compose", ("tensor", comul, idx),
                  ("tensor", ("gen", "delta", x), d),
                  ("gen", "deriving", bx))),
        Equation("interchange-rule", "differential",
                 ("compose", ("tensor", idb, ("swap", x, x)),
                  ("tensor", d, idx), d),
                 ("compose", ("tensor", d, idx), d)),
    ]


def codereliction_suite(gens: Gens, x, y) -> List[Equation]:
    bundle = gens.bundle
    bx = bundle.on_object(x)
    by = bundle.on_object(y)
    xy = tensor(x, y)
    eta = ("gen", "coder", x)
    return [
        Equation("coder-counit", "codereliction",
                 ("compose", eta, ("gen", "eps", x)), ("id", x)),
        Equation("coder-comul", "codereliction",
                 ("compose", eta, ("gen", "delta", x)),
                 ("compose",
                  ("tensor", ("gen", "u", x), eta),
                  ("tensor", ("gen", "delta", x), ("gen", "coder", bx)),
                  ("gen", "nabla", bx))),
        Equation("coder-monoidal", "codereliction",
                 ("compose", ("tensor", eta, ("id", by)),
                  ("gen", "m_tensor", x, y)),
                 ("compose", ("tensor", ("id", x), ("gen", "eps", y)),
                  ("gen", "coder", xy))),
    ]


def bialgebra_suite(gens: Gens, x, conv_maps=None) -> List[Equation]:
    bundle = gens.bundle
    rig = gens.rig
    bx = bundle.on_object(x)
    idb = ("id", bx)
    u = ("gen", "u", x)
    nabla = ("gen", "nabla", x)
    comul = ("gen", "comul", x)
    e = ("gen", "e", x)
    eps = ("gen", "eps", x)
    eqs = [
        Equation("monoid-associativity", "bialgebra",
                 ("compose", ("tensor", nabla, idb), nabla),
                 ("compose", ("tensor", idb, nabla), nabla)),
        Equation("monoid-unit-left", "bialgebra",
                 ("compose", ("tensor", u, idb), nabla), idb),
        Equation("monoid-unit-right", "bialgebra",
                 ("compose", ("tensor", idb, u), nabla), idb),
        Equation("monoid-commutativity", "bialgebra",
                 ("compose", ("swap", bx, bx), nabla), nabla),
        Equation("bimonoid-comul", "bialgebra",
                 ("compose", nabla, comul),
                 ("compose", ("tensor", comul, comul),
                  ("tensor", idb, ("swap", bx, bx), idb),
                  ("tensor", nabla, nabla))),
        Equation("bimonoid-counit", "bialgebra",
                 ("compose", nabla, e), ("tensor", e, e)),
        Equation("bimonoid-unit-comul", "bialgebra",
                 ("compose", u, comul), ("tensor", u, u)),
        Equation("bimonoid-unit-counit", "bialgebra",
                 ("compose", u, e), ("id", UNIT_OBJ)),
        Equation("counit-additive-nabla", "bialgebra",
                 ("compose", nabla, eps),
                 ("add", ("tensor", e, eps), ("tensor", eps, e))),
        Equation("counit-additive-u", "bialgebra",
                 ("compose", u, eps), ("zero", UNIT_OBJ, x)),
        Equation("convolution-zero", "bialgebra",
                 ("compose", e, u), ("lift", ("zero", x, x))),
    ]
    if conv_maps is None:
        conv_maps = default_convolution_maps(rig, x)
    for i, (f, g) in enumerate(conv_maps):
        eqs.append(Equation("convolution-sum-%d" % i, "bialgebra",
                            ("compose", comul,
                             ("tensor", ("lift", ("mor", f)), ("lift", ("mor", g))),
                             nabla),
                            ("lift", ("add", ("mor", f), ("mor", g)))))
    return eqs


def default_convolution_maps(rig, x):
    """Deterministic sample endomaps of x for the convolution checks."""
    from .category import LinComb, from_columns, enumerate_basis
    ident = identity(rig, x)
    zero = zero_morphism(rig, x, x)
    pairs = [(ident, zero), (ident, ident)]
    atoms = [l for l in enumerate_basis(x, 0)]
    if atoms:
        full = LinComb(rig, {a: rig.one for a in atoms})
        smear = from_columns(rig, x, x, {a: full for a in atoms}, name="smear")
        pairs.append((smear, ident))
    return pairs


def monoidal_suite(gens: Gens, x, y) -> List[Equation]:
    bundle = gens.bundle
    bx = bundle.on_object(x)
    by = bundle.on_object(y)
    xy = tensor(x, y)
    m = ("gen", "m_tensor", x, y)
    m_i = ("gen", "m_unit")
    return [
        Equation("eps-monoidal-binary", "monoidal",
                 ("compose", m, ("gen", "eps", xy)),
                 ("tensor", ("gen", "eps", x), ("gen", "eps", y))),
        Equation("eps-monoidal-nullary", "monoidal",
                 ("compose", m_i, ("gen", "eps", UNIT_OBJ)),
                 ("id", UNIT_OBJ)),
        Equation("delta-monoidal-binary", "monoidal",
                 ("compose", m, ("gen", "delta", xy)),
                 ("compose", ("tensor", ("gen", "delta", x), ("gen", "delta", y)),
                  ("gen", "m_tensor", bx, by),
                  ("lift", m))),
        Equation("delta-monoidal-nullary", "monoidal",
                 ("compose", m_i, ("gen", "delta", UNIT_OBJ)),
                 ("compose", m_i, ("lift", m_i))),
    ]


def seely_suite(gens: Gens, x, y) -> List[Equation]:
    bundle = gens.bundle
    rig = gens.rig
    xy = biproduct(x, y)
    bxy = bundle.on_object(xy)
    bx = bundle.on_object(x)
    by = bundle.on_object(y)
    chi = ("compose", ("gen", "comul", xy),
           ("tensor", ("lift", ("mor", proj_left(rig, x, y))),
            ("lift", ("mor", proj_right(rig, x, y)))))
    chi_inv = ("compose",
               ("tensor", ("lift", ("mor", inj_left(rig, x, y))),
                ("lift", ("mor", inj_right(rig, x, y)))),
               ("gen", "nabla", xy))
    chi_top = ("gen", "e", ZERO_OBJ)
    chi_top_inv = ("gen", "u", ZERO_OBJ)
    return [
        Equation("storage-retract", "seely",
                 ("compose", chi, chi_inv), ("id", bxy)),
        Equation("storage-section", "seely",
                 ("compose", chi_inv, chi), ("id", tensor(bx, by))),
        Equation("storage-top-retract", "seely",
                 ("compose", chi_top_inv, chi_top), ("id", UNIT_OBJ)),
        Equation("storage-top-section", "seely",
                 ("compose", chi_top, chi_top_inv),
                 ("id", bundle.on_object(ZERO_OBJ))),
    ]


SUITE_BUILDERS = {
    "comonad": (comonad_suite, 1),
    "coalgebra": (coalgebra_suite, 1),
    "differential": (differential_suite, 1),
    "codereliction": (codereliction_suite, 2),
    "bialgebra": (bialgebra_suite, 1),
    "monoidal": (monoidal_suite, 2),
    "seely": (seely_suite, 2),
}


def build_suite(name: str, gens: Gens, objects) -> List[Equation]:
    try:
        builder, arity = SUITE_BUILDERS[name]
    except KeyError:
        raise KeyError("unknown suite %r" % name)
    if arity == 1:
        return builder(gens, objects[0])
    if len(objects) < 2:
        objects = (objects[0], objects[0])
    return builder(gens, objects[0], objects[1])


def run_suite(name: str, bundle, objects, max_weight: int,
              window: Optional[int] = None,
              overrides: Optional[Dict[str, Callable]] = None) -> List[CheckReport]:
    gens = Gens(bundle, overrides)
    if name == "action-lift":
        return action_lift_suite(bundle, objects, max_weight, window)
    eqs = build_suite(name, gens, objects)
    return [check_equation(eq, gens, max_weight, objects=objects, window=window)
            for eq in eqs]


# ---------------------------------------------------------------------------
# morphism suites: is phi a morphism of (differential) coalgebra modalities?


def morphism_suite(phi_family, src: Gens, dst: Gens, x,
                   differential=False, skip=()) -> List[Equation]:
    """phi_family(obj) -> Morphism from src-bundle obj to dst-bundle obj.

    ``skip`` drops named squares; a map whose lift has columns with
    infinite point support (e.g. through an infinite m_I) admits no
    representable comultiplication square.
    """
    sb, db = src.bundle, dst.bundle
    phi = ("mor", phi_family(x))
    suite = "diff-morphism" if differential else "coalg-morphism"
    eqs = [
        Equation("morphism-eps", suite,
                 ("compose", phi, ("mor", db.eps(x))), ("mor", sb.eps(x))),
        Equation("morphism-e", suite,
                 ("compose", phi, ("mor", db.e(x))), ("mor", sb.e(x))),
        Equation("morphism-comul", suite,
                 ("compose", phi, ("mor", db.comul(x))),
                 ("compose", ("mor", sb.comul(x)), ("tensor", phi, phi))),
    ]
    if "morphism-delta" not in skip:
        phi_outer = ("mor", phi_family(db.on_object(x)))
        lift_phi_src = ("mor", sb.on_morphism(phi_family(x)))
        eqs.insert(1, Equation(
            "morphism-delta", suite,
            ("compose", phi, ("mor", db.delta(x))),
            ("compose", ("mor", sb.delta(x)), lift_phi_src, phi_outer)))
    if differential:
        eqs.append(Equation("morphism-deriving", suite,
                            ("compose", ("tensor", phi, ("id", x)),
                             ("mor", db.deriving(x))),
                            ("compose", ("mor", sb.deriving(x)), phi)))
    return [eq for eq in eqs if eq.id not in skip]


def run_morphism_suite(phi_family, src_bundle, dst_bundle, x, max_weight,
                       differential=False, window=None, skip=()) -> List[CheckReport]:
    src = Gens(src_bundle)
    dst = Gens(dst_bundle)
    eqs = morphism_suite(phi_family, src, dst, x,
                         differential=differential, skip=skip)
    return [check_equation(eq, src, max_weight, objects=(x,), window=window)
            for eq in eqs]


# ---------------------------------------------------------------------------
# action lifting checks


def action_lift_suite(bundle, objects, max_weight, window=None) -> List[CheckReport]:
    """The lifted tensor and modality lift of commuting actions commute."""
    rig = bundle.rig
    x = objects[0]
    reports = []
    free = free_action(rig, x)
    nil = free_nilsquare(rig, x)
    cases = [
        ("free-action-commutes", free),
        ("nilsquare-commutes", nil),
        ("boxtimes-commutes", boxtimes(free, nil)),
    ]
    if bundle.deriving(x) is not None:
        cases.append(("lifted-action-commutes", lift_modality(bundle, free)))
    for eq_id, action in cases:
        start = time.monotonic()
        ok, failures = is_commuting(action, max_weight, window=window)
        reports.append(CheckReport(
            suite="action-lift", equation=eq_id, rig=rig.name,
            objects=[x.name], weight=max_weight, window=window,
            status="pass" if ok else "fail",
            witness=failures[0] if failures else None,
            millis=int((time.monotonic() - start) * 1000)))
    return reports
