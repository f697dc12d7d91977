"""The free differential modality on a coalgebra modality.

Given a base modality ! (bags or points), the free differential
modality sends X to !X (x) SX: the base layer remembers the
"exponential" part and the bag layer collects formal derivatives.  All
structure maps have closed forms except the comonultiplication, which
is characterised as the unique action map extending (zeta zeta) . delta
and computed here by universal extension; for the points base there is
also a fast direct route through the auxiliary map delta' (the unique
action map out of SX into SSX carrying the add-to-a-part /
start-a-new-part action).
"""

from . import symalg
from .actions import (ActionData, free_action_on, lift_action,
                      universal_extend)
from .category import (LinComb, Morphism, UNIT_OBJ, add_morphisms, compose,
                       compose_chain, biproduct, identity, inj_left,
                       inj_right, nfactors, point_as_morphism, proj_left,
                       proj_right, symmetry, tensor, tensor_mor)
from .labels import UNIT, bag, pair_chain, point, unpair_chain
from .modalities import ModalityBundle, PointsModality


class FreeDifferentialModality(ModalityBundle):
    kind = "free-diff"

    def __init__(self, base: ModalityBundle):
        super().__init__(base.rig)
        self.base = base
        self.kind = "free-diff(%s)" % base.kind

    # ---------------------------------------------------------------- functor

    def on_object(self, x):
        return self._memo(("obj", x.key),
                          lambda: tensor(self.base.on_object(x), symalg.sym_object(x)))

    def on_morphism(self, f):
        return tensor_mor(self.base.on_morphism(f), symalg.sym_on_morphism(f))

    def zeta(self, x):
        """The unit of freeness: !X -> !∂X, empty derivative layer."""
        return self._memo(("zeta", x.key), lambda: tensor_mor(
            identity(self.rig, self.base.on_object(x)),
            symalg.empty_bag_unit(self.rig, x)))

    # -------------------------------------------------------- comonoid layer

    def e(self, x):
        return self._memo(("e", x.key), lambda: tensor_mor(
            self.base.e(x), symalg.counit_to_unit(self.rig, x)))

    def comul(self, x):
        def make():
            rig = self.rig
            bx = self.base.on_object(x)
            sx = symalg.sym_object(x)
            mid = tensor_mor(tensor_mor(identity(rig, bx), symmetry(rig, bx, sx)),
                             identity(rig, sx))
            return compose(mid, tensor_mor(self.base.comul(x),
                                           symalg.comultiply(rig, x)))
        return self._memo(("comul", x.key), make)

    def eps(self, x):
        def make():
            t1 = tensor_mor(self.base.e(x), symalg.counit_to_object(self.rig, x))
            t2 = tensor_mor(self.base.eps(x), symalg.counit_to_unit(self.rig, x))
            return add_morphisms(t1, t2)
        return self._memo(("eps", x.key), make)

    # -------------------------------------------------------- bialgebra layer

    def u(self, x):
        return self._memo(("u", x.key), lambda: tensor_mor(
            self.base.u(x), symalg.empty_bag_unit(self.rig, x)))

    def nabla(self, x):
        def make():
            rig = self.rig
            bx = self.base.on_object(x)
            sx = symalg.sym_object(x)
            mid = tensor_mor(tensor_mor(identity(rig, bx), symmetry(rig, sx, bx)),
                             identity(rig, sx))
            return compose(tensor_mor(self.base.nabla(x), symalg.multiply(rig, x)),
                           mid)
        return self._memo(("nabla", x.key), make)

    # ------------------------------------------------------ differential layer

    def deriving(self, x):
        """d∂ = !X (x) append."""
        return self._memo(("der", x.key), lambda: tensor_mor(
            identity(self.rig, self.base.on_object(x)),
            symalg.append_map(self.rig, x)))

    def codereliction(self, x):
        """eta∂ = u (x) eta^S."""
        return self._memo(("coder", x.key), lambda: tensor_mor(
            self.base.u(x), symalg.singleton_map(self.rig, x)))

    # ----------------------------------------------------------- comonad layer

    def delta(self, x, route=None):
        if route is None:
            route = "direct" if isinstance(self.base, PointsModality) else "generic"
        return self._memo(("delta", route, x.key),
                          lambda: self._delta_direct(x) if route == "direct"
                          else self._delta_generic(x))

    def _delta_generic(self, x):
        """The unique action map extending (zeta zeta) . delta, folded
        against the lifted action on !∂!∂X."""
        base = self.base
        dx = self.on_object(x)
        f = compose_chain(base.delta(x),
                          base.on_morphism(self.zeta(x)),
                          self.zeta(dx))
        lifted = ActionData(self.on_object(dx), x,
                            lift_action(self.deriving(dx), self.coderive(dx),
                                        ActionData(dx, x, self.deriving(x))))
        ext = universal_extend(f, lifted)
        ext.name = "delta"
        return ext

    def delta_aux(self, x):
        """delta': SX -> SSX, the unique action map with empty bag |-> empty
        bag-of-bags, against the action that either appends to one existing
        part or starts a fresh singleton part."""
        def make():
            rig = self.rig
            sx = symalg.sym_object(x)
            ssx = symalg.sym_object(sx)
            idssx = identity(rig, ssx)
            b_sx = compose(tensor_mor(identity(rig, ssx), symalg.counit_to_object(rig, sx)),
                           symalg.comultiply(rig, sx))
            d_flat = compose_chain(
                tensor_mor(b_sx, identity(rig, x)),
                tensor_mor(idssx, symalg.append_map(rig, x)),
                symalg.append_map(rig, sx))
            d_sharp = compose(symalg.append_map(rig, sx),
                              tensor_mor(idssx, symalg.singleton_map(rig, x)))
            action = ActionData(ssx, x, add_morphisms(d_flat, d_sharp))
            ext = universal_extend(symalg.empty_bag_unit(rig, sx), action)
            ext.name = "delta'"
            return ext
        return self._memo(("delta_aux", x.key), make)

    def _delta_direct(self, x):
        """Points base only: delta∂ on the summand at a point p sends B to
        (the point selecting (p, empty bag)) paired with the image of
        delta'(B) under the p-summand inclusion."""
        rig = self.rig
        dx = self.on_object(x)
        ddx = self.on_object(dx)
        aux = self.delta_aux(x)

        def col(label, wmax):
            p, b = unpair_chain(label, 2)
            inner = aux.column(b, None)
            outer_pt = point([(pair_chain((p, bag(()))), rig.one)])
            terms = {}
            for bags_label, c in inner.items():
                image = bag(pair_chain((p, part)) for part in bags_label.payload)
                out = pair_chain((outer_pt, image))
                prev = terms.get(out)
                terms[out] = c if prev is None else rig.add(prev, c)
            return LinComb(rig, terms).truncated(wmax)

        return Morphism(rig, dx, ddx, col, name="delta",
                        shift_lo=1, shift_hi=None, finite_columns=True)

    # ------------------------------------------------------------- monoidality

    def m_unit(self):
        def make():
            return tensor_mor(self.base.m_unit(),
                              symalg.empty_bag_unit(self.rig, UNIT_OBJ))
        return self._memo(("m_unit",), make)

    def aux_n(self, x):
        """n: !∂X (x) !∂X -> !∂(X (x) X)."""
        def make():
            dx = self.on_object(x)
            return compose_chain(
                self.nabla(x),
                self.delta(x),
                self.on_morphism(self.comul(x)),
                self.on_morphism(tensor_mor(self.eps(x), self.eps(x))))
        return self._memo(("aux_n", x.key), make)

    def m_tensor(self, x, y):
        def make():
            rig = self.rig
            xy = biproduct(x, y)
            return compose_chain(
                tensor_mor(self.on_morphism(inj_left(rig, x, y)),
                           self.on_morphism(inj_right(rig, x, y))),
                self.aux_n(xy),
                self.on_morphism(tensor_mor(proj_left(rig, x, y),
                                            proj_right(rig, x, y))))
        return self._memo(("m_tensor", x.key, y.key), make)

    # ---------------------------------------------------------------- freeness

    def extend(self, psi: Morphism, target_action: ActionData) -> Morphism:
        """psi#: the unique action map !∂X -> B with psi# . zeta = psi."""
        return universal_extend(psi, target_action)


def free_differential(base: ModalityBundle) -> FreeDifferentialModality:
    return FreeDifferentialModality(base)


# ---------------------------------------------------------------------------
# initial morphisms: from the points modality into any monoidal differential !


def rho(points_bundle, diff_bundle, x) -> Morphism:
    """rho: PX -> !X, on the summand at a point p the composite !p . m_I."""
    rig = points_bundle.rig
    px = points_bundle.on_object(x)
    bx = diff_bundle.on_object(x)
    m_i = diff_bundle.m_unit()

    def col(label, wmax):
        pm = point_as_morphism(rig, x, label)
        return compose(diff_bundle.on_morphism(pm), m_i).column(UNIT, wmax)

    return Morphism(rig, px, bx, col, name="rho",
                    shift_lo=None, shift_hi=None,
                    finite_columns=m_i.finite_columns)


def rho_flat(diff_bundle, x) -> Morphism:
    """rho-flat: SX -> !X, the unique action map sending the empty bag to u."""
    d = diff_bundle.deriving(x)
    out = universal_extend(diff_bundle.u(x),
                           ActionData(diff_bundle.on_object(x), x, d))
    out.name = "rho_flat"
    return out


def rho_sharp(free_bundle, diff_bundle, x) -> Morphism:
    """rho#: P∂X -> !X, the unique differential modality morphism with
    rho# . zeta = rho; on the summand at p it extends !p . m_I."""
    rig = free_bundle.rig
    src = free_bundle.on_object(x)
    bx = diff_bundle.on_object(x)
    action = ActionData(bx, x, diff_bundle.deriving(x))
    exts = {}

    def col(label, wmax):
        p, b = unpair_chain(label, 2)
        if p not in exts:
            pm = point_as_morphism(rig, x, p)
            f = compose(diff_bundle.on_morphism(pm), diff_bundle.m_unit())
            exts[p] = universal_extend(f, action)
        return exts[p].column(b, wmax)

    return Morphism(rig, src, bx, col, name="rho_sharp",
                    shift_lo=None, shift_hi=None,
                    finite_columns=diff_bundle.m_unit().finite_columns)
