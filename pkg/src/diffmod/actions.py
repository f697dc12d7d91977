"""Commuting actions and the universal property of the symmetric algebra.

An action of ``X`` on ``A`` is a morphism ``act: A (x) X -> A``;  it
*commutes* when acting twice is insensitive to the order of the two
arguments.  ``SX`` with the append map is the free commuting action,
and ``universal_extend`` realises the induced map out of ``A (x) SX``
by folding the bag through the action one element at a time.
"""

from dataclasses import dataclass

from .category import (GradedObject, LinComb, Morphism, add_morphisms,
                       compose, compose_chain, identity, inj_right,
                       morphisms_equal_up_to, nfactors, proj_left, symmetry,
                       tensor, tensor_mor, biproduct, UNIT_OBJ)
from .labels import pair_chain, unpair_chain
from . import symalg


@dataclass
class ActionData:
    carrier: GradedObject
    base: GradedObject          # the acting object X
    act: Morphism               # carrier (x) X -> carrier

    def __post_init__(self):
        if self.act.source != tensor(self.carrier, self.base):
            raise ValueError("action source is %s, expected %s (x) %s"
                             % (self.act.source.name, self.carrier.name, self.base.name))
        if self.act.target != self.carrier:
            raise ValueError("action target is %s, not the carrier" % self.act.target.name)


def is_commuting(action: ActionData, max_weight: int, window=None):
    """act . (act (x) X) == act . (act (x) X) . (A (x) swap), on
    A (x) X (x) X up to the given weight."""
    rig = action.act.rig
    a, x = action.carrier, action.base
    ida = identity(rig, a)
    idx = identity(rig, x)
    twice = compose(action.act, tensor_mor(action.act, idx))
    swapped = compose(twice, tensor_mor(ida, symmetry(rig, x, x)))
    return morphisms_equal_up_to(twice, swapped, max_weight, window=window)


def free_action(rig, x) -> ActionData:
    """(SX, append), the free commuting action of X."""
    sx = symalg.sym_object(x)
    return ActionData(sx, x, symalg.append_map(rig, x))


def free_action_on(rig, a, x) -> ActionData:
    """(A (x) SX, A (x) append), the free commuting action under A."""
    app = tensor_mor(identity(rig, a), symalg.append_map(rig, x))
    return ActionData(tensor(a, symalg.sym_object(x)), x, app)


def universal_extend(f: Morphism, action: ActionData) -> Morphism:
    """The unique action map A (x) SX -> B with f on the empty-bag layer.

    Folds each bag element through the action in canonical member order
    (order-independence is exactly commutativity of the action).
    """
    rig = f.rig
    if f.target != action.carrier:
        raise ValueError("target of %r is not the action carrier" % f)
    a, x = f.source, action.base
    sx = symalg.sym_object(x)
    src = tensor(a, sx)
    na = nfactors(a)
    nx = nfactors(x)
    nb = nfactors(action.carrier)
    beta = action.act

    def col(label, wmax):
        comps = unpair_chain(label, na + 1)
        la = pair_chain(comps[:na])
        members = comps[na].payload
        # windows, computed backwards so every step stays exact
        wins = [wmax]
        for m in reversed(members):
            prev = wins[0]
            wins.insert(0, None if prev is None else beta.needed_window(prev) - m.weight)
        cur = f.column(la, wins[0])
        for i, m in enumerate(members):
            mcomps = list(unpair_chain(m, nx))
            nxt = LinComb.zero(rig)
            for y, c in cur.items():
                joined = pair_chain(list(unpair_chain(y, nb)) + mcomps)
                nxt = nxt.add(beta.column(joined, wins[i + 1]).scaled(c))
            cur = nxt
        return cur.truncated(wmax)

    lo = f.shift_lo if (beta.shift_lo is not None and beta.shift_lo >= 1) else None
    hi = f.shift_hi if (f.shift_hi is not None and beta.shift_hi is not None
                        and beta.shift_hi <= 1) else None
    return Morphism(rig, src, action.carrier, col,
                    name="ext(%s)" % f.name,
                    shift_lo=lo, shift_hi=hi,
                    finite_columns=f.finite_columns and beta.finite_columns)


def boxtimes(left: ActionData, right: ActionData) -> ActionData:
    """Lifted tensor of actions: act on the right factor, plus act on the
    left factor after swapping the argument past the right factor."""
    if left.base != right.base:
        raise ValueError("actions over different base objects")
    rig = left.act.rig
    a, b, x = left.carrier, right.carrier, left.base
    ida = identity(rig, a)
    idb = identity(rig, b)
    term1 = tensor_mor(ida, right.act)
    term2 = compose(tensor_mor(left.act, idb),
                    tensor_mor(ida, symmetry(rig, b, x)))
    return ActionData(tensor(a, b), x, add_morphisms(term1, term2))


def trivial_action(rig, a, x) -> ActionData:
    from .category import zero_morphism
    return ActionData(a, x, zero_morphism(rig, tensor(a, x), a))


def free_nilsquare(rig, x) -> ActionData:
    """The free nilsquare action on I: carrier I (+) X, acting by moving
    the unit layer into the X layer and killing the X layer."""
    carrier = biproduct(UNIT_OBJ, x)
    step = compose_chain(
        tensor_mor(proj_left(rig, UNIT_OBJ, x), identity(rig, x)),
        inj_right(rig, UNIT_OBJ, x))
    return ActionData(carrier, x, step)


def coderive(rig, e, comul, eps) -> Morphism:
    """b: !X -> !X (x) X, the coderiving transformation (1 (x) eps) . Delta."""
    ideps = tensor_mor(identity(rig, comul.source), eps)
    return compose(ideps, comul)


def lift_action(d, b, action: ActionData) -> Morphism:
    """The action of X on !A induced by a deriving transformation:
    split off one element of A with b, act on it, then absorb with d.

    ``d``: !A (x) A -> !A and ``b``: !A -> !A (x) A must be instantiated
    at the carrier A of the action."""
    rig = d.rig
    x = action.base
    idx = identity(rig, x)
    ida = identity(rig, action.carrier)
    bang_a = d.target
    step = compose_chain(
        tensor_mor(b, idx),                        # !A (x) A (x) X
        tensor_mor(identity(rig, bang_a), action.act),  # !A (x) A
        d)                                         # !A
    return step


def lift_modality(bundle, action: ActionData) -> ActionData:
    """Lift a commuting action along a modality equipped with a deriving
    transformation (bundle must expose deriving and coderive at the carrier)."""
    a = action.carrier
    d = bundle.deriving(a)
    b = bundle.coderive(a)
    return ActionData(bundle.on_object(a), action.base,
                      lift_action(d, b, action))
