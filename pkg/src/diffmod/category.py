"""Graded objects and sparse morphisms over a commutative rig.

An object is a (possibly infinite) set of basis labels together with a
weight function; everything infinite is graded, i.e. there are finitely
many labels of each weight and they can be enumerated.

A morphism is a column function ``label -> finite linear combination``.
Columns are never materialised into matrices.  A column may be
intrinsically infinite (for instance the bag comonultiplication); such
columns can only be evaluated through a truncation window ``wmax`` that
bounds the output weight, and every morphism carries enough weight-shift
bookkeeping for composites to stay exact inside the window:

* ``shift_lo`` / ``shift_hi``: every output weighs between
  ``w_in + shift_lo`` and ``w_in + shift_hi`` (``None`` = unbounded);
* ``needed_window(W)``: inputs heavier than this bound cannot emit any
  output of weight <= W, so composition may drop them.

The tensor is strict: a tensor object stores a flat factor list and its
labels are right-nested pair chains, so associators and unitors are
identities.
"""

import itertools
from typing import Callable, Dict, List, Optional, Tuple

from .labels import (Label, UNIT, bag, inl, inr, pair_chain, point,
                     unpair_chain)
from .rig import RigDescriptor


class NeedsWindow(Exception):
    """Raised when an infinite column is evaluated without a truncation window."""


class NotEnumerable(Exception):
    """Raised when an object cannot list its basis labels by weight."""


# ---------------------------------------------------------------------------
# objects


class GradedObject:
    """Base class; subclasses fill in membership and enumeration."""

    key: tuple
    name: str
    enumerable: bool = True

    def contains(self, label: Label) -> bool:
        raise NotImplementedError

    def contains_cached(self, label: Label) -> bool:
        try:
            cache = self._ccache
        except AttributeError:
            cache = self._ccache = {}
        hit = cache.get(label)
        if hit is None:
            hit = cache[label] = self.contains(label)
        return hit

    def members_of_weight(self, w: int) -> Tuple[Label, ...]:
        raise NotImplementedError

    def __eq__(self, other):
        return isinstance(other, GradedObject) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return self.name


class ZeroObject(GradedObject):
    def __init__(self):
        self.key = ("zero",)
        self.name = "0"

    def contains(self, label):
        return False

    def members_of_weight(self, w):
        return ()


class UnitObject(GradedObject):
    def __init__(self):
        self.key = ("unit",)
        self.name = "I"

    def contains(self, label):
        return label.tag == "unit"

    def members_of_weight(self, w):
        return (UNIT,) if w == 0 else ()


ZERO_OBJ = ZeroObject()
UNIT_OBJ = UnitObject()


class AtomsObject(GradedObject):
    """Free object on named weight-0 atoms."""

    def __init__(self, names):
        from .labels import atom
        self.atoms = tuple(atom(n) for n in sorted(names))
        self.key = ("atoms", tuple(sorted(names)))
        self.name = "<%s>" % ",".join(sorted(names))
        self._set = frozenset(self.atoms)

    def contains(self, label):
        return label in self._set

    def members_of_weight(self, w):
        return self.atoms if w == 0 else ()


class TensorObject(GradedObject):
    def __init__(self, factors):
        assert len(factors) >= 2
        self.factors = tuple(factors)
        self.key = ("tensor",) + tuple(f.key for f in factors)
        self.name = "(%s)" % " (x) ".join(f.name for f in factors)
        self.enumerable = all(f.enumerable for f in factors)

    def contains(self, label):
        try:
            comps = unpair_chain(label, len(self.factors))
        except ValueError:
            return False
        return all(f.contains_cached(c) for f, c in zip(self.factors, comps))

    def members_of_weight(self, w):
        out = []
        for split in _compositions(w, len(self.factors)):
            pools = [f.members_of_weight(wi) for f, wi in zip(self.factors, split)]
            for combo in itertools.product(*pools):
                out.append(pair_chain(combo))
        return tuple(sorted(out, key=Label.sort_key))


class BiproductObject(GradedObject):
    def __init__(self, left, right):
        self.left = left
        self.right = right
        self.key = ("biprod", left.key, right.key)
        self.name = "(%s (+) %s)" % (left.name, right.name)
        self.enumerable = left.enumerable and right.enumerable

    def contains(self, label):
        if label.tag == "inl":
            return self.left.contains_cached(label.payload)
        if label.tag == "inr":
            return self.right.contains_cached(label.payload)
        return False

    def members_of_weight(self, w):
        out = [inl(m) for m in self.left.members_of_weight(w)]
        out += [inr(m) for m in self.right.members_of_weight(w)]
        return tuple(sorted(out, key=Label.sort_key))


class BagObject(GradedObject):
    """Finite multisets over an inner object; a bag weighs its size plus members."""

    def __init__(self, inner):
        self.inner = inner
        self.key = ("bag", inner.key)
        self.name = "S%s" % inner.name
        self.enumerable = inner.enumerable

    def contains(self, label):
        return label.tag == "bag" and all(self.inner.contains_cached(m) for m in label.payload)

    def members_of_weight(self, w):
        items = _items_by_cost(self.inner, w)
        out = [bag(ms) for ms in _multisets_of_cost(items, w)]
        return tuple(sorted(out, key=Label.sort_key))


class PointsObject(GradedObject):
    """One basis label per point I -> inner, i.e. per finitely supported map
    from inner labels to nonzero scalars.  Enumerable only for finite rigs."""

    def __init__(self, rig: RigDescriptor, inner):
        self.rig = rig
        self.inner = inner
        self.key = ("points", rig.name, inner.key)
        self.name = "P%s" % inner.name
        self.enumerable = inner.enumerable and rig.nonzero_elements is not None

    def contains(self, label):
        if label.tag != "point":
            return False
        for k, v in label.payload:
            if not self.inner.contains(k):
                return False
            if self.rig.nonzero_elements is not None and v not in self.rig.nonzero_elements:
                return False
        return True

    def members_of_weight(self, w):
        if self.rig.nonzero_elements is None:
            raise NotEnumerable("points over infinite rig %s" % self.rig.name)
        items = _items_by_cost(self.inner, w)
        out = []
        for keys in _subsets_of_cost(items, w):
            for vals in itertools.product(self.rig.nonzero_elements, repeat=len(keys)):
                out.append(point(zip(keys, vals)))
        return tuple(sorted(out, key=Label.sort_key))


def _compositions(total, parts):
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _items_by_cost(obj, budget):
    """Labels of obj with cost 1 + weight <= budget, in canonical order."""
    items = []
    for w in range(max(budget, 0)):
        items.extend(obj.members_of_weight(w))
    return items


def _multisets_of_cost(items, total):
    """Multisets drawn from items (cost of m is 1 + m.weight) of exact total cost."""
    def go(idx, left):
        if left == 0:
            yield []
            return
        for i in range(idx, len(items)):
            c = 1 + items[i].weight
            if c <= left:
                for rest in go(i, left - c):
                    yield [items[i]] + rest
    return go(0, total)


def _subsets_of_cost(items, total):
    def go(idx, left):
        if left == 0:
            yield []
            return
        for i in range(idx, len(items)):
            c = 1 + items[i].weight
            if c <= left:
                for rest in go(i + 1, left - c):
                    yield [items[i]] + rest
    return go(0, total)


def factor_list(obj) -> List[GradedObject]:
    if isinstance(obj, UnitObject):
        return []
    if isinstance(obj, TensorObject):
        return list(obj.factors)
    return [obj]


_TENSOR_CACHE: Dict[tuple, GradedObject] = {}


def tensor(*objs) -> GradedObject:
    factors = []
    for o in objs:
        factors.extend(factor_list(o))
    if not factors:
        return UNIT_OBJ
    if len(factors) == 1:
        return factors[0]
    k = tuple(f.key for f in factors)
    if k not in _TENSOR_CACHE:
        _TENSOR_CACHE[k] = TensorObject(factors)
    return _TENSOR_CACHE[k]


def biproduct(left, right) -> GradedObject:
    return BiproductObject(left, right)


def nfactors(obj) -> int:
    return len(factor_list(obj))


def components(obj, label) -> Tuple[Label, ...]:
    return unpair_chain(label, nfactors(obj))


def enumerate_basis(obj, max_weight: int) -> List[Label]:
    out = []
    for w in range(max_weight + 1):
        out.extend(obj.members_of_weight(w))
    return out


# ---------------------------------------------------------------------------
# linear combinations


class LinComb:
    """Finite formal sum of labels with nonzero scalars from a rig."""

    __slots__ = ("rig", "terms")

    def __init__(self, rig: RigDescriptor, terms=None):
        self.rig = rig
        clean = {}
        if terms:
            for label, v in (terms.items() if isinstance(terms, dict) else terms):
                v = rig.normalize(v)
                if v != rig.zero:
                    prev = clean.get(label)
                    if prev is None:
                        clean[label] = v
                    else:
                        s = rig.add(prev, v)
                        if s == rig.zero:
                            del clean[label]
                        else:
                            clean[label] = s
        self.terms = clean

    @classmethod
    def basis(cls, rig, label, coeff=None):
        return cls(rig, {label: rig.one if coeff is None else coeff})

    @classmethod
    def zero(cls, rig):
        return cls(rig)

    def items(self):
        return self.terms.items()

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, LinComb) and self.terms == other.terms

    def add(self, other: "LinComb") -> "LinComb":
        merged = dict(self.terms)
        rig = self.rig
        for label, v in other.terms.items():
            prev = merged.get(label)
            s = v if prev is None else rig.add(prev, v)
            if s == rig.zero:
                merged.pop(label, None)
            else:
                merged[label] = s
        out = LinComb(rig)
        out.terms = merged
        return out

    def scaled(self, c) -> "LinComb":
        rig = self.rig
        c = rig.normalize(c)
        if c == rig.zero:
            return LinComb(rig)
        return LinComb(rig, {l: rig.mul(c, v) for l, v in self.terms.items()})

    def truncated(self, wmax: Optional[int]) -> "LinComb":
        if wmax is None:
            return self
        out = LinComb(self.rig)
        out.terms = {l: v for l, v in self.terms.items() if l.weight <= wmax}
        return out

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(
            ("%r" if v == 1 else str(v) + ".%r") % l
            for l, v in sorted(self.terms.items(), key=lambda kv: kv[0].sort_key()))


# ---------------------------------------------------------------------------
# morphisms


class Morphism:
    """Sparse morphism given by a windowed column function.

    ``col(label, wmax)`` must return every output term of weight <= wmax
    (all of them when wmax is None), and may raise NeedsWindow when the
    column is infinite and wmax is None.
    """

    __slots__ = ("rig", "source", "target", "name", "_col",
                 "shift_lo", "shift_hi", "finite_columns", "_needed", "_cache")

    def __init__(self, rig, source, target, col, name="f",
                 shift_lo=0, shift_hi=0, needed_window=None,
                 finite_columns=None):
        self.rig = rig
        self.source = source
        self.target = target
        self._col = col
        self.name = name
        self.shift_lo = shift_lo  # None means unbounded below
        self.shift_hi = shift_hi  # None means unbounded above
        if finite_columns is None:
            finite_columns = shift_hi is not None
        self.finite_columns = finite_columns
        if needed_window is None:
            if shift_lo is None:
                def needed_window(W):
                    raise RuntimeError(
                        "%s: no declared lower weight shift, cannot window" % name)
            else:
                needed_window = lambda W: W - min(shift_lo, 0)
        self._needed = needed_window
        self._cache = {}

    def needed_window(self, W: Optional[int]) -> Optional[int]:
        return None if W is None else self._needed(W)

    def column(self, label: Label, wmax: Optional[int] = None) -> LinComb:
        key = (label, wmax)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        exact = self._cache.get((label, None))
        if exact is not None:
            out = exact.truncated(wmax)
            self._cache[key] = out
            return out
        if not self.source.contains_cached(label):
            raise ValueError("%s: label %r not in source %s" % (self.name, label, self.source))
        out = self._col(label, wmax)
        w_in = label.weight
        for l, _ in out.items():
            if not self.target.contains_cached(l):
                raise ValueError("%s: output %r not in target %s" % (self.name, l, self.target))
            d = l.weight - w_in
            if ((self.shift_lo is not None and d < self.shift_lo)
                    or (self.shift_hi is not None and d > self.shift_hi)):
                raise ValueError("%s: weight shift %d outside [%s, %s]"
                                 % (self.name, d, self.shift_lo, self.shift_hi))
        self._cache[key] = out
        return out

    def apply(self, lc: LinComb, wmax: Optional[int] = None) -> LinComb:
        out = LinComb.zero(self.rig)
        for label, c in lc.items():
            out = out.add(self.column(label, wmax).scaled(c))
        return out

    def then(self, other: "Morphism") -> "Morphism":
        return compose(other, self)

    def __repr__(self):
        return "%s: %s -> %s" % (self.name, self.source.name, self.target.name)


def identity(rig, obj, name=None) -> Morphism:
    return Morphism(rig, obj, obj,
                    lambda l, w: LinComb.basis(rig, l).truncated(w),
                    name=name or ("id_%s" % obj.name))


def zero_morphism(rig, source, target, name="0") -> Morphism:
    return Morphism(rig, source, target, lambda l, w: LinComb.zero(rig),
                    name=name, shift_lo=0, shift_hi=0)


def from_columns(rig, source, target, table: Dict[Label, LinComb], name="f") -> Morphism:
    """Finite morphism from an explicit column table (absent labels map to 0)."""
    lo, hi = 0, 0
    for src, lc in table.items():
        for out, _ in lc.items():
            d = out.weight - src.weight
            lo = min(lo, d)
            hi = max(hi, d)

    def col(label, wmax):
        return table.get(label, LinComb.zero(rig)).truncated(wmax)

    return Morphism(rig, source, target, col, name=name, shift_lo=lo, shift_hi=hi)


def compose(g: Morphism, f: Morphism) -> Morphism:
    if f.target != g.source:
        raise ValueError("cannot compose %r after %r" % (g, f))
    assert f.rig is g.rig

    def col(label, wmax):
        try:
            mid_w = g.needed_window(wmax)
        except RuntimeError:
            # the second leg cannot bound its inputs; fall back to the
            # exact middle layer when the first leg can enumerate it
            if not f.finite_columns:
                raise
            mid_w = None
        mid = f.column(label, mid_w)
        out = LinComb.zero(f.rig)
        for y, c in mid.items():
            out = out.add(g.column(y, wmax).scaled(c))
        return out.truncated(wmax)

    hi = None if (f.shift_hi is None or g.shift_hi is None) else f.shift_hi + g.shift_hi
    lo = None if (f.shift_lo is None or g.shift_lo is None) else f.shift_lo + g.shift_lo
    return Morphism(f.rig, f.source, g.target, col,
                    name="(%s ; %s)" % (f.name, g.name),
                    shift_lo=lo, shift_hi=hi,
                    finite_columns=f.finite_columns and g.finite_columns,
                    needed_window=lambda W: f._needed(g._needed(W)))


def compose_chain(*steps) -> Morphism:
    """Compose left to right: compose_chain(f, g, h) = h . g . f."""
    out = steps[0]
    for s in steps[1:]:
        out = compose(s, out)
    return out


def add_morphisms(*fs) -> Morphism:
    f0 = fs[0]
    for f in fs:
        if f.source != f0.source or f.target != f0.target:
            raise ValueError("sum of morphisms with different endpoints")

    def col(label, wmax):
        out = LinComb.zero(f0.rig)
        for f in fs:
            out = out.add(f.column(label, wmax))
        return out

    his = [f.shift_hi for f in fs]
    los = [f.shift_lo for f in fs]
    hi = None if any(h is None for h in his) else max(his)
    lo = None if any(l is None for l in los) else min(los)
    return Morphism(f0.rig, f0.source, f0.target, col,
                    name=" + ".join(f.name for f in fs),
                    shift_lo=lo, shift_hi=hi,
                    finite_columns=all(f.finite_columns for f in fs),
                    needed_window=lambda W: max(f._needed(W) for f in fs))


def scalar_morphism(rig, c, obj) -> Morphism:
    ident = identity(rig, obj)
    return Morphism(rig, obj, obj,
                    lambda l, w: LinComb.basis(rig, l, c).truncated(w),
                    name="%s.id" % c)


def tensor_mor(f: Morphism, g: Morphism) -> Morphism:
    rig = f.rig
    src = tensor(f.source, g.source)
    tgt = tensor(f.target, g.target)
    na = nfactors(f.source)
    nb = nfactors(g.source)
    nfa = len(factor_list(f.target))
    del nfa

    def col(label, wmax):
        comps = unpair_chain(label, na + nb)
        la = pair_chain(comps[:na])
        lb = pair_chain(comps[na:])
        fa = f.column(la, wmax)
        gb = g.column(lb, wmax)
        out = LinComb.zero(rig)
        terms = {}
        for xa, ca in fa.items():
            ta = list(unpair_chain(xa, nfactors(f.target)))
            for xb, cb in gb.items():
                joined = pair_chain(ta + list(unpair_chain(xb, nfactors(g.target))))
                if wmax is not None and joined.weight > wmax:
                    continue
                c = rig.mul(ca, cb)
                prev = terms.get(joined)
                terms[joined] = c if prev is None else rig.add(prev, c)
        out = LinComb(rig, terms)
        return out

    hi = None if (f.shift_hi is None or g.shift_hi is None) else f.shift_hi + g.shift_hi
    lo = None if (f.shift_lo is None or g.shift_lo is None) else f.shift_lo + g.shift_lo
    return Morphism(rig, src, tgt, col,
                    name="(%s (x) %s)" % (f.name, g.name),
                    shift_lo=lo, shift_hi=hi,
                    finite_columns=f.finite_columns and g.finite_columns,
                    # the output budget splits across the two halves; window
                    # functions are convex, so the max sits at a vertex
                    needed_window=lambda W: max(
                        f._needed(W) + max(g._needed(0), 0),
                        max(f._needed(0), 0) + g._needed(W)))


def tensor_many(*fs) -> Morphism:
    out = fs[0]
    for f in fs[1:]:
        out = tensor_mor(out, f)
    return out


def symmetry(rig, a, b) -> Morphism:
    src = tensor(a, b)
    tgt = tensor(b, a)
    na = nfactors(a)
    nb = nfactors(b)

    def col(label, wmax):
        comps = unpair_chain(label, na + nb)
        return LinComb.basis(rig, pair_chain(comps[na:] + comps[:na])).truncated(wmax)

    return Morphism(rig, src, tgt, col, name="swap")


def inj_left(rig, a, b) -> Morphism:
    return Morphism(rig, a, biproduct(a, b),
                    lambda l, w: LinComb.basis(rig, inl(l)).truncated(w), name="inj0")


def inj_right(rig, a, b) -> Morphism:
    return Morphism(rig, b, biproduct(a, b),
                    lambda l, w: LinComb.basis(rig, inr(l)).truncated(w), name="inj1")


def proj_left(rig, a, b) -> Morphism:
    def col(label, wmax):
        if label.tag == "inl":
            return LinComb.basis(rig, label.payload).truncated(wmax)
        return LinComb.zero(rig)
    return Morphism(rig, biproduct(a, b), a, col, name="proj0")


def proj_right(rig, a, b) -> Morphism:
    def col(label, wmax):
        if label.tag == "inr":
            return LinComb.basis(rig, label.payload).truncated(wmax)
        return LinComb.zero(rig)
    return Morphism(rig, biproduct(a, b), b, col, name="proj1")


def copair(f: Morphism, g: Morphism) -> Morphism:
    """[f, g]: A (+) B -> C."""
    if f.target != g.target:
        raise ValueError("copair targets differ")
    src = biproduct(f.source, g.source)

    def col(label, wmax):
        if label.tag == "inl":
            return f.column(label.payload, wmax)
        if label.tag == "inr":
            return g.column(label.payload, wmax)
        return LinComb.zero(f.rig)

    his = (f.shift_hi, g.shift_hi)
    los = (f.shift_lo, g.shift_lo)
    hi = None if any(h is None for h in his) else max(his)
    lo = None if any(l is None for l in los) else min(los)
    return Morphism(f.rig, src, f.target, col,
                    name="[%s, %s]" % (f.name, g.name),
                    shift_lo=lo, shift_hi=hi,
                    finite_columns=f.finite_columns and g.finite_columns,
                    needed_window=lambda W: max(f._needed(W), g._needed(W)))


def pair_into(f: Morphism, g: Morphism) -> Morphism:
    """<f, g>: C -> A (+) B."""
    rig = f.rig
    left = compose(inj_left(rig, f.target, g.target), f)
    right = compose(inj_right(rig, f.target, g.target), g)
    return add_morphisms(left, right)


# ---------------------------------------------------------------------------
# points and equality


def point_as_morphism(rig, obj, point_label: Label) -> Morphism:
    lc = LinComb(rig, dict(point_label.payload))
    return from_columns(rig, UNIT_OBJ, obj, {UNIT: lc},
                        name="pt%r" % point_label)


def morphism_as_point(m: Morphism) -> Label:
    if m.source != UNIT_OBJ:
        raise ValueError("not a point: source is %s" % m.source.name)
    return point(m.column(UNIT).items())


def points_of(rig, obj, max_weight: int):
    """All points I -> obj whose point label weighs at most max_weight,
    as (point_label, morphism) pairs in canonical order."""
    pts = PointsObject(rig, obj)
    out = []
    for lbl in enumerate_basis(pts, max_weight):
        out.append((lbl, point_as_morphism(rig, obj, lbl)))
    return out


def morphisms_equal_up_to(f: Morphism, g: Morphism, max_weight: int,
                          window: Optional[int] = None, max_failures: int = 5):
    """Compare columns on every source label of weight <= max_weight.

    When both sides have a finite upper weight shift the comparison is
    exact; otherwise outputs are compared inside the truncation window
    (default 2*max_weight + 3).  Returns (equal, failures) where each
    failure is (label, lhs_column, rhs_column).
    """
    if f.source != g.source or f.target != g.target:
        raise ValueError("endpoint mismatch: %r vs %r" % (f, g))
    if f.finite_columns and g.finite_columns:
        window = None
    elif window is None:
        window = 2 * max_weight + 3
    failures = []
    for label in enumerate_basis(f.source, max_weight):
        lhs = f.column(label, window)
        rhs = g.column(label, window)
        if lhs != rhs:
            failures.append((label, lhs, rhs))
            if len(failures) >= max_failures:
                break
    return (not failures, failures)
