"""The free symmetric algebra on an object, with its full (bi)algebra kit.

``SX`` is the object of finite multisets (bags) over ``X``.  The monoid
structure is bag union, the comonoid structure is binomial splitting,
and the multiplication-by-one-element map ``append`` makes ``SX`` the
free object carrying a commuting ``X``-action.
"""

import itertools
from collections import Counter
from functools import lru_cache
from math import comb

from .category import (BagObject, LinComb, Morphism, UNIT_OBJ, tensor,
                       components, nfactors)
from .labels import UNIT, Label, bag, pair_chain, unpair_chain


def sym_object(x) -> BagObject:
    return BagObject(x)


def _no_window(W):
    raise RuntimeError("no sound truncation bound for this morphism")


def append_map(rig, x) -> Morphism:
    """d: SX (x) X -> SX, adjoin one element to the bag."""
    sx = sym_object(x)
    src = tensor(sx, x)
    nb = nfactors(x)

    def col(label, wmax):
        comps = unpair_chain(label, 1 + nb)
        b, elem = comps[0], pair_chain(comps[1:])
        return LinComb.basis(rig, bag(b.payload + (elem,))).truncated(wmax)

    return Morphism(rig, src, sx, col, name="app", shift_lo=1, shift_hi=1)


def empty_bag_unit(rig, x) -> Morphism:
    """u: I -> SX."""
    sx = sym_object(x)
    return Morphism(rig, UNIT_OBJ, sx,
                    lambda l, w: LinComb.basis(rig, bag(())).truncated(w),
                    name="u")


def singleton_map(rig, x) -> Morphism:
    """eta: X -> SX, the one-element bag."""
    sx = sym_object(x)

    def col(label, wmax):
        return LinComb.basis(rig, bag((label,))).truncated(wmax)

    return Morphism(rig, x, sx, col, name="eta", shift_lo=1, shift_hi=1)


def counit_to_unit(rig, x) -> Morphism:
    """e: SX -> I, supported on the empty bag."""
    sx = sym_object(x)

    def col(label, wmax):
        if not label.payload:
            return LinComb.basis(rig, UNIT).truncated(wmax)
        return LinComb.zero(rig)

    return Morphism(rig, sx, UNIT_OBJ, col, name="e")


def counit_to_object(rig, x) -> Morphism:
    """eps: SX -> X, supported on singleton bags."""
    sx = sym_object(x)

    def col(label, wmax):
        if len(label.payload) == 1:
            return LinComb.basis(rig, label.payload[0]).truncated(wmax)
        return LinComb.zero(rig)

    return Morphism(rig, sx, x, col, name="eps", shift_lo=-1, shift_hi=-1)


def multiply(rig, x) -> Morphism:
    """nabla: SX (x) SX -> SX, bag union."""
    sx = sym_object(x)

    def col(label, wmax):
        b1, b2 = unpair_chain(label, 2)
        return LinComb.basis(rig, bag(b1.payload + b2.payload)).truncated(wmax)

    return Morphism(rig, tensor(sx, sx), sx, col, name="mul")


def bag_splittings(members):
    """All ordered two-way splittings of a multiset, with binomial
    multiplicities: yields (left, right, count)."""
    counted = sorted(Counter(members).items(), key=lambda kv: kv[0].sort_key())
    def go(idx):
        if idx == len(counted):
            yield (), (), 1
            return
        elem, n = counted[idx]
        for left, right, c in go(idx + 1):
            for k in range(n + 1):
                yield (elem,) * k + left, (elem,) * (n - k) + right, c * comb(n, k)
    return go(0)


def comultiply(rig, x) -> Morphism:
    """Delta: SX -> SX (x) SX, binomial splitting."""
    sx = sym_object(x)

    def col(label, wmax):
        terms = {}
        for left, right, c in bag_splittings(label.payload):
            out = pair_chain((bag(left), bag(right)))
            v = rig.normalize(c)
            if v != rig.zero:
                prev = terms.get(out)
                terms[out] = v if prev is None else rig.add(prev, v)
        return LinComb(rig, terms).truncated(wmax)

    return Morphism(rig, sx, tensor(sx, sx), col, name="split")


def sym_on_morphism(f: Morphism) -> Morphism:
    """S(f): SX -> SY, elementwise image with product multiplicities."""
    rig = f.rig
    src = sym_object(f.source)
    tgt = sym_object(f.target)

    def col(label, wmax):
        # partial states are kept as sorted tuples so that assignments
        # differing only in member order merge as soon as possible
        terms = {(): (rig.one, 0)}
        members = label.payload
        for i, m in enumerate(members):
            remaining = len(members) - 1 - i
            budget = None if wmax is None else wmax - remaining
            img = f.column(m, budget)
            nxt = {}
            for partial, (c, used) in terms.items():
                for z, cz in img.items():
                    w = used + 1 + z.weight
                    if wmax is not None and w > wmax - remaining:
                        continue
                    key = tuple(sorted(partial + (z,),
                                       key=lambda l: l.sort_key()))
                    v = rig.mul(c, cz)
                    prev = nxt.get(key)
                    nxt[key] = (v if prev is None else rig.add(prev[0], v), w)
            terms = nxt
            if not terms:
                break
        out = {}
        for tup, (c, _) in terms.items():
            lbl = bag(tup)
            prev = out.get(lbl)
            out[lbl] = c if prev is None else rig.add(prev, c)
        return LinComb(rig, out)

    lo = 0 if f.shift_lo is not None and f.shift_lo >= 0 else None
    hi = 0 if (f.shift_hi is not None and f.shift_hi <= 0) else None
    if lo == 0:
        # elementwise images never lose weight, so neither does the bag map
        needed = lambda W: W
    else:
        # an output bag of weight <= W has k <= W members whose output
        # weights sum to <= W - k; window functions are convex, so the
        # total input budget peaks when one member takes the whole sum
        g = f.needed_window

        def needed(W):
            base = max(g(0), 0)
            best = 0
            for k in range(1, W + 1):
                best = max(best, k + max(g(W - k), 0) + (k - 1) * base)
            return best
    return Morphism(rig, src, tgt, col, name="S(%s)" % f.name,
                    shift_lo=lo, shift_hi=hi,
                    finite_columns=f.finite_columns,
                    needed_window=needed)
