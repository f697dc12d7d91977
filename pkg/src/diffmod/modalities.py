"""Concrete coalgebra modalities: bags and points.

A modality bundle packages a comonad (functor, eps, delta) whose values
are cocommutative comonoids (e, comul), optionally with a bialgebra
convolution structure (u, nabla), monoidal constraints (m_unit,
m_tensor) and a deriving transformation / codereliction.

* ``bag_modality`` is the free-commutative-monoid exponential: !X is
  the object of finite multisets over X.  Its comonultiplication
  delta has infinite columns (a bag decomposes into arbitrarily many
  empty parts), so it evaluates through a truncation window only.

* ``points_modality`` is the "linearise every point" modality: PX has
  one basis label per point I -> X, and every structure map is induced
  pointwise.  It needs a finite rig (bool or z2) and an enumerable X.
"""

import itertools
from collections import Counter

from . import symalg
from .actions import coderive
from .category import (LinComb, Morphism, NeedsWindow, PointsObject,
                       UNIT_OBJ, add_morphisms, compose, compose_chain,
                       biproduct, identity, inj_left, inj_right, nfactors,
                       point_as_morphism, proj_left, proj_right, tensor,
                       tensor_mor, zero_morphism)
from .labels import UNIT, bag, pair_chain, point, unpair_chain


def set_partitions(items):
    """All partitions of a list of occurrences into nonempty blocks."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]
        yield [[first]] + part


def _matching_tables(row_sums, col_sums):
    """Contingency tables with the given margins, plus bijection counts.

    A table ``t`` describes a way of pairing two equal-size multisets:
    ``t[i][j]`` copies of the i-th distinct left member go to the j-th
    distinct right member.  The count is the number of bijections of
    occurrences inducing that table: prod(a_i!) * prod(b_j!) / prod(t_ij!).
    """
    from math import factorial, prod

    ncols = len(col_sums)

    def rows(i, remaining):
        if i == len(row_sums):
            if all(r == 0 for r in remaining):
                yield []
            return
        target = row_sums[i]

        def fill(j, left, acc):
            if j == ncols:
                if left == 0:
                    yield tuple(acc)
                return
            for k in range(min(left, remaining[j]) + 1):
                yield from fill(j + 1, left - k, acc + [k])

        for row in fill(0, target, []):
            rest = [remaining[j] - row[j] for j in range(ncols)]
            for tail in rows(i + 1, rest):
                yield [row] + tail

    total = prod(factorial(a) for a in row_sums) * \
        prod(factorial(b) for b in col_sums)
    for table in rows(0, list(col_sums)):
        denom = prod(factorial(k) for row in table for k in row)
        yield table, total // denom


class ModalityBundle:
    kind = "abstract"

    def __init__(self, rig):
        self.rig = rig
        self._cache = {}

    def _memo(self, key, make):
        if key not in self._cache:
            self._cache[key] = make()
        return self._cache[key]

    # comonad / comonoid interface ---------------------------------------
    def on_object(self, x):
        raise NotImplementedError

    def on_morphism(self, f):
        raise NotImplementedError

    def eps(self, x):
        raise NotImplementedError

    def delta(self, x):
        raise NotImplementedError

    def e(self, x):
        raise NotImplementedError

    def comul(self, x):
        raise NotImplementedError

    # additive bialgebra part --------------------------------------------
    def u(self, x):
        raise NotImplementedError

    def nabla(self, x):
        raise NotImplementedError

    # monoidal part -------------------------------------------------------
    def m_unit(self):
        raise NotImplementedError

    def m_tensor(self, x, y):
        raise NotImplementedError

    # differential part ----------------------------------------------------
    def deriving(self, x):
        return None

    def codereliction(self, x):
        d = self.deriving(x)
        if d is None:
            return None
        return codereliction_from_deriving(self, x, d)

    def coderive(self, x):
        """b: !X -> !X (x) X."""
        return self._memo(("coderive", x.key), lambda: coderive(
            self.rig, self.e(x), self.comul(x), self.eps(x)))


def codereliction_from_deriving(bundle, x, d=None) -> Morphism:
    """eta = d . (u (x) X): insert a lone element into the empty layer."""
    rig = bundle.rig
    if d is None:
        d = bundle.deriving(x)
    return compose(d, tensor_mor(bundle.u(x), identity(rig, x)))


def deriving_from_codereliction(bundle, x, eta=None) -> Morphism:
    """d = nabla . (1 (x) eta): linearised multiplication by one element."""
    rig = bundle.rig
    if eta is None:
        eta = bundle.codereliction(x)
    return compose(bundle.nabla(x),
                   tensor_mor(identity(rig, bundle.on_object(x)), eta))


# ---------------------------------------------------------------------------
# the bag (free symmetric algebra) modality


class BagModality(ModalityBundle):
    kind = "bag"

    def on_object(self, x):
        return self._memo(("obj", x.key), lambda: symalg.sym_object(x))

    def on_morphism(self, f):
        return symalg.sym_on_morphism(f)

    def eps(self, x):
        return self._memo(("eps", x.key), lambda: symalg.counit_to_object(self.rig, x))

    def e(self, x):
        return self._memo(("e", x.key), lambda: symalg.counit_to_unit(self.rig, x))

    def comul(self, x):
        return self._memo(("comul", x.key), lambda: symalg.comultiply(self.rig, x))

    def u(self, x):
        return self._memo(("u", x.key), lambda: symalg.empty_bag_unit(self.rig, x))

    def nabla(self, x):
        return self._memo(("nabla", x.key), lambda: symalg.multiply(self.rig, x))

    def deriving(self, x):
        return self._memo(("der", x.key), lambda: symalg.append_map(self.rig, x))

    def codereliction(self, x):
        return self._memo(("coder", x.key), lambda: symalg.singleton_map(self.rig, x))

    def delta(self, x):
        return self._memo(("delta", x.key), lambda: self._delta(x))

    def _delta(self, x):
        rig = self.rig
        bx = self.on_object(x)
        bbx = self.on_object(bx)

        def col(label, wmax):
            if wmax is None:
                raise NeedsWindow("bag delta has infinite columns")
            base = Counter()
            for part in set_partitions(list(label.payload)):
                base[tuple(sorted((bag(p) for p in part), key=lambda l: l.sort_key()))] += 1
            w_in = label.weight
            terms = {}
            for parts, c in base.items():
                for k in range(0, wmax - w_in - len(parts) + 1):
                    out = bag(parts + (bag(()),) * k)
                    v = rig.normalize(c)
                    if v != rig.zero:
                        prev = terms.get(out)
                        terms[out] = v if prev is None else rig.add(prev, v)
            return LinComb(rig, terms)

        return Morphism(rig, bx, bbx, col, name="delta",
                        shift_lo=0, shift_hi=None, finite_columns=False)

    def m_unit(self):
        def make():
            rig = self.rig
            bi = self.on_object(UNIT_OBJ)

            def col(label, wmax):
                if wmax is None:
                    raise NeedsWindow("bag m_unit has infinite columns")
                return LinComb(rig, {bag((UNIT,) * k): rig.one
                                     for k in range(wmax + 1)})

            return Morphism(rig, UNIT_OBJ, bi, col, name="m_I",
                            shift_lo=0, shift_hi=None, finite_columns=False)
        return self._memo(("m_unit",), make)

    def m_tensor(self, x, y):
        def make():
            rig = self.rig
            nx, ny = nfactors(x), nfactors(y)
            src = tensor(self.on_object(x), self.on_object(y))
            tgt = self.on_object(tensor(x, y))

            def col(label, wmax):
                b, c = unpair_chain(label, 2)
                n = len(b.payload)
                if n != len(c.payload):
                    return LinComb.zero(rig)
                # every member is used exactly once, so the output weight
                # is input weight minus the bag size, whatever the matching
                if wmax is not None and label.weight - n > wmax:
                    return LinComb.zero(rig)
                left = sorted(Counter(b.payload).items())
                right = sorted(Counter(c.payload).items())
                terms = {}
                for table, count in _matching_tables(
                        [m for _, m in left], [m for _, m in right]):
                    members = []
                    for i, (xi, _) in enumerate(left):
                        for j, (yj, _) in enumerate(right):
                            fused = pair_chain(list(unpair_chain(xi, nx))
                                               + list(unpair_chain(yj, ny)))
                            members.extend([fused] * table[i][j])
                    out = bag(members)
                    v = rig.normalize(count)
                    if v != rig.zero:
                        prev = terms.get(out)
                        terms[out] = v if prev is None else rig.add(prev, v)
                return LinComb(rig, terms)

            return Morphism(rig, src, tgt, col, name="m",
                            shift_lo=None, shift_hi=0,
                            needed_window=lambda W: 2 * W + 1)
        return self._memo(("m_tensor", x.key, y.key), make)


# ---------------------------------------------------------------------------
# the points modality


class PointsModality(ModalityBundle):
    kind = "points"

    def __init__(self, rig):
        if rig.nonzero_elements is None:
            raise ValueError("points modality needs a finite rig, got %s" % rig.name)
        super().__init__(rig)

    def on_object(self, x):
        return self._memo(("obj", x.key), lambda: PointsObject(self.rig, x))

    def on_morphism(self, f):
        rig = self.rig
        src = self.on_object(f.source)
        tgt = self.on_object(f.target)

        def col(label, wmax):
            image = f.apply(LinComb(rig, dict(label.payload)))
            return LinComb.basis(rig, point(image.items())).truncated(wmax)

        return Morphism(rig, src, tgt, col, name="P(%s)" % f.name,
                        shift_lo=None, shift_hi=None, finite_columns=True)

    def eps(self, x):
        def make():
            rig = self.rig

            def col(label, wmax):
                return LinComb(rig, dict(label.payload)).truncated(wmax)

            return Morphism(rig, self.on_object(x), x, col, name="eps",
                            shift_lo=None, shift_hi=-1, finite_columns=True)
        return self._memo(("eps", x.key), make)

    def e(self, x):
        def make():
            rig = self.rig

            def col(label, wmax):
                return LinComb.basis(rig, UNIT).truncated(wmax)

            return Morphism(rig, self.on_object(x), UNIT_OBJ, col, name="e",
                            shift_lo=None, shift_hi=0, finite_columns=True)
        return self._memo(("e", x.key), make)

    def comul(self, x):
        def make():
            rig = self.rig
            px = self.on_object(x)

            def col(label, wmax):
                return LinComb.basis(rig, pair_chain((label, label))).truncated(wmax)

            return Morphism(rig, px, tensor(px, px), col, name="split",
                            shift_lo=0, shift_hi=None, finite_columns=True)
        return self._memo(("comul", x.key), make)

    def delta(self, x):
        def make():
            rig = self.rig
            px = self.on_object(x)

            def col(label, wmax):
                return LinComb.basis(rig, point([(label, rig.one)])).truncated(wmax)

            return Morphism(rig, px, self.on_object(px), col, name="delta",
                            shift_lo=1, shift_hi=1)
        return self._memo(("delta", x.key), make)

    def u(self, x):
        def make():
            rig = self.rig

            def col(label, wmax):
                return LinComb.basis(rig, point(())).truncated(wmax)

            return Morphism(rig, UNIT_OBJ, self.on_object(x), col, name="u")
        return self._memo(("u", x.key), make)

    def nabla(self, x):
        def make():
            rig = self.rig
            px = self.on_object(x)

            def col(label, wmax):
                p, q = unpair_chain(label, 2)
                s = LinComb(rig, dict(p.payload)).add(LinComb(rig, dict(q.payload)))
                return LinComb.basis(rig, point(s.items())).truncated(wmax)

            return Morphism(rig, tensor(px, px), px, col, name="add",
                            shift_lo=None, shift_hi=0, finite_columns=True)
        return self._memo(("nabla", x.key), make)

    def m_unit(self):
        def make():
            rig = self.rig

            def col(label, wmax):
                return LinComb.basis(rig, point([(UNIT, rig.one)])).truncated(wmax)

            return Morphism(rig, UNIT_OBJ, self.on_object(UNIT_OBJ), col,
                            name="m_I", shift_lo=1, shift_hi=1)
        return self._memo(("m_unit",), make)

    def m_tensor(self, x, y):
        def make():
            rig = self.rig
            nx, ny = nfactors(x), nfactors(y)
            src = tensor(self.on_object(x), self.on_object(y))
            tgt = self.on_object(tensor(x, y))

            def col(label, wmax):
                p, q = unpair_chain(label, 2)
                entries = {}
                for (kx, vx) in p.payload:
                    for (ky, vy) in q.payload:
                        joined = pair_chain(list(unpair_chain(kx, nx))
                                            + list(unpair_chain(ky, ny)))
                        c = rig.mul(vx, vy)
                        prev = entries.get(joined)
                        c = c if prev is None else rig.add(prev, c)
                        if rig.is_zero(c):
                            entries.pop(joined, None)
                        else:
                            entries[joined] = c
                return LinComb.basis(rig, point(entries.items())).truncated(wmax)

            return Morphism(rig, src, tgt, col, name="m",
                            shift_lo=None, shift_hi=None, finite_columns=True)
        return self._memo(("m_tensor", x.key, y.key), make)


def bag_modality(rig) -> BagModality:
    return BagModality(rig)


def points_modality(rig) -> PointsModality:
    return PointsModality(rig)


# ---------------------------------------------------------------------------
# storage / costorage and the induced monoidal maps


def storage_top(bundle) -> Morphism:
    """chi_T: !0 -> I."""
    from .category import ZERO_OBJ
    return bundle.e(ZERO_OBJ)


def costorage_top(bundle) -> Morphism:
    """chi*_T: I -> !0."""
    from .category import ZERO_OBJ
    return bundle.u(ZERO_OBJ)


def storage_iso(bundle, x, y) -> Morphism:
    """chi: !(X (+) Y) -> !X (x) !Y."""
    rig = bundle.rig
    xy = biproduct(x, y)
    return compose(tensor_mor(bundle.on_morphism(proj_left(rig, x, y)),
                              bundle.on_morphism(proj_right(rig, x, y))),
                   bundle.comul(xy))


def costorage_iso(bundle, x, y) -> Morphism:
    """chi*: !X (x) !Y -> !(X (+) Y)."""
    rig = bundle.rig
    xy = biproduct(x, y)
    return compose(bundle.nabla(xy),
                   tensor_mor(bundle.on_morphism(inj_left(rig, x, y)),
                              bundle.on_morphism(inj_right(rig, x, y))))


def m_unit_from_storage(bundle) -> Morphism:
    """I -> !0 -> !!0 -> !I, the storage-derived nullary constraint."""
    from .category import ZERO_OBJ
    return compose_chain(costorage_top(bundle),
                         bundle.delta(ZERO_OBJ),
                         bundle.on_morphism(storage_top(bundle)))


def m_tensor_from_storage(bundle, x, y) -> Morphism:
    """!X (x) !Y -> !(X (x) Y), the storage-derived binary constraint."""
    xy = biproduct(x, y)
    return compose_chain(
        costorage_iso(bundle, x, y),
        bundle.delta(xy),
        bundle.on_morphism(storage_iso(bundle, x, y)),
        bundle.on_morphism(tensor_mor(bundle.eps(x), bundle.eps(y))))
