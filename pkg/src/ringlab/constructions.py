"""Ring constructions: direct products, quotients, trivial extensions,
amalgamations, duplications and localizations, together with the
multiplicative sets they induce.

Each constructor materializes full tables and keeps a codec back to the
ingredients (``pair``/``index_of``) so that ideals and multiplicative sets
can be lifted or projected exhaustively.
"""

from __future__ import annotations

import itertools

import numpy as np

from ._bits import mask_of
from .errors import AxiomError, RingMismatchError
from .ideals import Ideal, ideal_from_mask, is_prime_ideal
from .modhom import RingHom, Submodule, identity_hom
from .mulsets import make_mult_set, mult_set_from_elements
from .ring import FiniteRing, check_order


# -- direct product ---------------------------------------------------------


class ProductRing(FiniteRing):
    """``R1 x R2``; element ``i`` is the pair ``(i // |R2|, i % |R2|)``."""

    def __init__(self, R1, R2):
        n1, n2 = R1.order, R2.order
        check_order(n1 * n2)
        ar = np.arange(n1 * n2)
        a, b = ar // n2, ar % n2
        add = R1.add[a[:, None], a[None, :]] * n2 + R2.add[b[:, None], b[None, :]]
        mul = R1.mul[a[:, None], a[None, :]] * n2 + R2.mul[b[:, None], b[None, :]]
        labels = [(R1.labels[x], R2.labels[y]) for x, y in zip(a.tolist(), b.tolist())]
        super().__init__(add, mul, R1.zero * n2 + R2.zero, R1.one * n2 + R2.one,
                         labels=labels, backend=("product", R1.describe(), R2.describe()))
        self.factors = (R1, R2)

    def pair(self, i):
        n2 = self.factors[1].order
        return divmod(i, n2)

    def index_of(self, x1, x2):
        return x1 * self.factors[1].order + x2

    def projection(self, k):
        ar = np.arange(self.order)
        n2 = self.factors[1].order
        mapping = ar // n2 if k == 0 else ar % n2
        return RingHom(self, self.factors[k], mapping, verify=False, name=f"proj{k + 1}")

    def product_ideal(self, I1, I2):
        idx = [self.index_of(x, y) for x, y in itertools.product(I1.elements, I2.elements)]
        return ideal_from_mask(self, mask_of(idx, self.order))

    def split_ideal(self, I):
        """``(I1, I2)`` with ``I = I1 x I2`` (every ideal of a product has this form)."""
        R1, R2 = self.factors
        pairs = [self.pair(i) for i in I.elements]
        I1 = ideal_from_mask(R1, mask_of([p[0] for p in pairs], R1.order))
        I2 = ideal_from_mask(R2, mask_of([p[1] for p in pairs], R2.order))
        return I1, I2

    def product_mult_set(self, S1, S2):
        return mult_set_from_elements(
            self, [self.index_of(x, y) for x, y in itertools.product(S1.elements, S2.elements)])


def product(R1, R2):
    return ProductRing(R1, R2)


def diagonal_hom(A, P):
    """``a -> (a, a)`` into ``P = A x A``."""
    return RingHom(A, P, [P.index_of(a, a) for a in range(A.order)], verify=False, name="diag")


# -- quotient ----------------------------------------------------------------


class QuotientRing(FiniteRing):
    """``R / I`` with cosets numbered by their least representative."""

    def __init__(self, R, I):
        if I.ring is not R:
            raise RingMismatchError("ideal is not in this ring")
        if I.is_whole():
            raise AxiomError("nonzero-identity", (), "quotient by the whole ring is the zero ring")
        coset = np.full(R.order, -1, dtype=np.int64)
        reps = []
        members = np.asarray(I.elements)
        for x in range(R.order):
            if coset[x] < 0:
                coset[R.add[x][members]] = len(reps)
                reps.append(x)
        reps = np.asarray(reps)
        add = coset[R.add[reps[:, None], reps[None, :]]]
        mul = coset[R.mul[reps[:, None], reps[None, :]]]
        super().__init__(add, mul, coset[R.zero], coset[R.one],
                         labels=[R.labels[r] for r in reps],
                         backend=("quotient", R.describe(), len(I)))
        self.parent = R
        self.ideal = I
        self.reps = reps
        self.coset = coset
        self.projection = RingHom(R, self, coset, verify=False, name="proj")

    def _aliases(self):
        return {lab: int(self.coset[i]) for i, lab in enumerate(self.parent.labels)}


def quotient_ring(R, I):
    """``(R/I, projection)``; rejects ``I = R``."""
    Q = QuotientRing(R, I)
    return Q, Q.projection


# -- trivial extension -------------------------------------------------------


class TrivialExtensionRing(FiniteRing):
    """``A x E`` with ``(a, e)(b, f) = (ab, af + be)``; index of (a, e) is ``a|E| + e``."""

    def __init__(self, A, E):
        if E.ring is not A:
            raise RingMismatchError("module is not over this ring")
        n, m = A.order, E.order
        check_order(n * m)
        ar = np.arange(n * m)
        a, e = ar // m, ar % m
        add = A.add[a[:, None], a[None, :]] * m + E.add[e[:, None], e[None, :]]
        cross = E.add[E.action[a[:, None], e[None, :]], E.action[a[None, :], e[:, None]]]
        mul = A.mul[a[:, None], a[None, :]] * m + cross
        labels = [(A.labels[x], E.labels[y]) for x, y in zip(a.tolist(), e.tolist())]
        super().__init__(add, mul, A.zero * m + E.zero, A.one * m + E.zero, labels=labels,
                         backend=("trivext", A.describe(), E.order))
        self.base = A
        self.module = E

    def pair(self, i):
        return divmod(i, self.module.order)

    def index_of(self, a, e):
        return a * self.module.order + e

    @property
    def projection(self):
        return RingHom(self, self.base, np.arange(self.order) // self.module.order,
                       verify=False, name="proj1")

    @property
    def inclusion(self):
        A, E = self.base, self.module
        return RingHom(A, self, [self.index_of(a, E.zero) for a in range(A.order)],
                       verify=False, name="incl")

    def lift_mult_set(self, S0, part="module"):
        """``S0 x 0`` (part="zero") or ``S0 x E`` (part="module")."""
        if S0.ring is not self.base:
            raise RingMismatchError("multiplicative set is not over the base ring")
        E = self.module
        if part == "zero":
            return make_mult_set(self, [self.index_of(g, E.zero) for g in S0.generators])
        return mult_set_from_elements(
            self, [self.index_of(s, e) for s in S0.elements for e in range(E.order)])

    def base_mult_set(self, S):
        """``S0 = {a : (a, e) in S for some e}``."""
        return mult_set_from_elements(self.base, sorted({self.pair(x)[0] for x in S.elements}))

    def module_ideal(self, F):
        """The ideal ``0 x F`` for a submodule F of E."""
        A = self.base
        return Ideal(self, mask_of([self.index_of(A.zero, e) for e in F.elements], self.order),
                     tuple(self.index_of(A.zero, e) for e in F.generators))

    def homogeneous_ideal(self, I, F):
        """``I x F`` (caller guarantees ``IE <= F``)."""
        idx = [self.index_of(a, e) for a in I.elements for e in F.elements]
        return ideal_from_mask(self, mask_of(idx, self.order))

    def decompose(self, L):
        """First projection I of L and ``F = {e : (0, e) in L}``."""
        A, E = self.base, self.module
        pairs = [self.pair(x) for x in L.elements]
        I = ideal_from_mask(A, mask_of([a for a, _ in pairs], A.order))
        fe = [e for a, e in pairs if a == A.zero]
        F = Submodule(E, mask_of(fe, E.order), tuple(fe))
        return I, F


def trivial_extension(A, E):
    return TrivialExtensionRing(A, E)


# -- amalgamation -------------------------------------------------------------


class AmalgamationRing(FiniteRing):
    """``A ⋈^f J = {(a, f(a) + j)}``; index of ``(a, f(a) + j_t)`` is ``a|J| + t``
    where ``j_t`` is the t-th element of J in ascending order."""

    def __init__(self, A, B, f, J):
        if f.source is not A or f.target is not B or J.ring is not B:
            raise RingMismatchError("amalgamation data live over mismatched rings")
        jl = np.asarray(J.elements)
        nj = len(jl)
        check_order(A.order * nj)
        pos = np.full(B.order, -1, dtype=np.int64)
        pos[jl] = np.arange(nj)
        fm = f.map
        ar = np.arange(A.order * nj)
        a, t = ar // nj, ar % nj
        b = B.add[fm[a], jl[t]]
        tables = []
        for opA, opB in ((A.add, B.add), (A.mul, B.mul)):
            a2 = opA[a[:, None], a[None, :]]
            b2 = opB[b[:, None], b[None, :]]
            t2 = pos[B.add[b2, B.neg[fm[a2]]]]
            if (t2 < 0).any():
                raise AxiomError("closure", tuple(int(v) for v in np.argwhere(t2 < 0)[0]),
                                 "amalgamation not closed: J is not an ideal")
            tables.append(a2 * nj + t2)
        labels = [(A.labels[x], B.labels[y]) for x, y in zip(a.tolist(), b.tolist())]
        zero = A.zero * nj + int(pos[B.zero])
        one = A.one * nj + int(pos[B.zero])
        super().__init__(tables[0], tables[1], zero, one, labels=labels,
                         backend=("amalg", A.describe(), B.describe(), nj))
        self.A, self.B, self.f, self.J = A, B, f, J
        self.first = a
        self.second = b
        self.jpos = pos

    def pair(self, i):
        return int(self.first[i]), int(self.second[i])

    def index_of(self, a, b):
        t = int(self.jpos[self.B.add[b, self.B.neg[self.f(a)]]])
        if t < 0:
            raise KeyError(f"({a}, {b}) is not in the amalgamation")
        return a * len(self.J) + t

    @property
    def projection(self):
        return RingHom(self, self.A, self.first, verify=False, name="proj1")

    @property
    def projection_B(self):
        return RingHom(self, self.B, self.second, verify=False, name="proj2")

    def inclusion_into(self, P):
        """Embedding into the product ``P = A x B``."""
        return RingHom(self, P, [P.index_of(*self.pair(i)) for i in range(self.order)],
                       verify=False, name="incl")

    def lift_mult_set(self, S0, part="zero"):
        """``S0 ⋈^f 0 = {(s, f(s))}`` (part="zero") or ``S0 ⋈^f J`` (part="ideal")."""
        if S0.ring is not self.A:
            raise RingMismatchError("multiplicative set is not over A")
        nj = len(self.J)
        if part == "zero":
            return make_mult_set(self, [self.index_of(g, self.f(g)) for g in S0.generators])
        return mult_set_from_elements(self, [s * nj + t for s in S0.elements for t in range(nj)])

    def base_mult_set(self, S):
        """``S0 = {a : (a, f(a) + j) in S for some j}``."""
        return mult_set_from_elements(self.A, sorted({int(self.first[x]) for x in S.elements}))

    def lifted_ideal(self, I):
        """``I ⋈^f J = {(i, f(i) + j) : i in I, j in J}``."""
        nj = len(self.J)
        idx = [i * nj + t for i in I.elements for t in range(nj)]
        return ideal_from_mask(self, mask_of(idx, self.order))


def amalgamation(A, B, f, J):
    return AmalgamationRing(A, B, f, J)


def duplication(A, I):
    """``A ⋈ I``: the amalgamation along the identity."""
    R = AmalgamationRing(A, A, identity_hom(A), I)
    R.backend = ("dup", A.describe(), len(I))
    return R


def is_homogeneous(R, L):
    """Homogeneity test for ideals of trivial extensions and amalgamations.

    For ``A x E``: L is homogeneous when ``L = I x F`` with I the first
    projection and ``F = {e : (0, e) in L}`` (and ``IE <= F``).  For an
    amalgamation: ``L = I ⋈^f J`` for the first projection I.  Returns
    ``(verdict, I, F)`` (F is None for amalgamations).
    """
    if L.ring is not R:
        raise RingMismatchError("ideal is not in this ring")
    if isinstance(R, TrivialExtensionRing):
        I, F = R.decompose(L)
        E = R.module
        target = [R.index_of(a, e) for a in I.elements for e in F.elements]
        if mask_of(target, R.order) != L.mask:
            return False, I, F
        IE = {int(E.action[a, e]) for a in I.elements for e in range(E.order)}
        return IE <= set(F.elements), I, F
    if isinstance(R, AmalgamationRing):
        I = ideal_from_mask(R.A, mask_of(R.first[L.elements], R.A.order))
        return R.lifted_ideal(I).mask == L.mask, I, None
    raise TypeError("homogeneity is defined for trivial extensions and amalgamations")


# -- localization ---------------------------------------------------------------


def stable_idempotent(R, t):
    """The idempotent power of ``t``: the first ``t^k`` with ``t^k = t^(2k)``."""
    p = t
    while True:
        if R.mul[p, p] == p:
            return int(p)
        p = int(R.mul[p, t])


class LocalizedRing(FiniteRing):
    """``S^-1 R`` realized as ``eR`` for the idempotent power ``e`` of the
    product of S's generators.  When ``0 in S`` this is the zero ring and the
    instance is flagged ``degenerate``."""

    def __init__(self, R, S):
        if S.ring is not R:
            raise RingMismatchError("multiplicative set is not over this ring")
        t = R.one
        for g in S.generators:
            t = int(R.mul[t, g])
        e = stable_idempotent(R, t)
        els = np.unique(R.mul[e])
        pos = np.full(R.order, -1, dtype=np.int64)
        pos[els] = np.arange(len(els))
        add = pos[R.add[np.ix_(els, els)]]
        mul = pos[R.mul[np.ix_(els, els)]]
        super().__init__(add, mul, pos[R.zero], pos[e], labels=[R.labels[x] for x in els],
                         backend=("localize", R.describe(), len(S)),
                         degenerate=len(els) == 1)
        self.parent = R
        self.mult_set = S
        self.idempotent = e
        self.embedding = els
        self.hom = RingHom(R, self, pos[R.mul[e]], verify=False, name="loc")

    def _aliases(self):
        return {lab: int(self.hom.map[i]) for i, lab in enumerate(self.parent.labels)}

    def verify(self):
        """Images of S are units; the kernel is ``{r : sr = 0 for some s in S}``."""
        R, S, h = self.parent, self.mult_set, self.hom
        if self.degenerate:
            return True
        if any(h(s) not in self.units for s in S.elements):
            return False
        kernel = {r for r in range(R.order) if h(r) == self.zero}
        killed = {r for r in range(R.order) if any(R.mul[s, r] == R.zero for s in S.elements)}
        return kernel == killed


def localize(R, S):
    """``(S^-1 R, r -> r/1)`` for a finite ring, verified on construction."""
    L = LocalizedRing(R, S)
    if not L.verify():
        raise AxiomError("localization", (L.idempotent,), "images of S are not all units")
    return L, L.hom


def image_mult_set(f, S):
    """Multiplicative closure of ``f(S)`` in the target."""
    if S.ring is not f.source:
        raise RingMismatchError("multiplicative set is not over the hom's source")
    return make_mult_set(f.target, [f(g) for g in S.generators])


def localize_at_prime(R, P):
    """``R_P`` as the localization at ``R - P``."""
    if not is_prime_ideal(P):
        from .errors import NotPrimeError
        raise NotPrimeError(f"{P!r} is not prime")
    S = mult_set_from_elements(R, [x for x in range(R.order) if not P.mask >> x & 1])
    return localize(R, S)


def annihilator(R, xs):
    """``{r : r x = 0 for every x in xs}``."""
    xs = list(xs)
    ok = [r for r in range(R.order) if all(R.mul[r, x] == R.zero for x in xs)]
    return ideal_from_mask(R, mask_of(ok, R.order))

