"""Finite commutative rings with identity, stored as total operation tables.

Every backend (residues, raw tables, polynomial quotients and all the
constructions built on top of them) ends up as a pair of ``order x order``
index tables.  Element identity is by index; rings never change after
construction, so derived data is cached on the instance.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass

import numpy as np

from .errors import AxiomError, DegenerateRingError, InvalidOrderError, OrderBoundError

DEFAULT_MAX_ORDER = 4096

_ids = itertools.count(1)


def max_order():
    """Size bound for materialized tables; ``RINGLAB_MAX_ORDER`` overrides it."""
    return int(os.environ.get("RINGLAB_MAX_ORDER", DEFAULT_MAX_ORDER))


def check_order(n):
    if n > max_order():
        raise OrderBoundError(f"order {n} exceeds the configured bound {max_order()}")


def _frozen(table):
    arr = np.ascontiguousarray(table, dtype=np.int64)
    arr.setflags(write=False)
    return arr


class FiniteRing:
    """A finite commutative ring with nonzero identity.

    ``add`` and ``mul`` are ``order x order`` integer tables over element
    indices.  ``labels[i]`` is the human-facing name of element ``i`` (an
    int for residue rings, tuples for polynomial residues and pairs for the
    product-like constructions).
    """

    def __init__(self, add, mul, zero, one, labels=None, backend=("table",),
                 verify=False, degenerate=False):
        self.add = _frozen(add)
        self.mul = _frozen(mul)
        self.order = int(self.add.shape[0])
        self.zero = int(zero)
        self.one = int(one)
        self.backend = tuple(backend)
        self.labels = list(range(self.order)) if labels is None else list(labels)
        self.degenerate = degenerate
        self.ring_id = next(_ids)
        self._label_index = None
        self._cache = {}
        if not degenerate and self.order < 2:
            raise InvalidOrderError("a ring with nonzero identity has at least 2 elements")
        if verify:
            report = verify_ring_axioms(self)
            if not report.ok:
                raise AxiomError(report.axiom, report.witness)

    # -- element access -------------------------------------------------

    def __len__(self):
        return self.order

    def __repr__(self):
        return f"<FiniteRing {self.describe()} order={self.order}>"

    def describe(self):
        kind, *params = self.backend
        if not params:
            return kind
        return f"{kind}({', '.join(map(str, params))})"

    def __call__(self, x):
        return RingElement(self, self.index(x))

    def elements(self):
        return [RingElement(self, i) for i in range(self.order)]

    def label(self, i):
        return self.labels[i]

    def _aliases(self):
        """Extra label -> index entries (e.g. parent labels of a quotient)."""
        return {}

    def index(self, x):
        """Index of ``x``: a RingElement of this ring, a label, or a raw index."""
        if isinstance(x, RingElement):
            if x.ring is not self:
                from .errors import RingMismatchError
                raise RingMismatchError("element belongs to a different ring")
            return x.index
        if self._label_index is None:
            table = dict(self._aliases())
            table.update((lab, i) for i, lab in enumerate(self.labels))
            self._label_index = table
        key = _freeze_label(x)
        if key in self._label_index:
            return self._label_index[key]
        if isinstance(key, (int, np.integer)) and 0 <= key < self.order:
            return int(key)
        raise KeyError(f"{x!r} is not an element of {self.describe()}")

    # -- arithmetic on indices -------------------------------------------

    @property
    def neg(self):
        if "neg" not in self._cache:
            rows, cols = np.nonzero(self.add == self.zero)
            neg = np.empty(self.order, dtype=np.int64)
            neg[rows] = cols
            neg.setflags(write=False)
            self._cache["neg"] = neg
        return self._cache["neg"]

    def power(self, x, k):
        result = self.one
        base = x
        while k:
            if k & 1:
                result = int(self.mul[result, base])
            base = int(self.mul[base, base])
            k >>= 1
        return result

    @property
    def mul_rows(self):
        """Multiplication table as nested lists, for tight scalar loops."""
        if "mul_rows" not in self._cache:
            self._cache["mul_rows"] = self.mul.tolist()
        return self._cache["mul_rows"]

    @property
    def add_rows(self):
        if "add_rows" not in self._cache:
            self._cache["add_rows"] = self.add.tolist()
        return self._cache["add_rows"]

    @property
    def units(self):
        if "units" not in self._cache:
            rows = np.nonzero((self.mul == self.one).any(axis=1))[0]
            self._cache["units"] = frozenset(int(i) for i in rows)
        return self._cache["units"]

    def is_unit(self, x):
        return x in self.units

    def require_usable(self):
        if self.degenerate:
            raise DegenerateRingError("the zero ring cannot be used as an ordinary ring")


def _freeze_label(x):
    if isinstance(x, list):
        return tuple(_freeze_label(v) for v in x)
    if isinstance(x, tuple):
        return tuple(_freeze_label(v) for v in x)
    if isinstance(x, np.integer):
        return int(x)
    return x


@dataclass(frozen=True)
class RingElement:
    ring: FiniteRing
    index: int

    @property
    def ring_id(self):
        return self.ring.ring_id

    def _other(self, other):
        if isinstance(other, RingElement):
            if other.ring is not self.ring:
                from .errors import RingMismatchError
                raise RingMismatchError("arithmetic between elements of different rings")
            return other.index
        return self.ring.index(other)

    def __add__(self, other):
        return RingElement(self.ring, int(self.ring.add[self.index, self._other(other)]))

    __radd__ = __add__

    def __mul__(self, other):
        return RingElement(self.ring, int(self.ring.mul[self.index, self._other(other)]))

    __rmul__ = __mul__

    def __neg__(self):
        return RingElement(self.ring, int(self.ring.neg[self.index]))

    def __sub__(self, other):
        return self + (-RingElement(self.ring, self._other(other)))

    def __pow__(self, k):
        return RingElement(self.ring, self.ring.power(self.index, k))

    def is_unit(self):
        return self.ring.is_unit(self.index)

    def __repr__(self):
        return repr(self.ring.labels[self.index])


# -- axiom verification ---------------------------------------------------


@dataclass(frozen=True)
class AxiomReport:
    ok: bool
    axiom: str | None = None
    witness: tuple = ()

    def __bool__(self):
        return self.ok


def _first(mask):
    hit = np.argwhere(mask)
    return tuple(int(v) for v in hit[0])


def verify_ring_axioms(R):
    """Exhaustively check the commutative-ring-with-identity axioms.

    Returns the first failing axiom together with a witness tuple of
    element indices, or a passing report.  Cost is O(order^3).
    """
    add, mul, n = R.add, R.mul, R.order
    if add.shape != (n, n) or mul.shape != (n, n):
        return AxiomReport(False, "square-tables", ())
    for name, table in (("additive-closure", add), ("multiplicative-closure", mul)):
        bad = (table < 0) | (table >= n)
        if bad.any():
            return AxiomReport(False, name, _first(bad))
    if not (0 <= R.zero < n and 0 <= R.one < n):
        return AxiomReport(False, "identity-indices", (R.zero, R.one))
    if R.zero == R.one and not R.degenerate:
        return AxiomReport(False, "nonzero-identity", (R.zero,))
    ar = np.arange(n)
    bad = add[R.zero] != ar
    if bad.any():
        return AxiomReport(False, "additive-identity", _first(bad))
    bad = add != add.T
    if bad.any():
        return AxiomReport(False, "additive-commutativity", _first(bad))
    bad = ~(add == R.zero).any(axis=1)
    if bad.any():
        return AxiomReport(False, "additive-inverse", _first(bad))
    bad = mul != mul.T
    if bad.any():
        return AxiomReport(False, "commutativity", _first(bad))
    bad = mul[R.one] != ar
    if bad.any():
        return AxiomReport(False, "unital", (R.one,) + _first(bad))
    for x in range(n):
        bad = add[add[x][:, None], ar[None, :]] != add[x][add]
        if bad.any():
            return AxiomReport(False, "additive-associativity", (x,) + _first(bad))
        bad = mul[mul[x][:, None], ar[None, :]] != mul[x][mul]
        if bad.any():
            return AxiomReport(False, "associativity", (x,) + _first(bad))
        bad = mul[x][add] != add[mul[x][:, None], mul[x][None, :]]
        if bad.any():
            return AxiomReport(False, "distributivity", (x,) + _first(bad))
    return AxiomReport(True)


# -- backends -------------------------------------------------------------


def make_zmod(n):
    """The residue ring Z/nZ; element index i is the residue i."""
    if n < 2:
        raise InvalidOrderError(f"Z/nZ needs n >= 2, got {n}")
    check_order(n)
    ar = np.arange(n)
    add = (ar[:, None] + ar[None, :]) % n
    mul = (ar[:, None] * ar[None, :]) % n
    return FiniteRing(add, mul, 0, 1, backend=("zmod", n))


def make_table_ring(add, mul, zero, one, labels=None):
    """Ring from raw tables; always verified, raising AxiomError on failure."""
    add = np.asarray(add, dtype=np.int64)
    mul = np.asarray(mul, dtype=np.int64)
    n = add.shape[0]
    if add.ndim != 2 or add.shape != (n, n) or mul.shape != (n, n):
        raise AxiomError("square-tables", (), "tables must be square and of equal size")
    check_order(n)
    return FiniteRing(add, mul, zero, one, labels=labels, backend=("table", n), verify=True)


def is_prime(p):
    if p < 2:
        return False
    return all(p % d for d in range(2, int(p ** 0.5) + 1))


def _poly_divides(d, f, p):
    """True if the monic polynomial ``d`` divides ``f`` over F_p (ascending coefficients)."""
    r = list(f)
    dd = len(d) - 1
    for top in range(len(r) - 1, dd - 1, -1):
        c = r[top] % p
        if c:
            for i in range(dd + 1):
                r[top - dd + i] = (r[top - dd + i] - c * d[i]) % p
    return not any(v % p for v in r[:dd])


def is_irreducible(p, f):
    k = len(f) - 1
    for deg in range(1, k // 2 + 1):
        for low in itertools.product(range(p), repeat=deg):
            if _poly_divides(list(low) + [1], f, p):
                return False
    return True


def least_irreducible(p, k):
    """Least monic irreducible of degree ``k`` over F_p, in index order of
    its lower coefficients."""
    for i in range(p ** k):
        low = [(i // p ** j) % p for j in range(k)]
        f = low + [1]
        if is_irreducible(p, f):
            return f
    raise InvalidOrderError(f"no irreducible polynomial of degree {k} over F_{p}")


def make_poly_quotient(p, f):
    """F_p[t]/(f) for a monic ``f`` given by ascending coefficients.

    Element index ``i`` is the residue polynomial whose coefficient vector is
    the base-p expansion of ``i`` (constant term least significant); its
    label is that coefficient tuple, constant term first.
    """
    if not is_prime(p):
        raise InvalidOrderError(f"{p} is not prime")
    f = [int(c) % p for c in f]
    k = len(f) - 1
    if k < 1:
        raise InvalidOrderError("polynomial must have degree >= 1")
    if f[-1] != 1:
        raise InvalidOrderError("polynomial must be monic (leading coefficient 1)")
    n = p ** k
    check_order(n)
    ar = np.arange(n)
    digits = np.stack([(ar // p ** j) % p for j in range(k)], axis=1)
    weights = p ** np.arange(k)
    add = ((digits[:, None, :] + digits[None, :, :]) % p) @ weights
    # t^m mod f for m < 2k-1, as coefficient vectors
    reduce_rows = []
    cur = [0] * k
    cur[0] = 1
    for _ in range(2 * k - 1):
        reduce_rows.append(cur[:])
        lead = cur[-1]
        cur = [0] + cur[:-1]
        for i in range(k):
            cur[i] = (cur[i] - lead * f[i]) % p
    red = np.array(reduce_rows, dtype=np.int64)
    prod = np.zeros((n, n, k), dtype=np.int64)
    for i in range(k):
        for j in range(k):
            c = np.outer(digits[:, i], digits[:, j]) % p
            prod += c[:, :, None] * red[i + j][None, None, :]
    mul = (prod % p) @ weights
    labels = [tuple(int(v) for v in row) for row in digits]
    return FiniteRing(add, mul, 0, 1, labels=labels, backend=("polyquot", p, tuple(f)))


def make_gf(p, k):
    """GF(p^k) as F_p[t]/(f) with the least irreducible ``f`` of degree k."""
    if k == 1:
        R = make_poly_quotient(p, [0, 1])
    else:
        R = make_poly_quotient(p, least_irreducible(p, k))
    R.backend = ("gf", p, k)
    return R


def make_truncated(p, k):
    """F_p[t]/(t^k)."""
    R = make_poly_quotient(p, [0] * k + [1])
    R.backend = ("trunc", p, k)
    return R
