"""Finite modules over a FiniteRing and verified ring homomorphisms."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from . import _lattice
from ._bits import indices_of, is_subset, mask_of
from .errors import AxiomError, RingMismatchError
from .mulsets import WitnessReport, timed
from .ring import _freeze_label, check_order


class FiniteModule:
    """A finite module: an abelian group table plus a scalar action table.

    ``action[r, m]`` is the index of ``r . m``.
    """

    def __init__(self, ring, add, action, zero=0, labels=None, backend=("tables",),
                 verify=True):
        self.ring = ring
        self.add = np.ascontiguousarray(add, dtype=np.int64)
        self.action = np.ascontiguousarray(action, dtype=np.int64)
        self.add.setflags(write=False)
        self.action.setflags(write=False)
        self.order = int(self.add.shape[0])
        self.zero = int(zero)
        self.labels = list(range(self.order)) if labels is None else list(labels)
        self.backend = tuple(backend)
        self._label_index = None
        self._cache = {}
        if verify:
            axiom, witness = verify_module_axioms(self)
            if axiom:
                raise AxiomError(axiom, witness)

    def __len__(self):
        return self.order

    def __repr__(self):
        return f"<FiniteModule {self.backend[0]} over {self.ring.describe()} order={self.order}>"

    @property
    def ring_id(self):
        return self.ring.ring_id

    def index(self, x):
        if self._label_index is None:
            self._label_index = {lab: i for i, lab in enumerate(self.labels)}
        key = _freeze_label(x)
        if key in self._label_index:
            return self._label_index[key]
        if isinstance(key, int) and 0 <= key < self.order:
            return key
        raise KeyError(f"{x!r} is not an element of this module")

    @property
    def neg(self):
        if "neg" not in self._cache:
            rows, cols = np.nonzero(self.add == self.zero)
            neg = np.empty(self.order, dtype=np.int64)
            neg[rows] = cols
            self._cache["neg"] = neg
        return self._cache["neg"]

    def cyclic_masks(self):
        """Mask of ``A e`` for every element ``e``."""
        if "cyclic" not in self._cache:
            self._cache["cyclic"] = _lattice.cyclic_masks(self.action.T, self.order)
        return self._cache["cyclic"]


def verify_module_axioms(M):
    """Return ``(None, ())`` when M is a module, else (failed axiom, witness)."""
    R, add, act, m = M.ring, M.add, M.action, M.order
    if add.shape != (m, m) or act.shape != (R.order, m):
        return "table-shape", ()
    if ((add < 0) | (add >= m)).any() or ((act < 0) | (act >= m)).any():
        return "closure", ()
    ar = np.arange(m)
    checks = [
        ("additive-identity", add[M.zero] != ar),
        ("additive-commutativity", add != add.T),
        ("additive-inverse", ~(add == M.zero).any(axis=1)),
        ("unital action", act[R.one] != ar),
    ]
    for name, bad in checks:
        if bad.any():
            return name, tuple(int(v) for v in np.argwhere(bad)[0])
    for x in range(m):
        bad = add[add[x][:, None], ar[None, :]] != add[x][add]
        if bad.any():
            return "additive-associativity", (x,) + tuple(int(v) for v in np.argwhere(bad)[0])
    for r in range(R.order):
        # r(m + m') = rm + rm'
        bad = act[r][add] != add[act[r][:, None], act[r][None, :]]
        if bad.any():
            return "action-additivity", (r,) + tuple(int(v) for v in np.argwhere(bad)[0])
        # (r + s)m = rm + sm
        bad = act[R.add[r]] != add[act[r][None, :], act]
        if bad.any():
            return "scalar-additivity", (r,) + tuple(int(v) for v in np.argwhere(bad)[0])
        # (rs)m = r(sm)
        bad = act[R.mul[r]] != act[r][act]
        if bad.any():
            return "action-associativity", (r,) + tuple(int(v) for v in np.argwhere(bad)[0])
    return None, ()


def make_module(R, add, action, zero=0, labels=None):
    """Module from raw tables, verified exhaustively."""
    add = np.asarray(add, dtype=np.int64)
    action = np.asarray(action, dtype=np.int64)
    if add.ndim != 2 or add.shape[0] != add.shape[1] or action.shape != (R.order, add.shape[0]):
        raise AxiomError("table-shape", (), "add must be m x m and action |R| x m")
    check_order(add.shape[0])
    return FiniteModule(R, add, action, zero, labels)


def make_free_module(R, k):
    """R^k with componentwise operations; labels are tuples of ring labels."""
    if k < 1:
        raise ValueError("rank must be >= 1")
    n = R.order
    check_order(n ** k)
    coords = np.array(list(itertools.product(range(n), repeat=k)), dtype=np.int64)
    weights = n ** np.arange(k - 1, -1, -1)
    add = R.add[coords[:, None, :], coords[None, :, :]] @ weights
    action = R.mul[np.arange(n)[:, None, None], coords[None, :, :]] @ weights
    labels = [tuple(R.labels[c] for c in row) for row in coords]
    zero = int(np.full(k, R.zero) @ weights)
    return FiniteModule(R, add, action, zero, labels, backend=("free", k), verify=False)


def restrict_scalars(M, f):
    """View the module M over ``f.target`` as a module over ``f.source``: r.m := f(r).m."""
    if f.target is not M.ring:
        raise RingMismatchError("hom target must be the module's ring")
    action = M.action[np.asarray(f.map)]
    return FiniteModule(f.source, M.add, action, M.zero, M.labels,
                        backend=("restrict",) + M.backend, verify=False)


@dataclass(frozen=True)
class Submodule:
    module: FiniteModule
    mask: int
    generators: tuple

    @property
    def elements(self):
        return indices_of(self.mask)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, x):
        return bool(self.mask >> x & 1)


def submodule_generated(M, gens):
    """Smallest submodule containing ``gens`` (the zero submodule for no gens)."""
    gens = tuple(M.index(g) for g in gens)
    cyc = M.cyclic_masks()
    mask = 1 << M.zero
    for g in gens:
        mask = _lattice.sum_mask(M.add, mask, cyc[g], M.order)
    return Submodule(M, mask, gens)


def all_submodules(M):
    """Every submodule, in canonical order (size, then element list)."""
    if "submodules" not in M._cache:
        first = _lattice.least_generators(M.cyclic_masks())
        lattice = _lattice.close_under_sums(first, M.add, M.order, 1 << M.zero)
        subs = [Submodule(M, m, g) for m, g in lattice.items()]
        subs.sort(key=lambda s: _lattice.canonical_key(s.mask))
        M._cache["submodules"] = subs
    return M._cache["submodules"]


def scale_mask(M, s, mask):
    """Mask of ``s F`` for a subset mask F."""
    return mask_of(M.action[s][indices_of(mask)], M.order)


@timed
def is_S_cyclic(F, S):
    """Search for ``s in S`` and ``e in F`` with ``sF <= Ae <= F``.

    ``S`` is a multiplicative set of the module's base ring (the scalars act
    from the ring side).  Search order is s ascending, then e ascending.
    """
    M = F.module
    if S.ring is not M.ring:
        raise RingMismatchError("multiplicative set and module live over different rings")
    cyc = M.cyclic_masks()
    elems = F.elements
    for s in S.elements:
        sF = scale_mask(M, s, F.mask)
        for e in elems:
            if is_subset(sF, cyc[e]) and is_subset(cyc[e], F.mask):
                return WitnessReport(True, {"s": s, "e": e}, flags=S.flags)
    return WitnessReport(False, exhaustion=len(S) * len(elems), flags=S.flags)


# -- ring homomorphisms -----------------------------------------------------


class RingHom:
    """A unital ring homomorphism given by an index array over the source."""

    def __init__(self, source, target, mapping, verify=True, name=None):
        self.source = source
        self.target = target
        self.map = np.asarray(mapping, dtype=np.int64)
        self.map.setflags(write=False)
        self.name = name
        if verify:
            axiom, witness = verify_hom_axioms(self)
            if axiom:
                raise AxiomError(axiom, witness)

    def __call__(self, x):
        return int(self.map[x])

    def __repr__(self):
        return f"<RingHom {self.name or ''} {self.source.describe()} -> {self.target.describe()}>"

    def image_mask(self):
        return mask_of(self.map, self.target.order)

    def is_injective(self):
        return len(set(self.map.tolist())) == self.source.order

    def is_surjective(self):
        return len(set(self.map.tolist())) == self.target.order


def verify_hom_axioms(f):
    A, B, fm = f.source, f.target, f.map
    if fm.shape != (A.order,):
        return "length", ()
    if ((fm < 0) | (fm >= B.order)).any():
        return "range", ()
    if fm[A.zero] != B.zero:
        return "zero", (A.zero,)
    if fm[A.one] != B.one:
        return "unital", (A.one,)
    bad = fm[A.add] != B.add[fm[:, None], fm[None, :]]
    if bad.any():
        return "additive", tuple(int(v) for v in np.argwhere(bad)[0])
    bad = fm[A.mul] != B.mul[fm[:, None], fm[None, :]]
    if bad.any():
        return "multiplicative", tuple(int(v) for v in np.argwhere(bad)[0])
    return None, ()


def make_hom(A, B, mapping):
    """Verified homomorphism; ``mapping[i]`` is the image index (or label) of element i."""
    mapping = list(mapping)
    if len(mapping) != A.order:
        raise AxiomError("length", (), f"map has {len(mapping)} entries, source has {A.order}")
    idx = [B.index(y) for y in mapping]
    return RingHom(A, B, idx)


def identity_hom(A):
    return RingHom(A, A, np.arange(A.order), verify=False, name="id")


def image_is_subring(f):
    """Exhaustive check that ``f(A)`` is closed under +, *, and contains 0 and 1."""
    B = f.target
    img = set(f.map.tolist())
    if B.zero not in img or B.one not in img:
        return False
    pts = sorted(img)
    sums = B.add[np.ix_(pts, pts)].ravel().tolist()
    prods = B.mul[np.ix_(pts, pts)].ravel().tolist()
    return img.issuperset(sums) and img.issuperset(prods)
