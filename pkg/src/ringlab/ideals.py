"""Ideals of a FiniteRing: generation, the full lattice, arithmetic, principality,
and extension/contraction along homomorphisms."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _lattice
from ._bits import indices_of, is_subset, mask_of, popcount
from .errors import RingMismatchError
from .mulsets import WitnessReport, timed
from .ring import check_order


@dataclass(frozen=True, eq=False)
class Ideal:
    """An ideal stored as a bitmask over element indices plus a generator list."""

    ring: object
    mask: int
    generators: tuple

    @property
    def ring_id(self):
        return self.ring.ring_id

    @property
    def elements(self):
        return indices_of(self.mask)

    def __len__(self):
        return popcount(self.mask)

    def __contains__(self, x):
        return bool(self.mask >> x & 1)

    def __eq__(self, other):
        return isinstance(other, Ideal) and other.ring is self.ring and other.mask == self.mask

    def __hash__(self):
        return hash((self.ring.ring_id, self.mask))

    def __le__(self, other):
        return is_subset(self.mask, other.mask)

    def __lt__(self, other):
        return self.mask != other.mask and is_subset(self.mask, other.mask)

    def __repr__(self):
        labs = [self.ring.labels[g] for g in self.generators]
        return f"Ideal<{', '.join(map(repr, labs))}> (order {len(self)})"

    def is_zero(self):
        return self.mask == 1 << self.ring.zero

    def is_whole(self):
        return popcount(self.mask) == self.ring.order

    def is_proper(self):
        return not self.is_whole()

    def sort_key(self):
        return _lattice.canonical_key(self.mask)


def principal_masks(R):
    """Mask of ``Ra`` for every element ``a``."""
    if "principal" not in R._cache:
        R._cache["principal"] = _lattice.cyclic_masks(R.mul, R.order)
    return R._cache["principal"]


def _closure(R, gens):
    cyc = principal_masks(R)
    mask = 1 << R.zero
    for g in gens:
        mask = _lattice.sum_mask(R.add, mask, cyc[g], R.order)
    return mask


def ideal_generated_by(R, gens):
    """Closure of ``gens`` under addition and ambient multiplication."""
    gens = tuple(R.index(g) for g in gens)
    return Ideal(R, _closure(R, gens), gens)


def ideal_from_mask(R, mask):
    """Ideal with a given element mask (assumed closed); generators are recomputed."""
    lat = _ideal_lattice(R)
    if mask in lat["gens"]:
        return Ideal(R, mask, lat["gens"][mask])
    return Ideal(R, mask, _greedy_generators(R, mask, indices_of(mask)))


def _greedy_generators(R, mask, candidates):
    gens = list(candidates)
    i = 0
    while i < len(gens):
        trial = gens[:i] + gens[i + 1:]
        if _closure(R, trial) == mask:
            gens = trial
        else:
            i += 1
    return tuple(gens)


def _ideal_lattice(R):
    """Cached lattice data: principal/two-generated maps and every ideal's generators."""
    if "lattice" in R._cache:
        return R._cache["lattice"]
    R.require_usable()
    check_order(R.order)
    zero_mask = 1 << R.zero
    first = _lattice.least_generators(principal_masks(R))
    two = _lattice.two_generated(first, R.add, R.order, zero_mask)
    closure = _lattice.close_under_sums(first, R.add, R.order, zero_mask)
    gens = {}
    for mask, path in closure.items():
        if mask in two:
            gens[mask] = two[mask]
        else:
            gens[mask] = _greedy_generators(R, mask, path)
    ideals = [Ideal(R, m, g) for m, g in gens.items()]
    ideals.sort(key=Ideal.sort_key)
    lat = {"principal_first": first, "two": two, "gens": gens, "ideals": ideals}
    R._cache["lattice"] = lat
    return lat


def all_ideals(R):
    """The complete ideal lattice in canonical order (size, then elements).

    Seeds with every principal ideal and closes under binary sums; every
    ideal of a finite ring is a finite sum of principal ideals, so the
    fixpoint is the whole lattice.  Generator lists are exact for ideals
    needing at most two generators and greedy beyond that.
    """
    return list(_ideal_lattice(R)["ideals"])


def two_generated_ideals(R):
    """Ideals generated by at most two elements, canonical order."""
    lat = _ideal_lattice(R)
    out = [Ideal(R, m, lat["gens"][m]) for m in lat["two"]]
    out.sort(key=Ideal.sort_key)
    return out


def _same_ring(I, J):
    if I.ring is not J.ring:
        raise RingMismatchError("ideals live in different rings")


def combine(I, J, kind):
    """Sum, product or intersection of two ideals of the same ring."""
    _same_ring(I, J)
    R = I.ring
    if kind == "sum":
        mask = _lattice.sum_mask(R.add, I.mask, J.mask, R.order)
        return Ideal(R, mask, tuple(dict.fromkeys(I.generators + J.generators)))
    if kind == "product":
        prods = [int(R.mul[a, b]) for a in I.generators for b in J.generators]
        return ideal_generated_by(R, prods)
    if kind == "intersection":
        return ideal_from_mask(R, I.mask & J.mask)
    raise ValueError(f"unknown combination {kind!r}")


def scale(I, s):
    """Mask of ``sI``."""
    R = I.ring
    return mask_of(R.mul[s][I.elements], R.order)


@timed
def is_principal(I):
    """Find ``a`` with ``Ra = I``; candidates are the elements of I, ascending."""
    cyc = principal_masks(I.ring)
    elems = I.elements
    for a in elems:
        if cyc[a] == I.mask:
            return WitnessReport(True, {"a": a})
    return WitnessReport(False, exhaustion=len(elems))


def is_prime_ideal(I):
    """Proper, and ``xy in I`` forces ``x in I`` or ``y in I`` (exhaustive)."""
    R = I.ring
    if I.is_whole():
        return False
    out = [x for x in range(R.order) if not I.mask >> x & 1]
    prods = R.mul[np.ix_(out, out)]
    flags = np.array([bool(I.mask >> int(v) & 1) for v in range(R.order)])
    return not flags[prods].any()


def is_maximal_ideal(I):
    if I.is_whole():
        return False
    return all(J.mask == I.mask or J.is_whole() for J in all_ideals(I.ring) if I <= J)


def extend(I, f):
    """``I^e``: the ideal of the target generated by the images of I's generators."""
    if I.ring is not f.source:
        raise RingMismatchError("ideal is not in the hom's source")
    return ideal_generated_by(f.target, [f(g) for g in I.generators])


def contract(J, f):
    """``J^c = {a : f(a) in J}`` by exhaustive preimage scan."""
    if J.ring is not f.target:
        raise RingMismatchError("ideal is not in the hom's target")
    pre = [a for a in range(f.source.order) if J.mask >> int(f.map[a]) & 1]
    return ideal_from_mask(f.source, mask_of(pre, f.source.order))

