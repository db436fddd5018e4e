"""Nilradical, divided primes, phi-rings and the nonnil deciders.

"Nonnil chained" (every two nonnil ideals comparable) is an adopted
definition; reports carry the ``assumed-definition:nonnil-chained`` flag.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._bits import is_subset, mask_of
from .constructions import image_mult_set, localize, quotient_ring
from .deciders import is_S_bezout, is_S_principal, prime_complement
from .errors import NotPhiRingError
from .ideals import Ideal, all_ideals, ideal_from_mask, is_maximal_ideal, is_prime_ideal, principal_masks
from .mulsets import WitnessReport, mult_set_from_elements, timed

NONNIL_CHAINED_FLAG = "assumed-definition:nonnil-chained"


def nilpotents(R):
    """Indices ``x`` with ``x^k = 0`` for some ``k <= |R|``."""
    p = np.arange(R.order)
    k = 1
    while k < R.order:
        p = R.mul[p, p]
        k *= 2
    return np.flatnonzero(p == R.zero).tolist()


def nilradical(R):
    """The ideal of nilpotent elements."""
    if "nil" not in R._cache:
        R._cache["nil"] = ideal_from_mask(R, mask_of(nilpotents(R), R.order))
    return R._cache["nil"]


def zero_divisors(R):
    """Elements ``x`` with ``xy = 0`` for some nonzero ``y`` (0 included)."""
    hits = (R.mul == R.zero)
    hits[:, R.zero] = False
    return sorted(set(np.flatnonzero(hits.any(axis=1)).tolist()) | {R.zero})


def is_divided_prime(R, P):
    """P is prime and ``P <= Rx`` for every ``x`` outside P."""
    if not is_prime_ideal(P):
        return False
    cyc = principal_masks(R)
    return all(is_subset(P.mask, cyc[x]) for x in range(R.order) if not P.mask >> x & 1)


def is_phi_ring(R):
    return is_divided_prime(R, nilradical(R))


def is_domain(R):
    """No zero divisors among nonzero elements (exhaustive)."""
    return zero_divisors(R) == [R.zero]


def is_nonnil(I):
    return not is_subset(I.mask, nilradical(I.ring).mask)


@dataclass
class PhiRingAnalysis:
    nilradical: Ideal
    is_phi: bool
    zero_divisors: list
    phi_image: tuple | None = None


def analyze(R):
    phi = is_phi_ring(R)
    return PhiRingAnalysis(nilradical(R), phi, zero_divisors(R), phi_image(R) if phi else None)


def _require_phi(R):
    if not is_phi_ring(R):
        raise NotPhiRingError("Nil(R) is not a divided prime ideal")


def total_quotient_ring(R):
    """``T(R)``: localization at the non-zero-divisors."""
    zd = set(zero_divisors(R))
    return localize(R, mult_set_from_elements(R, [x for x in range(R.order) if x not in zd]))


def phi_image(R):
    """``phi(R)`` inside ``K = R_Nil(R)`` together with ``phi: R -> phi(R)``.

    Also checks ``Nil(phi(R)) = Z(phi(R))``.
    """
    _require_phi(R)
    T, _ = total_quotient_ring(R)
    if len(nilpotents(T)) != len(nilradical(R)):
        raise AssertionError("Nil(T(R)) != Nil(R)")
    K, to_k = localize(R, prime_complement(nilradical(R)))
    image = sorted(set(to_k.map.tolist()))
    if len(image) != K.order:
        raise AssertionError("phi(R) is a proper subring of K; not expected for finite rings")
    if nilpotents(K) != zero_divisors(K):
        raise AssertionError("Nil(phi(R)) != Z(phi(R))")
    return K, to_k


@timed
def is_nonnil_S_bezout(R, S):
    """For nonnil ideals ``I <= P`` with P S-principal, I is S-principal.

    FALSE carries the least offending pair ``(I, P)``.
    """
    _require_phi(R)
    nonnil = [I for I in all_ideals(R) if is_nonnil(I)]
    good = {I.mask for I in nonnil if is_S_principal(I, S)}
    checked = 0
    for P in nonnil:
        if P.mask not in good:
            continue
        for I in nonnil:
            if I <= P:
                checked += 1
                if I.mask not in good:
                    return WitnessReport(False, counterexample=(I, P), exhaustion=checked,
                                         flags=S.flags)
    return WitnessReport(True, {"pairs_checked": checked, "nonnil_ideals": len(nonnil)},
                         flags=S.flags)


def nil_quotient(R, S):
    """``(R/Nil(R), S' = S + Nil(R))``."""
    Q, proj = quotient_ring(R, nilradical(R))
    return Q, image_mult_set(proj, S)


def quotient_by_nil_check(R, S):
    """R/Nil(R) is a domain and an S'-Bezout ring."""
    _require_phi(R)
    Q, S_bar = nil_quotient(R, S)
    return is_domain(Q) and bool(is_S_bezout(Q, S_bar))


def is_chained(R):
    """The ideal lattice is totally ordered by inclusion."""
    ideals = all_ideals(R)
    return all(I <= J or J <= I for I in ideals for J in ideals)


def is_nonnil_chained(R):
    """Every two nonnil ideals are comparable."""
    ideals = [I for I in all_ideals(R) if is_nonnil(I)]
    return all(I <= J or J <= I for I in ideals for J in ideals)


def primes(R):
    return [I for I in all_ideals(R) if is_prime_ideal(I)]


def maximal_ideals(R):
    return [I for I in all_ideals(R) if is_maximal_ideal(I)]

