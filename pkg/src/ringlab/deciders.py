"""Deciders for S-principal ideals and the Bezout family of ring properties.

All searches run in ascending index order so that witnesses and
counterexamples are deterministic.
"""

from __future__ import annotations

from ._bits import is_subset
from . import _lattice
from .errors import NotPrimeError, RingMismatchError
from .ideals import (
    all_ideals,
    is_prime_ideal,
    is_principal,
    principal_masks,
    scale,
    two_generated_ideals,
)
from .mulsets import WitnessReport, mult_set_from_elements, timed


def _check_ring(I, S):
    if I.ring is not S.ring:
        raise RingMismatchError("ideal and multiplicative set live in different rings")


def _principal_subideals(I):
    """Distinct principal ideals ``Ra`` with ``a in I``, keyed by least generator."""
    cyc = principal_masks(I.ring)
    out = {}
    for a in I.elements:
        out.setdefault(cyc[a], a)
    return sorted(out.items(), key=lambda kv: kv[1])


@timed
def is_S_principal(I, S):
    """Find ``s in S`` and ``a in I`` with ``sI <= Ra <= I``.

    ``Ra <= I`` forces ``a in I``, so only elements of I are candidates.
    """
    _check_ring(I, S)
    subs = _principal_subideals(I)
    for s in S.elements:
        sI = scale(I, s)
        for m, a in subs:
            if is_subset(sI, m):
                return WitnessReport(True, {"s": s, "a": a}, flags=S.flags)
    return WitnessReport(False, exhaustion=len(S) * len(I), flags=S.flags)


def replay_S_principal(I, S, witness):
    """Re-check a witness ``{"s", "a"}`` against ``sI <= Ra <= I``."""
    s, a = witness["s"], witness["a"]
    Ra = principal_masks(I.ring)[a]
    return s in S and is_subset(scale(I, s), Ra) and is_subset(Ra, I.mask)


def _bounded_subideals(I, k):
    """Ideals inside I generated by at most ``k`` elements of I, canonical order."""
    R = I.ring
    subs = _principal_subideals(I)
    level = {1 << R.zero: ()}
    seen = dict(level)
    for _ in range(k):
        nxt = {}
        for m, gens in level.items():
            for p, a in subs:
                if is_subset(p, m):
                    continue
                total = _lattice.sum_mask(R.add, m, p, R.order)
                if total not in seen:
                    seen[total] = gens + (a,)
                    nxt[total] = gens + (a,)
        if not nxt:
            break
        level = nxt
    return sorted(seen.items(), key=lambda kv: _lattice.canonical_key(kv[0]))


@timed
def is_S_finite(I, S, k):
    """Find ``s in S`` and J generated by at most k elements of I with ``sI <= J <= I``."""
    _check_ring(I, S)
    if k < 0:
        raise ValueError("generator bound must be >= 0")
    candidates = _bounded_subideals(I, k)
    for s in S.elements:
        sI = scale(I, s)
        for m, gens in candidates:
            if is_subset(sI, m):
                return WitnessReport(True, {"s": s, "generators": list(gens)}, flags=S.flags)
    return WitnessReport(False, exhaustion=len(S) * len(candidates), flags=S.flags)


def _ideal_json(I):
    return {"elements": I.elements, "generators": list(I.generators)}


@timed
def is_bezout(R):
    """Every (finitely generated) ideal principal; FALSE names the least offender."""
    witnesses = []
    for I in all_ideals(R):
        rep = is_principal(I)
        if not rep:
            return WitnessReport(False, counterexample=I, exhaustion=rep.exhaustion)
        witnesses.append({"ideal": _ideal_json(I), "a": rep.witness["a"]})
    return WitnessReport(True, witnesses)


def _S_bezout_over(ideals, S, extra_flags=()):
    witnesses = []
    for I in ideals:
        rep = is_S_principal(I, S)
        if not rep:
            return WitnessReport(False, counterexample=I, exhaustion=rep.exhaustion,
                                 flags=S.flags + list(extra_flags))
        witnesses.append({"ideal": _ideal_json(I), **rep.witness})
    return WitnessReport(True, witnesses, flags=S.flags + list(extra_flags))


@timed
def is_S_bezout(R, S, mode="all_ideals"):
    """Every finitely generated ideal S-principal.

    ``mode="two_generated"`` only inspects ideals with at most two
    generators; on any ring the two modes agree.
    """
    if S.ring is not R:
        raise RingMismatchError("multiplicative set is not over this ring")
    if mode == "all_ideals":
        ideals = all_ideals(R)
    elif mode == "two_generated":
        ideals = two_generated_ideals(R)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return _S_bezout_over(ideals, S, [f"mode:{mode}"])


@timed
def is_S_pir(R, S):
    """Every ideal S-principal (same as S-Bezout on a finite ring)."""
    if S.ring is not R:
        raise RingMismatchError("multiplicative set is not over this ring")
    return _S_bezout_over(all_ideals(R), S)


def prime_complement(P):
    """``R - P`` as a multiplicative set; P must be prime."""
    if not is_prime_ideal(P):
        raise NotPrimeError(f"{P!r} is not a prime ideal")
    R = P.ring
    return mult_set_from_elements(R, [x for x in range(R.order) if not P.mask >> x & 1])


@timed
def is_P_bezout(R, P):
    """R is (R - P)-Bezout for the prime ideal P."""
    if P.ring is not R:
        raise RingMismatchError("prime ideal is not in this ring")
    return _S_bezout_over(all_ideals(R), prime_complement(P))

