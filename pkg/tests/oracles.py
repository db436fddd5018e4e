"""Independent brute-force oracles, written without the library's lattice code."""

from __future__ import annotations

import itertools
from math import gcd


def units_mod(n):
    return {x for x in range(n) if gcd(x, n) == 1}


def divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def ideal_closure(R, gens):
    """Smallest subset containing 0 and gens, closed under + and multiplication by R."""
    out = {R.zero}
    frontier = set(gens)
    while frontier:
        out |= frontier
        new = set()
        for x in frontier:
            for r in range(R.order):
                new.add(int(R.mul[r, x]))
            for y in list(out):
                new.add(int(R.add[x, y]))
        frontier = new - out
    return frozenset(out)


def ideals_by_subset_closure(R):
    """Every ideal, as the set closure of every subset (tiny rings only)."""
    seen = set()
    for k in range(R.order + 1):
        for gens in itertools.combinations(range(R.order), k):
            seen.add(ideal_closure(R, gens))
    return seen


def is_ideal_subset(R, els):
    els = set(els)
    if R.zero not in els:
        return False
    return all(int(R.add[x, y]) in els for x in els for y in els) and \
        all(int(R.mul[r, x]) in els for r in range(R.order) for x in els)


def ideals_by_subsets(R):
    """Every ideal by filtering all subsets (order <= 12)."""
    out = set()
    n = R.order
    for mask in range(1 << n):
        els = [i for i in range(n) if mask >> i & 1]
        if is_ideal_subset(R, els):
            out.add(frozenset(els))
    return out


def s_principal_brute(R, I, S):
    """Some s in S and a in R with sI <= Ra <= I, scanning all of R."""
    I = set(I)
    for s in S:
        sI = {int(R.mul[s, x]) for x in I}
        for a in range(R.order):
            Ra = {int(R.mul[r, a]) for r in range(R.order)}
            if sI <= Ra <= I:
                return True
    return False


def zx_membership_bruteforce(J, x, box):
    """Search |c_i| <= box with every module multiplier."""
    R = J.ring
    x = R.index(x)
    mods = R.module_elements()
    k = len(J.generators)
    for cs in itertools.product(range(-box, box + 1), repeat=k):
        for fs in itertools.product(mods, repeat=k):
            total = R.zero
            for c, f, g in zip(cs, fs, J.generators):
                total = total + R.element(c, f) * g
            if total == x:
                return True
    return False
