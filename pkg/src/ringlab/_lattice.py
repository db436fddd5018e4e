"""Closure of cyclic subgroups under pairwise sums.

Ideals and submodules are both finite sums of cyclic pieces (``Ra`` or
``Ae``), so one worklist over bitmasks serves both lattices.
"""

import numpy as np

from ._bits import indices_of, is_subset, mask_of, popcount


def sum_mask(add, a, b, n):
    """Mask of ``{x + y : x in a, y in b}`` for subgroup masks ``a``, ``b``."""
    if is_subset(b, a):
        return a
    if is_subset(a, b):
        return b
    xs = indices_of(a)
    ys = indices_of(b)
    return mask_of(add[np.ix_(xs, ys)].ravel(), n)


def cyclic_masks(rows, n):
    """``rows[g]`` lists the multiples of generator ``g``; returns one mask per g."""
    return [mask_of(row, n) for row in rows]


def least_generators(cyclic):
    """Map each distinct cyclic mask to its least generator index."""
    out = {}
    for g, m in enumerate(cyclic):
        out.setdefault(m, g)
    return out


def close_under_sums(cyclic_first, add, n, zero_mask):
    """All sums of cyclic subgroups.

    ``cyclic_first`` maps each distinct cyclic mask to a generator.  Returns
    a dict mask -> generator tuple (the path along which it was reached).
    """
    seen = {zero_mask: ()}
    for m, g in cyclic_first.items():
        seen.setdefault(m, () if m == zero_mask else (g,))
    items = sorted(cyclic_first.items(), key=lambda kv: kv[1])
    frontier = list(seen)
    while frontier:
        new = []
        for m in frontier:
            for p, g in items:
                if is_subset(p, m):
                    continue
                s = sum_mask(add, m, p, n)
                if s not in seen:
                    seen[s] = seen[m] + (g,)
                    new.append(s)
        frontier = new
    return seen


def two_generated(cyclic_first, add, n, zero_mask):
    """Masks generated by at most two elements, each with its least generator pair."""
    out = {zero_mask: ()}
    items = sorted(cyclic_first.items(), key=lambda kv: kv[1])
    for m, g in items:
        if m not in out or len(out[m]) > 1:
            out[m] = () if m == zero_mask else (g,)
    for i, (m1, g1) in enumerate(items):
        for m2, g2 in items[i + 1:]:
            s = sum_mask(add, m1, m2, n)
            if s not in out:
                out[s] = (g1, g2)
    return out


def canonical_key(mask):
    return (popcount(mask), indices_of(mask))
