"""Seeded random instances: a ring assembled from small base rings by one or
two constructions, plus a multiplicative set from at most two generators.

Seeds are hashed through ``random.Random`` string seeding, so an instance
depends only on the seed and ``GENERATOR_VERSION``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from ..constructions import (
    amalgamation,
    diagonal_hom,
    duplication,
    localize,
    product,
    quotient_ring,
    trivial_extension,
)
from ..ideals import all_ideals, is_maximal_ideal
from ..modhom import make_free_module, restrict_scalars
from ..mulsets import make_mult_set
from ..ring import make_gf, make_truncated, make_zmod

GENERATOR_VERSION = 1

BASE_SHAPES = ("zmod", "gf", "trunc")
COMBINATORS = ("product", "quotient", "trivext", "amalg", "dup", "localize")
SHAPES = BASE_SHAPES + COMBINATORS

DEFAULT_PROFILE = {"max_order": 32, "constructors": list(SHAPES)}

_PRIME_POWERS = [(p, k) for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31) for k in range(1, 6)
                 if p ** k <= 64]


@dataclass
class Instance:
    seed: str
    ring: object
    mult_set: object
    shape: str
    modules: list = field(default_factory=list)
    homs: list = field(default_factory=list)

    def describe(self):
        R = self.ring
        return {
            "seed": self.seed,
            "shape": self.shape,
            "ring": R.describe(),
            "order": R.order,
            "S": [R.labels[x] for x in self.mult_set.elements],
        }


class _Retry(Exception):
    """The drawn ingredients do not fit; draw again from the same stream."""


def make_rng(seed):
    return random.Random(f"ringlab-v{GENERATOR_VERSION}:{seed}")


# -- ingredients ----------------------------------------------------------------


def base_ring(rng, budget, kinds=BASE_SHAPES):
    """A residue ring, finite field or truncated polynomial ring of order <= budget."""
    if budget < 2:
        raise _Retry
    kind = rng.choice(kinds)
    if kind == "zmod":
        return make_zmod(rng.randint(2, min(budget, 24)))
    if kind == "gf":
        opts = [(p, k) for p, k in _PRIME_POWERS if p ** k <= budget and p ** k <= 27]
        return make_gf(*rng.choice(opts))
    opts = [(p, k) for p, k in _PRIME_POWERS if k >= 2 and p ** k <= budget]
    if not opts:
        return make_zmod(rng.randint(2, min(budget, 24)))
    return make_truncated(*rng.choice(opts))


def local_base_ring(rng, budget):
    """A local base ring: Z/p^k, GF(p^k) or F_p[t]/(t^k)."""
    kind = rng.choice(BASE_SHAPES)
    opts = [(p, k) for p, k in _PRIME_POWERS if p ** k <= min(budget, 27)]
    if kind == "trunc":
        opts = [(p, k) for p, k in opts if k >= 2] or opts
    p, k = rng.choice(opts)
    if kind == "zmod":
        return make_zmod(p ** k)
    if kind == "gf":
        return make_gf(p, k)
    return make_truncated(p, max(k, 1)) if k >= 2 else make_zmod(p)


def random_ideal(rng, R, proper=True, max_size=None):
    cands = [I for I in all_ideals(R)
             if (not proper or I.is_proper()) and (max_size is None or len(I) <= max_size)]
    if not cands:
        raise _Retry
    return rng.choice(cands)


def random_mult_set(rng, R, unit_bias=0.25):
    """Closure of at most two random generators; sometimes units only."""
    k = rng.choice((0, 1, 1, 2))
    units = sorted(R.units)
    pool = units if rng.random() < unit_bias else list(range(R.order))
    return make_mult_set(R, [rng.choice(pool) for _ in range(k)])


def random_module(rng, A, budget, killed_by=None):
    """A finite A-module of order <= budget, with any homs used to build it.

    Either ``A^k`` or ``(A/I)^k`` with scalars restricted along ``A -> A/I``;
    ``killed_by`` forces the second form with ``I = killed_by``.
    """
    homs = []
    if killed_by is None and rng.random() < 0.4 and A.order <= budget:
        k = max(kk for kk in (1, 2, 3) if A.order ** kk <= budget)
        return make_free_module(A, rng.randint(1, k)), homs
    I = killed_by if killed_by is not None else random_ideal(rng, A)
    if I.is_zero():
        base, proj = A, None
    else:
        base, proj = quotient_ring(A, I)
        homs.append(proj)
    if base.order > budget:
        raise _Retry
    k = max(kk for kk in (1, 2, 3) if base.order ** kk <= budget)
    E = make_free_module(base, rng.randint(1, k))
    if proj is not None:
        E = restrict_scalars(E, proj)
    return E, homs


# -- shapes -------------------------------------------------------------------


def _ingredient(rng, budget, depth, homs, modules):
    """A base ring, or (one level down) a combinator over base rings."""
    if depth > 0 and rng.random() < 0.3 and budget >= 8:
        shape = rng.choice(("product", "quotient", "dup", "trivext"))
        return build_shape(rng, shape, budget, depth - 1, homs, modules)
    return base_ring(rng, budget)


def build_shape(rng, shape, budget, depth, homs, modules):
    if shape in BASE_SHAPES:
        return base_ring(rng, budget, kinds=(shape,))
    if shape == "product":
        R1 = _ingredient(rng, budget // 2, depth, homs, modules)
        R2 = _ingredient(rng, budget // R1.order, depth, homs, modules)
        P = product(R1, R2)
        homs += [P.projection(0), P.projection(1)]
        return P
    if shape == "quotient":
        R = _ingredient(rng, budget, depth, homs, modules)
        if R.order < 4:
            R = product(R, base_ring(rng, budget // R.order))
        Q, proj = quotient_ring(R, random_ideal(rng, R))
        homs.append(proj)
        return Q
    if shape == "trivext":
        A = _ingredient(rng, budget // 2, depth, homs, modules)
        E, mh = random_module(rng, A, budget // A.order)
        homs += mh
        modules.append(E)
        T = trivial_extension(A, E)
        homs += [T.projection, T.inclusion]
        return T
    if shape in ("amalg", "dup"):
        A = _ingredient(rng, budget // 2, depth, homs, modules)
        if shape == "dup":
            R = duplication(A, random_ideal(rng, A, max_size=budget // A.order))
        else:
            f = _amalg_hom(rng, A, homs)
            J = random_ideal(rng, f.target, proper=False, max_size=budget // A.order)
            R = amalgamation(A, f.target, f, J)
        homs.append(R.projection)
        return R
    if shape == "localize":
        R = _ingredient(rng, budget, max(depth, 1), homs, modules)
        L, h = localize(R, random_mult_set(rng, R))
        if L.degenerate:
            raise _Retry
        homs.append(h)
        return L
    raise ValueError(f"unknown shape {shape!r}")


def _amalg_hom(rng, A, homs):
    """``A -> A/I`` (a surjection) or the diagonal ``A -> A x A``."""
    if rng.random() < 0.5 and A.order <= 8:
        P = product(A, A)
        f = diagonal_hom(A, P)
    else:
        I = random_ideal(rng, A)
        if I.is_zero():
            from ..modhom import identity_hom
            f = identity_hom(A)
        else:
            _, f = quotient_ring(A, I)
    homs.append(f)
    return f


def random_instance(seed, profile=None):
    """Deterministic pseudo-random instance for ``seed`` under ``profile``."""
    profile = {**DEFAULT_PROFILE, **(profile or {})}
    rng = make_rng(seed)
    budget = int(profile["max_order"])
    shapes = list(profile["constructors"])
    for _ in range(100):
        shape = rng.choice(shapes)
        homs, modules = [], []
        try:
            R = build_shape(rng, shape, budget, 1, homs, modules)
        except _Retry:
            continue
        if R.order > budget:
            continue
        return Instance(str(seed), R, random_mult_set(rng, R), shape, modules, homs)
    raise RuntimeError(f"could not draw an instance for seed {seed!r}")


def maximal_ideal_of_local(A):
    maxes = [I for I in all_ideals(A) if is_maximal_ideal(I)]
    return maxes[0] if len(maxes) == 1 else None
