"""The trivial extension ``Z x M`` of the integers by a finite abelian group.

M is ``Z/q_1 x ... x Z/q_r`` with Z acting by multiplication; integers act
on M only through their residue modulo ``q = lcm(q_i)``, the exponent of M.
That reduction makes ideal membership decidable by a finite search.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import reduce
from math import gcd, lcm

from .mulsets import WitnessReport, timed


class ZExtRing:
    """``Z x M`` for ``M = prod Z/q_i``; ``moduli`` lists the ``q_i``."""

    def __init__(self, moduli):
        moduli = tuple(int(q) for q in moduli)
        if not moduli or any(q < 2 for q in moduli):
            raise ValueError("module factors must be Z/q with q >= 2")
        self.moduli = moduli
        self.exponent = reduce(lcm, moduli)
        self.backend = ("zext", moduli)

    def __repr__(self):
        return f"<ZExtRing Z x {' x '.join(f'Z/{q}' for q in self.moduli)}>"

    def describe(self):
        return "zext(" + ",".join(f"z{q}" for q in self.moduli) + ")"

    def module_elements(self):
        return list(itertools.product(*(range(q) for q in self.moduli)))

    def element(self, a, m=None):
        m = (0,) * len(self.moduli) if m is None else tuple(m)
        if len(m) != len(self.moduli):
            raise ValueError(f"module part must have {len(self.moduli)} coordinates")
        return ZExtElement(self, int(a), tuple(v % q for v, q in zip(m, self.moduli)))

    def index(self, x):
        """Accept ``(a, [m...])`` literals, ZExtElements or bare integers."""
        if isinstance(x, ZExtElement):
            return x
        if isinstance(x, int):
            return self.element(x)
        a, m = x
        return self.element(a, m)

    @property
    def zero(self):
        return self.element(0)

    @property
    def one(self):
        return self.element(1)


@dataclass(frozen=True)
class ZExtElement:
    ring: ZExtRing
    a: int
    m: tuple

    def _mod(self, vec):
        return tuple(v % q for v, q in zip(vec, self.ring.moduli))

    def __add__(self, other):
        return ZExtElement(self.ring, self.a + other.a,
                           self._mod(x + y for x, y in zip(self.m, other.m)))

    def __neg__(self):
        return ZExtElement(self.ring, -self.a, self._mod(-x for x in self.m))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        # (a, m)(b, n) = (ab, a n + b m)
        return ZExtElement(self.ring, self.a * other.a,
                           self._mod(self.a * y + other.a * x for x, y in zip(self.m, other.m)))

    def label(self):
        return (self.a, self.m)

    def __repr__(self):
        return f"({self.a}, {list(self.m)})"


@dataclass(frozen=True)
class ZExtIdeal:
    ring: ZExtRing
    generators: tuple

    @property
    def d(self):
        """gcd of the ring parts of the generators (0 for ideals inside 0 x M)."""
        return reduce(gcd, (g.a for g in self.generators), 0)

    def module_step(self):
        """Per coordinate j, ``gcd(d, q_j)``: the submodule ``sum a_i M`` is
        ``prod gcd(d, q_j) Z/q_j``."""
        d = self.d
        return tuple(gcd(d, q) for q in self.ring.moduli)


def zx_ideal(R, gens):
    return ZExtIdeal(R, tuple(R.index(g) for g in gens))


def zx_first_projection(J):
    """``d`` with ``{a : (a, e) in J} = dZ``."""
    return J.d


def _coefficient_residues(J, target_a):
    """Residues ``c mod q`` of integer vectors with ``sum c_i a_i = target_a``.

    For ``c = cbar + q u`` the equation reads ``sum cbar_i a_i + q sum u_i a_i
    = target_a``, and ``sum u_i a_i`` ranges over ``dZ``.  So ``cbar`` lifts
    exactly when ``q d`` divides ``target_a - sum cbar_i a_i`` (when d = 0 the
    difference itself must vanish).
    """
    q = J.ring.exponent
    d = J.d
    gens = J.generators
    for cbar in itertools.product(range(q), repeat=len(gens)):
        rest = target_a - sum(c * g.a for c, g in zip(cbar, gens))
        if (rest == 0) if d == 0 else (rest % (q * d) == 0):
            yield cbar


def zx_membership(J, x):
    """Exact decision of ``x in J``.

    ``J = {(sum c_i a_i, sum c_i e_i + n) : c in Z^k, n in sum a_i M}``.  The
    ring part fixes c up to the solution lattice; only ``c mod q`` matters
    for the module part, so the search runs over finitely many residues.
    """
    R = J.ring
    x = R.index(x)
    d = J.d
    if (x.a != 0) if d == 0 else (x.a % d != 0):
        return False
    step = J.module_step()
    for cbar in _coefficient_residues(J, x.a):
        diff = [x.m[j] - sum(c * g.m[j] for c, g in zip(cbar, J.generators))
                for j in range(len(R.moduli))]
        if all(v % s == 0 for v, s in zip(diff, step)):
            return True
    return False


@dataclass(frozen=True)
class ZExtMultSet:
    """``{(b^n, 0) : 0 <= n <= max_power}``; base 1 gives ``{1}``."""

    ring: ZExtRing
    base: int
    max_power: int = 4

    def elements(self):
        if self.base in (0, 1, -1):
            vals = sorted({self.base ** n for n in range(self.max_power + 1)}, key=abs)
        else:
            vals = [self.base ** n for n in range(self.max_power + 1)]
        return [self.ring.element(v) for v in vals]


def zx_candidates(J, ring_bound):
    """Elements of J with ``|ring part| <= ring_bound``, every module part.

    Ordered by ``(|a|, a < 0, m)``.  When ``d = 0`` the pool is all of J.
    """
    R = J.ring
    d = J.d
    parts = [0] if d == 0 else sorted(range(-ring_bound, ring_bound + 1), key=lambda a: (abs(a), a < 0))
    out = []
    for a in parts:
        if d and a % d:
            continue
        for m in R.module_elements():
            x = R.element(a, m)
            if zx_membership(J, x):
                out.append(x)
    return out


def zx_check_witness(J, s, a):
    """Replay ``sJ <= Ra <= J``: s times each generator lies in ``Ra``, and a in J."""
    Ra = ZExtIdeal(J.ring, (a,))
    return zx_membership(J, a) and all(zx_membership(Ra, s * g) for g in J.generators)


@timed
def zx_is_S_principal(J, S, ring_bound=8):
    """Bounded search for ``s in S`` and ``a in J`` with ``sJ <= Ra <= J``.

    A miss is NOT-FOUND; the report's ``exhaustive`` flag is set only when the
    candidate pool is provably all of J (ideals inside ``0 x M``).
    """
    pool = zx_candidates(J, ring_bound)
    svals = S.elements()
    for s in svals:
        for a in pool:
            if zx_check_witness(J, s, a):
                return WitnessReport(True, {"s": s.label(), "a": a.label()})
    exhaustive = J.d == 0
    flags = [f"bounds:powers<={S.max_power},|a|<={ring_bound}"]
    if exhaustive:
        flags.append("exhaustive-module-bound")
    return WitnessReport(False, exhaustion=len(svals) * len(pool), flags=flags,
                         exhaustive=False)
