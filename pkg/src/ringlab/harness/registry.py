"""Executable statements of the S-Bezout results, one entry per property.

Each property draws its own instance from a seeded stream, decides whether
the instance meets the property's hypotheses (a "hit"), and on hits
evaluates the claimed statement with the exhaustive deciders.  Misses are
counted, never failed.  Converse probes (ids starting with ``C``) test
directions that are not claimed; their violations are expected and kept
apart from the theorem checks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .._bits import mask_of
from ..constructions import (
    AmalgamationRing,
    amalgamation,
    annihilator,
    diagonal_hom,
    image_mult_set,
    is_homogeneous,
    localize,
    localize_at_prime,
    product,
    quotient_ring,
    trivial_extension,
)
from ..deciders import (
    is_P_bezout,
    is_S_bezout,
    is_S_finite,
    is_S_principal,
    is_bezout,
    prime_complement,
    replay_S_principal,
)
from ..ideals import all_ideals, contract, extend, ideal_from_mask, is_principal
from ..modhom import RingHom, all_submodules, is_S_cyclic
from ..mulsets import make_mult_set
from ..nonnil import (
    is_nonnil_S_bezout,
    is_nonnil_chained,
    is_phi_ring,
    maximal_ideals,
    phi_image,
    primes,
    quotient_by_nil_check,
)
from ..ring import make_gf, make_truncated, make_zmod
from ..zext import ZExtMultSet, ZExtRing, zx_check_witness, zx_ideal, zx_is_S_principal
from . import generate as gen


@dataclass
class Outcome:
    """Result of one property evaluation on one drawn instance."""

    hit: bool
    instance: dict = field(default_factory=dict)
    parts: list = field(default_factory=list)
    violation: dict | None = None
    drawn: bool = True


@dataclass(frozen=True)
class Property:
    pid: str
    statement: str
    evaluate: Callable
    conditional: bool = True
    probe: bool = False
    target: int = 100


REGISTRY: dict[str, Property] = {}


def register(pid, statement, conditional=True, probe=False, target=100):
    def deco(fn):
        REGISTRY[pid] = Property(pid, statement, fn, conditional, probe, target)
        return fn
    return deco


def _sb(R, S, mode="all_ideals"):
    return bool(is_S_bezout(R, S, mode))


def _labels(R, mask_or_elems):
    elems = mask_or_elems if isinstance(mask_or_elems, (list, tuple)) else ideal_from_mask(R, mask_or_elems).elements
    return [R.labels[x] for x in elems]


def _fail(desc, parts, **detail):
    return Outcome(True, desc, parts, detail)


def _check(desc, parts, claims):
    """``claims``: (part name, bool) pairs; the first false one is the violation."""
    for name, ok in claims:
        if not ok:
            return _fail(desc, parts, part=name)
    return Outcome(True, desc, parts)


def _draw(rng, profile):
    inst = gen.random_instance(rng.getrandbits(64), profile)
    return inst


# -- P1-P7: the ring itself ------------------------------------------------------


@register("P1", "S-Bezout over all ideals agrees with S-Bezout over ideals with at most two generators.",
          conditional=False)
def p1(rng, profile):
    inst = _draw(rng, profile)
    R, S = inst.ring, inst.mult_set
    full, two = _sb(R, S), _sb(R, S, "two_generated")
    return _check(inst.describe(), ["all-vs-two"], [("all-vs-two", full == two)])


@register("P2", "R is S-Bezout exactly when every S-finite ideal is S-principal.", conditional=False)
def p2(rng, profile):
    inst = _draw(rng, profile)
    R, S = inst.ring, inst.mult_set
    sfinite_ok = True
    for I in all_ideals(R):
        for k in (1, 2, len(I.generators)):
            if is_S_finite(I, S, k) and not is_S_principal(I, S):
                sfinite_ok = False
    return _check(inst.describe(), ["equivalence"], [("equivalence", _sb(R, S) == sfinite_ok)])


@register("P3", "If R is S-Bezout then the localization at S is Bezout.")
def p3(rng, profile):
    inst = _draw(rng, profile)
    R, S = inst.ring, inst.mult_set
    desc = inst.describe()
    if not _sb(R, S):
        return Outcome(False, desc)
    L, _ = localize(R, S)
    if L.degenerate:
        return Outcome(False, desc, ["degenerate-localization"])
    return _check(desc, ["forward"], [("forward", bool(is_bezout(L)))])


def _loc_bezout(R, S):
    L, _ = localize(R, S)
    return True if L.degenerate else bool(is_bezout(L))


@register("P4", "On a finite ring, R is S-Bezout exactly when the localization at S is Bezout.",
          conditional=False)
def p4(rng, profile):
    inst = _draw(rng, profile)
    R, S = inst.ring, inst.mult_set
    parts = ["equivalence"] + (["degenerate-localization"] if S.contains_zero else [])
    return _check(inst.describe(), parts, [("equivalence", _sb(R, S) == _loc_bezout(R, S))])


@register("P5", "For S inside the units, R is S-Bezout exactly when R is Bezout (and when S^-1 R is Bezout).")
def p5(rng, profile):
    inst = _draw(rng, profile)
    R = inst.ring
    S = gen.random_mult_set(rng, R, unit_bias=0.8)
    desc = {**inst.describe(), "S": [R.labels[x] for x in S.elements]}
    if not S.all_units:
        return Outcome(False, desc)
    sb = _sb(R, S)
    return _check(desc, ["bezout", "localization"],
                  [("bezout", sb == bool(is_bezout(R))), ("localization", sb == _loc_bezout(R, S))])


@register("P6", "A finite ring whose two-generated ideals are principal has every ideal principal.")
def p6(rng, profile):
    inst = _draw(rng, profile)
    R = inst.ring
    one = make_mult_set(R, [])
    if not _sb(R, one, "two_generated"):
        return Outcome(False, inst.describe())
    return _check(inst.describe(), ["pir"],
                  [("pir", all(is_principal(I) for I in all_ideals(R)))])


@register("P7", "A finite ring is Bezout iff it is P-Bezout for every prime P iff M-Bezout for every maximal M.",
          conditional=False)
def p7(rng, profile):
    inst = _draw(rng, profile)
    R = inst.ring
    b = bool(is_bezout(R))
    pb = all(is_P_bezout(R, P) for P in primes(R))
    mb = all(is_P_bezout(R, M) for M in maximal_ideals(R))
    return _check(inst.describe(), ["prime", "maximal"], [("prime", b == pb), ("maximal", b == mb)])


# -- P8-P11: quotients, homomorphisms, products, subrings --------------------------


def _annihilating(S, I):
    R = I.ring
    return [s for s in S.elements if all(R.mul[s, x] == R.zero for x in I.elements)]


def _quotient_data(rng, profile):
    inst = _draw(rng, profile)
    R, S = inst.ring, inst.mult_set
    I = gen.random_ideal(rng, R)
    Q, proj = quotient_ring(R, I)
    desc = {**inst.describe(), "I": _labels(R, I.elements)}
    return R, S, I, Q, image_mult_set(proj, S), desc


@register("P8", "S-Bezout passes to R/I with S+I; conversely when some s0 in S kills I.")
def p8(rng, profile):
    try:
        R, S, I, Q, SI, desc = _quotient_data(rng, profile)
    except gen._Retry:
        return Outcome(False, drawn=False)
    sb, qb = _sb(R, S), _sb(Q, SI)
    killers = _annihilating(S, I)
    parts, claims = [], []
    if sb:
        parts.append("forward")
        claims.append(("forward", qb))
    if killers and qb:
        parts.append("converse")
        claims.append(("converse", sb))
    if not parts:
        return Outcome(False, desc)
    return _check(desc, parts, claims)


@register("C8", "Probe: R/I (S+I)-Bezout forces R S-Bezout without an s0 killing I (not claimed).",
          probe=True)
def c8(rng, profile):
    try:
        R, S, I, Q, SI, desc = _quotient_data(rng, profile)
    except gen._Retry:
        return Outcome(False, drawn=False)
    if _annihilating(S, I) or not _sb(Q, SI):
        return Outcome(False, desc)
    return _check(desc, ["converse-unconditioned"], [("converse-unconditioned", _sb(R, S))])


def _random_hom(rng, profile):
    """A hom out of a random ring: quotient/product/amalgamation projection or localization."""
    inst = _draw(rng, profile)
    A, S = inst.ring, inst.mult_set
    kind = rng.choice(("quotient", "localize", "proj", "amalg"))
    if kind == "quotient":
        _, f = quotient_ring(A, gen.random_ideal(rng, A))
    elif kind == "localize":
        L, f = localize(A, gen.random_mult_set(rng, A))
        if L.degenerate:
            raise gen._Retry
    elif kind == "proj" and hasattr(A, "factors"):
        f = A.projection(rng.randrange(2))
    elif isinstance(A, AmalgamationRing):
        f = A.projection
    else:
        _, f = quotient_ring(A, gen.random_ideal(rng, A))
    return inst, A, S, f, kind


@register("P9", "If A is S-Bezout and f: A -> B has I^ce = I for all ideals of B, then B is f(S)-Bezout.")
def p9(rng, profile):
    try:
        inst, A, S, f, kind = _random_hom(rng, profile)
    except gen._Retry:
        return Outcome(False, drawn=False)
    B = f.target
    desc = {**inst.describe(), "hom": kind, "target": B.describe()}
    if not all(extend(contract(J, f), f) == J for J in all_ideals(B)):
        return Outcome(False, desc)
    if not _sb(A, S):
        return Outcome(False, desc)
    return _check(desc, ["forward"], [("forward", _sb(B, image_mult_set(f, S)))])


@register("P10", "R1 x R2 is (S1 x S2)-Bezout exactly when each Ri is Si-Bezout.", conditional=False)
def p10(rng, profile):
    budget = int((profile or gen.DEFAULT_PROFILE).get("max_order", 32))
    for _ in range(50):
        try:
            R1 = gen.build_shape(rng, rng.choice(gen.SHAPES), max(2, budget // 2), 0, [], [])
            R2 = gen.base_ring(rng, budget // R1.order)
            break
        except gen._Retry:
            continue
    else:
        return Outcome(False, drawn=False)
    S1, S2 = gen.random_mult_set(rng, R1), gen.random_mult_set(rng, R2)
    P = product(R1, R2)
    S = P.product_mult_set(S1, S2)
    desc = {"ring": P.describe(), "order": P.order, "S1": [R1.labels[x] for x in S1.elements],
            "S2": [R2.labels[x] for x in S2.elements]}
    both = _sb(R1, S1) and _sb(R2, S2)
    return _check(desc, ["equivalence"], [("equivalence", _sb(P, S) == both)])


def _embedding(rng, profile):
    """An injective hom A -> B: diagonal, trivial-extension inclusion,
    amalgamation section a -> (a, f(a)), or a prime field into F_p[t]/(g)."""
    budget = int((profile or gen.DEFAULT_PROFILE).get("max_order", 32))
    kind = rng.choice(("diag", "trivext", "amalg", "field"))
    if kind == "field":
        p, k = rng.choice([(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2), (2, 5)])
        A = make_zmod(p)
        B = make_gf(p, k) if rng.random() < 0.5 else make_truncated(p, k)
        return A, B, RingHom(A, B, list(range(p)), name="incl"), kind
    A = gen.base_ring(rng, budget // 2)
    if kind == "diag" and A.order ** 2 <= budget:
        B = product(A, A)
        return A, B, diagonal_hom(A, B), kind
    if kind == "amalg":
        J = gen.random_ideal(rng, A, proper=False, max_size=budget // A.order)
        from ..constructions import duplication
        B = duplication(A, J)
        return A, B, RingHom(A, B, [B.index_of(a, a) for a in range(A.order)], name="section"), kind
    E, _ = gen.random_module(rng, A, budget // A.order)
    B = trivial_extension(A, E)
    return A, B, B.inclusion, "trivext"


def _extension_data(rng, profile):
    A, B, f, kind = _embedding(rng, profile)
    S = gen.random_mult_set(rng, A)
    SB = image_mult_set(f, S)
    contracted = all(contract(extend(I, f), f) == I for I in all_ideals(A))
    desc = {"A": A.describe(), "B": B.describe(), "embedding": kind,
            "S": [A.labels[x] for x in S.elements]}
    return A, B, S, SB, contracted, desc


@register("P11", "For A inside B with IB meet A = I for every ideal I of A, B S-Bezout implies A S-Bezout.")
def p11(rng, profile):
    try:
        A, B, S, SB, contracted, desc = _extension_data(rng, profile)
    except gen._Retry:
        return Outcome(False, drawn=False)
    if not contracted or not _sb(B, SB):
        return Outcome(False, desc)
    return _check(desc, ["descent"], [("descent", _sb(A, S))])


@register("C11", "Probe: A S-Bezout forces the extension B S-Bezout (not claimed).", probe=True)
def c11(rng, profile):
    try:
        A, B, S, SB, contracted, desc = _extension_data(rng, profile)
    except gen._Retry:
        return Outcome(False, drawn=False)
    if not contracted or not _sb(A, S):
        return Outcome(False, desc)
    return _check(desc, ["ascent"], [("ascent", _sb(B, SB))])


# -- P12-P14: trivial extensions and amalgamations --------------------------------


def _trivext_data(rng, profile, local=False):
    budget = int((profile or gen.DEFAULT_PROFILE).get("max_order", 32))
    if local:
        A = gen.local_base_ring(rng, budget // 2)
        M = gen.maximal_ideal_of_local(A)
        E, _ = gen.random_module(rng, A, budget // A.order, killed_by=M)
    else:
        A = gen._ingredient(rng, budget // 2, 1, [], [])
        E, _ = gen.random_module(rng, A, budget // A.order)
    S0 = gen.random_mult_set(rng, A, unit_bias=0.1 if local else 0.25)
    T = trivial_extension(A, E)
    S = T.lift_mult_set(S0, "module")
    desc = {"A": A.describe(), "E": E.order, "ring": T.describe(), "order": T.order,
            "S0": [A.labels[x] for x in S0.elements]}
    return A, E, S0, T, S, desc


def _all_homogeneous(T):
    return all(is_homogeneous(T, L)[0] for L in all_ideals(T))


@register("P12", "For R = A x E and S = S0 x E: R S-Bezout gives A S0-Bezout and every submodule S0-cyclic, "
          "conversely when all ideals are homogeneous; F is S0-cyclic iff 0 x F is S-principal.",
          conditional=False)
def p12(rng, profile):
    try:
        A, E, S0, T, S, desc = _trivext_data(rng, profile)
    except gen._Retry:
        return Outcome(False, drawn=False)
    subs = all_submodules(E)
    cyclic = [bool(is_S_cyclic(F, S0)) for F in subs]
    lemma = all(c == bool(is_S_principal(T.module_ideal(F), S)) for c, F in zip(cyclic, subs))
    rb, ab = _sb(T, S), _sb(A, S0)
    parts, claims = ["lemma"], [("lemma", lemma)]
    if rb:
        parts.append("forward")
        claims.append(("forward", ab and all(cyclic)))
    if ab and all(cyclic) and _all_homogeneous(T):
        parts.append("converse")
        claims.append(("converse", rb))
    return _check(desc, parts, claims)


@register("C12", "Probe: the trivial-extension converse without the homogeneity hypothesis (not claimed).",
          probe=True)
def c12(rng, profile):
    try:
        A, E, S0, T, S, desc = _trivext_data(rng, profile)
    except gen._Retry:
        return Outcome(False, drawn=False)
    subs = all_submodules(E)
    if not (_sb(A, S0) and all(is_S_cyclic(F, S0) for F in subs)):
        return Outcome(False, desc)
    return _check(desc, ["converse-unconditioned"], [("converse-unconditioned", _sb(T, S))])


@register("P13", "For local (A, M) with ME = 0 and S0 meeting M: A x E is (S0 x E)-Bezout iff A is S0-Bezout; "
          "the forward direction holds for every S0.")
def p13(rng, profile):
    try:
        A, E, S0, T, S, desc = _trivext_data(rng, profile, local=True)
    except gen._Retry:
        return Outcome(False, drawn=False)
    rb, ab = _sb(T, S), _sb(A, S0)
    parts, claims = [], []
    if rb:
        parts.append("part1")
        claims.append(("part1", ab))
    if not S0.all_units:
        parts.append("part3")
        if S0.contains_zero:
            parts.append("part3:degenerate")
        claims.append(("part3", rb == ab))
    if "part3" not in parts:
        return Outcome(False, desc, parts)
    return _check(desc, parts, claims)


def _amalg_data(rng, profile):
    budget = int((profile or gen.DEFAULT_PROFILE).get("max_order", 32))
    A = gen.base_ring(rng, budget // 2) if rng.random() < 0.6 else gen._ingredient(rng, budget // 2, 1, [], [])
    f = gen._amalg_hom(rng, A, [])
    B = f.target
    S0 = gen.random_mult_set(rng, A)
    fS = sorted({f(s) for s in S0.elements})
    if rng.random() < 0.5:
        J = annihilator(B, fS)
        if len(J) * A.order > budget:
            raise gen._Retry
    else:
        J = gen.random_ideal(rng, B, proper=False, max_size=budget // A.order)
    R = amalgamation(A, B, f, J)
    desc = {"A": A.describe(), "B": B.describe(), "J": _labels(B, J.elements), "ring": R.describe(),
            "order": R.order, "S0": [A.labels[x] for x in S0.elements]}
    meets = any(J.mask >> y & 1 for y in fS)
    return A, B, f, J, S0, R, meets, fS, desc


@register("P14", "Amalgamation A ⋈^f J: the S'-Bezout property descends to A; it is equivalent when f(S0) "
          "meets J, or when f(S0) misses J = ann(f(S0)) and every proper ideal is homogeneous.")
def p14(rng, profile):
    try:
        A, B, f, J, S0, R, meets, fS, desc = _amalg_data(rng, profile)
    except gen._Retry:
        return Outcome(False, drawn=False)
    ab = _sb(A, S0)
    lifts = {"zero": R.lift_mult_set(S0, "zero"), "ideal": R.lift_mult_set(S0, "ideal")}
    rb = {k: _sb(R, S) for k, S in lifts.items()}
    parts, claims = [], []
    for k in lifts:
        if rb[k]:
            parts.append(f"part1:{k}")
            claims.append((f"part1:{k}", ab))
    if meets:
        parts.append("part2")
        claims.append(("part2", rb["ideal"] == ab))
    elif J.mask == annihilator(B, fS).mask and all(
            is_homogeneous(R, L)[0] for L in all_ideals(R) if L.is_proper()):
        parts.append("part3")
        claims.append(("part3", rb["zero"] == ab and rb["ideal"] == ab))
    if "part2" not in parts and "part3" not in parts:
        return Outcome(False, desc, parts)
    return _check(desc, parts, claims)


@register("C14", "Probe: the amalgamation equivalence with the smaller lift S0 ⋈^f 0 when f(S0) meets J.",
          probe=True)
def c14(rng, profile):
    try:
        A, B, f, J, S0, R, meets, fS, desc = _amalg_data(rng, profile)
    except gen._Retry:
        return Outcome(False, drawn=False)
    if not meets:
        return Outcome(False, desc)
    ok = _sb(R, R.lift_mult_set(S0, "zero")) == _sb(A, S0)
    return _check(desc, ["part2:zero-lift"], [("part2:zero-lift", ok)])


# -- P15-P17: phi-rings --------------------------------------------------------------


def _phi_instance(rng, profile):
    """Mostly local rings (every finite local ring is a phi-ring), sometimes a random instance."""
    budget = int((profile or gen.DEFAULT_PROFILE).get("max_order", 32))
    roll = rng.random()
    if roll < 0.35:
        A = gen.local_base_ring(rng, budget)
    elif roll < 0.6:
        A0 = gen.local_base_ring(rng, budget // 2)
        M = gen.maximal_ideal_of_local(A0)
        E, _ = gen.random_module(rng, A0, budget // A0.order, killed_by=M if rng.random() < 0.5 else None)
        A = trivial_extension(A0, E)
    elif roll < 0.75:
        A0 = gen.local_base_ring(rng, budget // 2)
        from ..constructions import duplication
        A = duplication(A0, gen.random_ideal(rng, A0, max_size=budget // A0.order))
    else:
        return _draw(rng, profile)
    return gen.Instance("", A, gen.random_mult_set(rng, A), "local")


@register("P15", "A phi-ring is nonnil S-Bezout iff R/Nil(R) is an S'-Bezout domain.")
def p15(rng, profile):
    try:
        inst = _phi_instance(rng, profile)
    except gen._Retry:
        return Outcome(False, drawn=False)
    R, S = inst.ring, inst.mult_set
    desc = inst.describe()
    if not is_phi_ring(R):
        return Outcome(False, desc)
    return _check(desc, ["equivalence"],
                  [("equivalence", bool(is_nonnil_S_bezout(R, S)) == quotient_by_nil_check(R, S))])


@register("P16", "A phi-ring is nonnil S-Bezout iff phi(R) is nonnil phi(S)-Bezout.")
def p16(rng, profile):
    try:
        inst = _phi_instance(rng, profile)
    except gen._Retry:
        return Outcome(False, drawn=False)
    R, S = inst.ring, inst.mult_set
    desc = inst.describe()
    if not is_phi_ring(R):
        return Outcome(False, desc)
    K, phi = phi_image(R)
    lhs = bool(is_nonnil_S_bezout(R, S))
    rhs = bool(is_nonnil_S_bezout(K, image_mult_set(phi, S)))
    return _check(desc, ["equivalence"], [("equivalence", lhs == rhs)])


@register("P17", "For a phi-ring: nonnil P-Bezout for all primes P iff every R_P is nonnil chained iff every "
          "R_M is nonnil chained.")
def p17(rng, profile):
    try:
        inst = _phi_instance(rng, profile)
    except gen._Retry:
        return Outcome(False, drawn=False)
    R = inst.ring
    desc = inst.describe()
    if not is_phi_ring(R):
        return Outcome(False, desc)
    c1 = all(is_nonnil_S_bezout(R, prime_complement(P)) for P in primes(R))
    c2 = all(is_nonnil_chained(localize_at_prime(R, P)[0]) for P in primes(R))
    c3 = all(is_nonnil_chained(localize_at_prime(R, M)[0]) for M in maximal_ideals(R))
    return _check(desc, ["1-2", "2-3"], [("1-2", c1 == c2), ("2-3", c2 == c3)])


# -- P18-P19: the Z x M family and the S-Bezout product ---------------------------------


@register("P18", "In Z x (Z/b)^k with S = {(b^n, 0)}, every finitely generated J has (b,0)J inside a principal "
          "ideal inside J; replayed witnesses check out.", target=100)
def p18(rng, profile):
    b = rng.choice((2, 2, 3, 4))
    k = rng.randint(1, 4 if b == 2 else 2)
    R = ZExtRing((b,) * k)
    ngen = rng.randint(1, 3)
    gens = []
    for _ in range(ngen):
        a = rng.choice((0, 0, rng.randint(-12, 12)))
        gens.append((a, [rng.randrange(b) for _ in range(k)]))
    J = zx_ideal(R, gens)
    S = ZExtMultSet(R, b, max_power=2)
    rep = zx_is_S_principal(J, S, ring_bound=max(abs(J.d), 1))
    desc = {"ring": R.describe(), "J": [[g.a, list(g.m)] for g in J.generators], "base": b}
    parts = [f"base-{b}", "module-only" if J.d == 0 else "ring-part"]
    if not rep:
        return _fail(desc, parts, part="not-found", status=rep.status)
    s, a = R.index(rep.witness["s"]), R.index(rep.witness["a"])
    replay = zx_check_witness(J, s, a)
    expected = zx_check_witness(J, R.element(b), a)
    return _check(desc, parts, [("replay", replay), ("base-witness", expected)])


def sbezout_product_instance():
    """Z/4 x (F2 x F2^2) with S the closure of (1, 0)."""
    from ..modhom import make_free_module
    F2 = make_zmod(2)
    T = trivial_extension(F2, make_free_module(F2, 2))
    R = product(make_zmod(4), T)
    S = make_mult_set(R, [R.index_of(1, T.zero)])
    return R, S, T


@register("P19", "The finite analogue of the non-Bezout S-Bezout product example behaves as claimed.",
          conditional=False, target=1)
def p19(rng, profile):
    R, S, T = sbezout_product_instance()
    sb = is_S_bezout(R, S)
    b = is_bezout(R)
    desc = {"ring": R.describe(), "order": R.order, "S": [R.labels[x] for x in S.elements]}
    expected_ce = R.product_ideal(all_ideals(R.factors[0])[0],
                                  T.module_ideal(all_submodules(T.module)[-1]))
    witnesses_ok = all(replay_S_principal(ideal_from_mask(R, mask_of(w["ideal"]["elements"], R.order)), S, w)
                       for w in sb.witness or [])
    return _check(desc, ["sbezout", "bezout", "counterexample", "witnesses"], [
        ("sbezout", bool(sb)),
        ("bezout", not b),
        ("counterexample", b.counterexample == expected_ce),
        ("witnesses", witnesses_ok),
    ])


THEOREMS = [f"P{i}" for i in range(1, 20)]
PROBES = ["C8", "C11", "C12", "C14"]
