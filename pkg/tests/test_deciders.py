import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from oracles import s_principal_brute

from ringlab import (
    all_ideals,
    ideal_generated_by,
    is_bezout,
    is_P_bezout,
    is_S_bezout,
    is_S_finite,
    is_S_pir,
    is_S_principal,
    make_mult_set,
    make_truncated,
    make_zmod,
    product,
)
from ringlab.deciders import prime_complement, replay_S_principal
from ringlab.errors import NotPrimeError, RingMismatchError
from ringlab.harness.registry import sbezout_product_instance
from ringlab.ideals import is_prime_ideal


def _small_ring(draw):
    kind = draw(st.sampled_from(["zmod", "prod", "trunc"]))
    if kind == "zmod":
        return make_zmod(draw(st.integers(2, 36)))
    if kind == "trunc":
        return make_truncated(*draw(st.sampled_from([(2, 2), (2, 3), (3, 2)])))
    return product(make_zmod(draw(st.integers(2, 6))), make_truncated(2, draw(st.integers(2, 3))))


@st.composite
def ring_ideal_set(draw):
    R = _small_ring(draw)
    ideals = all_ideals(R)
    I = ideals[draw(st.integers(0, len(ideals) - 1))]
    gens = draw(st.lists(st.integers(0, R.order - 1), max_size=2))
    return R, I, make_mult_set(R, gens)


@given(ring_ideal_set())
@settings(max_examples=150, deadline=None)
def test_S_principal_matches_brute_force(data):
    R, I, S = data
    rep = is_S_principal(I, S)
    assert bool(rep) == s_principal_brute(R, I.elements, S.elements)
    if rep:
        assert replay_S_principal(I, S, rep.witness)
    else:
        assert rep.exhaustion == len(S) * len(I)


@given(ring_ideal_set(), st.integers(0, 35))
@settings(max_examples=80, deadline=None)
def test_enlarging_S_preserves_S_principality(data, extra):
    R, I, S = data
    bigger = make_mult_set(R, list(S.generators) + [extra % R.order])
    if is_S_principal(I, S):
        assert is_S_principal(I, bigger)


@given(ring_ideal_set())
@settings(max_examples=80, deadline=None)
def test_units_only_S_is_plain_principality(data):
    R, I, _ = data
    units = make_mult_set(R, sorted(R.units)[:2])
    assert bool(is_S_principal(I, units)) == s_principal_brute(R, I.elements, [R.one])


def test_sbezout_product_values():
    R, S, T = sbezout_product_instance()
    assert R.order == 32 and len(all_ideals(R)) == 18
    sb = is_S_bezout(R, S)
    assert sb and len(sb.witness) == 18
    b = is_bezout(R)
    assert not b
    ce = b.counterexample
    # 0 x (0 x E): first coordinate 0, base part 0, module part everything
    assert {R.labels[x] for x in ce.elements} == {(0, (0, e)) for e in T.module.labels}


def test_S_bezout_modes_agree_on_sbezout_product():
    R, S, _ = sbezout_product_instance()
    assert bool(is_S_bezout(R, S, "all_ideals")) == bool(is_S_bezout(R, S, "two_generated"))
    assert "mode:two_generated" in is_S_bezout(R, S, "two_generated").flags
    with pytest.raises(ValueError):
        is_S_bezout(R, S, "three_generated")


def test_bezout_for_principal_rings():
    for n in (2, 12, 30, 64):
        assert is_bezout(make_zmod(n))


def test_F2_trivext_is_not_S_bezout_for_units():
    R, _, T = sbezout_product_instance()
    assert not is_S_bezout(T, make_mult_set(T, []))


def test_S_pir_equals_S_bezout_on_finite_rings():
    R, S, _ = sbezout_product_instance()
    assert bool(is_S_pir(R, S)) == bool(is_S_bezout(R, S))


def test_S_finite_bounds():
    R, S, T = sbezout_product_instance()
    E = next(I for I in all_ideals(T) if len(I) == 4 and not is_S_principal(I, make_mult_set(T, [])))
    units = make_mult_set(T, [])
    assert not is_S_finite(E, units, 1)
    rep = is_S_finite(E, units, 2)
    assert rep and len(rep.witness["generators"]) == 2
    with pytest.raises(ValueError):
        is_S_finite(E, units, -1)


def test_zero_in_S_makes_everything_S_principal_and_flags_it():
    R = make_truncated(2, 2)
    S = make_mult_set(R, [R.index((0, 1))])
    rep = is_S_bezout(R, S)
    assert rep and "degenerate-S:contains-zero" in rep.flags


def test_P_bezout_and_prime_complement():
    R = make_zmod(12)
    for P in all_ideals(R):
        if is_prime_ideal(P):
            S = prime_complement(P)
            assert set(S.elements) == set(range(12)) - set(P.elements)
            assert is_P_bezout(R, P)
    with pytest.raises(NotPrimeError):
        prime_complement(ideal_generated_by(R, [4]))


def test_ring_mismatch():
    A, B = make_zmod(4), make_zmod(4)
    with pytest.raises(RingMismatchError):
        is_S_principal(all_ideals(A)[1], make_mult_set(B, []))


@pytest.mark.parametrize("n", [8, 12, 18])
def test_S_bezout_exhaustive_over_all_generators(n):
    # every mult set of Z/n generated by one element; zmod is a PIR so always S-Bezout
    R = make_zmod(n)
    for g in range(n):
        assert is_S_bezout(R, make_mult_set(R, [g]))


def test_product_S_bezout_iff_factors():
    R1 = make_truncated(2, 2)
    R2, _, T = sbezout_product_instance()
    P = product(R1, T)
    for g1, g2 in itertools.product(range(R1.order), range(0, T.order, 3)):
        S1, S2 = make_mult_set(R1, [g1]), make_mult_set(T, [g2])
        S = P.product_mult_set(S1, S2)
        assert bool(is_S_bezout(P, S)) == (bool(is_S_bezout(R1, S1)) and bool(is_S_bezout(T, S2)))
