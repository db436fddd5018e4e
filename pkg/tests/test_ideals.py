import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from oracles import divisors, ideal_closure, ideals_by_subset_closure, ideals_by_subsets

from ringlab import (
    all_ideals,
    combine,
    contract,
    extend,
    ideal_generated_by,
    is_principal,
    make_gf,
    make_truncated,
    make_zmod,
    product,
    quotient_ring,
)
from ringlab.ideals import is_maximal_ideal, is_prime_ideal, two_generated_ideals
from ringlab.errors import RingMismatchError


@pytest.mark.parametrize("n", range(2, 65))
def test_zmod_ideal_count_is_divisor_count(n):
    assert len(all_ideals(make_zmod(n))) == len(divisors(n))


@pytest.mark.parametrize("ring", [
    make_zmod(12), make_truncated(2, 3), make_gf(2, 2),
    product(make_zmod(2), make_zmod(4)), product(make_zmod(3), make_zmod(3)),
], ids=lambda R: R.describe())
def test_lattice_matches_subset_enumeration(ring):
    got = {frozenset(I.elements) for I in all_ideals(ring)}
    assert got == ideals_by_subsets(ring)


def test_lattice_matches_closure_oracle_on_order_9():
    R = product(make_zmod(3), make_zmod(3))
    got = {frozenset(I.elements) for I in all_ideals(R)}
    assert got == ideals_by_subset_closure(R)


@pytest.mark.parametrize("m,n", [(4, 4), (4, 6), (6, 8), (9, 5)])
def test_product_ideals_are_products_of_ideals(m, n):
    R1, R2 = make_zmod(m), make_zmod(n)
    P = product(R1, R2)
    expected = {frozenset(P.index_of(a, b) for a in range(0, m, d1) for b in range(0, n, d2))
                for d1 in divisors(m) for d2 in divisors(n)}
    assert {frozenset(I.elements) for I in all_ideals(P)} == expected


@given(st.integers(2, 40), st.lists(st.integers(0, 39), max_size=3))
@settings(max_examples=60, deadline=None)
def test_generated_ideal_matches_closure(n, gens):
    R = make_zmod(n)
    gens = [g % n for g in gens]
    assert set(ideal_generated_by(R, gens).elements) == ideal_closure(R, gens)


def test_two_generated_covers_every_ideal_of_small_rings():
    # every ideal of these rings needs at most two generators
    for R in (make_zmod(36), product(make_zmod(4), make_zmod(6))):
        assert {I.mask for I in two_generated_ideals(R)} == {I.mask for I in all_ideals(R)}


def test_ideal_arithmetic_in_zmod():
    R = make_zmod(12)
    I, J = ideal_generated_by(R, [4]), ideal_generated_by(R, [6])
    assert set(combine(I, J, "sum").elements) == set(ideal_generated_by(R, [2]).elements)
    assert set(combine(I, J, "product").elements) == {0}
    assert set(combine(I, J, "intersection").elements) == {0}
    with pytest.raises(ValueError):
        combine(I, J, "quotient")


def test_principal_witness_generates():
    R = product(make_zmod(4), make_zmod(6))
    for I in all_ideals(R):
        rep = is_principal(I)
        assert rep  # Z/4 x Z/6 is a principal ideal ring
        assert ideal_generated_by(R, [rep.witness["a"]]) == I


def test_truncated_ring_is_principal():
    R = make_truncated(2, 3)
    assert all(is_principal(I) for I in all_ideals(R))


def test_prime_and_maximal_in_zmod():
    R = make_zmod(30)
    primes = [I for I in all_ideals(R) if is_prime_ideal(I)]
    assert sorted(len(I) for I in primes) == [6, 10, 15]
    assert all(is_maximal_ideal(I) == is_prime_ideal(I) for I in all_ideals(R))


def test_extend_contract_along_projection():
    R = make_zmod(12)
    Q, f = quotient_ring(R, ideal_generated_by(R, [4]))
    for I in all_ideals(R):
        Ie = extend(I, f)
        # surjective: I^e = f(I)
        assert set(Ie.elements) == {f(x) for x in I.elements}
        # I^ec = I + ker f
        assert set(contract(Ie, f).elements) == set(combine(I, ideal_generated_by(R, [4]), "sum").elements)
    for J in all_ideals(Q):
        assert extend(contract(J, f), f) == J


def test_mismatched_rings_rejected():
    A, B = make_zmod(4), make_zmod(4)
    with pytest.raises(RingMismatchError):
        combine(ideal_generated_by(A, [2]), ideal_generated_by(B, [2]), "sum")
