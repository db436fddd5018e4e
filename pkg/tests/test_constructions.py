import pytest
from oracles import divisors

from ringlab import (
    all_ideals,
    amalgamation,
    duplication,
    ideal_generated_by,
    image_mult_set,
    is_homogeneous,
    localize,
    make_free_module,
    make_hom,
    make_mult_set,
    make_truncated,
    make_zmod,
    product,
    quotient_ring,
    trivial_extension,
    verify_ring_axioms,
)
from ringlab.constructions import annihilator, diagonal_hom, localize_at_prime, stable_idempotent
from ringlab.errors import AxiomError, RingMismatchError
from ringlab.ideals import is_prime_ideal
from ringlab.modhom import all_submodules


def test_product_projections_and_split():
    R1, R2 = make_zmod(4), make_zmod(6)
    P = product(R1, R2)
    assert verify_ring_axioms(P).ok
    assert len(all_ideals(P)) == len(divisors(4)) * len(divisors(6))
    for I in all_ideals(P):
        I1, I2 = P.split_ideal(I)
        assert P.product_ideal(I1, I2) == I
    p0 = P.projection(0)
    assert p0(P.index_of(3, 5)) == 3


def test_localization_of_Z12_at_2():
    R = make_zmod(12)
    S = make_mult_set(R, [2])
    assert stable_idempotent(R, 2) == 4
    L, h = localize(R, S)
    assert L.order == 3 and verify_ring_axioms(L).ok
    assert all(h(s) in L.units for s in S.elements)
    # kernel: elements killed by a power of 2
    assert {r for r in range(12) if h(r) == L.zero} == {0, 3, 6, 9}


def test_localization_at_zero_is_degenerate():
    R = make_zmod(6)
    L, _ = localize(R, make_mult_set(R, [0]))
    assert L.degenerate and L.order == 1


@pytest.mark.parametrize("n", [12, 18, 30, 36])
def test_localization_at_primes_of_zmod(n):
    R = make_zmod(n)
    for P in all_ideals(R):
        if is_prime_ideal(P):
            p = n // len(P)
            L, _ = localize_at_prime(R, P)
            # Z/n localized at (p) is Z/p^v
            v = 0
            while n % p ** (v + 1) == 0:
                v += 1
            assert L.order == p ** v


def test_quotient_ring_orders_and_labels():
    R = make_zmod(12)
    Q, f = quotient_ring(R, ideal_generated_by(R, [4]))
    assert Q.order == 4 and verify_ring_axioms(Q).ok
    assert Q.index(7) == Q.index(3)
    with pytest.raises(AxiomError):
        quotient_ring(R, ideal_generated_by(R, [1]))


def test_trivial_extension_structure():
    F2 = make_zmod(2)
    E = make_free_module(F2, 2)
    T = trivial_extension(F2, E)
    assert T.order == 8 and verify_ring_axioms(T).ok
    # (0, e)^2 = 0
    for e in range(E.order):
        x = T.index_of(0, e)
        assert T.mul[x, x] == T.zero
    # ideals: the 5 submodules inside 0 x E, plus the whole ring
    assert len(all_ideals(T)) == 6
    for L in all_ideals(T):
        assert is_homogeneous(T, L)[0]


def test_trivext_lifts():
    Z4 = make_zmod(4)
    T = trivial_extension(Z4, make_free_module(Z4, 1))
    S0 = make_mult_set(Z4, [2])
    assert len(T.lift_mult_set(S0, "zero")) == len(S0)
    assert len(T.lift_mult_set(S0, "module")) == len(S0) * 4
    assert T.base_mult_set(T.lift_mult_set(S0, "module")).elements == S0.elements


def test_non_homogeneous_ideal_exists():
    # in Z/4 x Z/4 (module over itself), the ideal generated by (2, 1) is not homogeneous
    Z4 = make_zmod(4)
    T = trivial_extension(Z4, make_free_module(Z4, 1))
    L = ideal_generated_by(T, [T.index_of(2, 1)])
    ok, I, F = is_homogeneous(T, L)
    assert not ok


def test_duplication_order_and_diagonal():
    A = make_zmod(8)
    I = ideal_generated_by(A, [4])
    D = duplication(A, I)
    assert D.order == 8 * 2 and verify_ring_axioms(D).ok
    assert {(b - a) % 8 for a, b in (D.pair(i) for i in range(D.order))} == {0, 4}


def test_amalgamation_along_diagonal_and_quotient():
    A = make_zmod(3)
    P = product(A, A)
    f = diagonal_hom(A, P)
    for J in all_ideals(P):
        R = amalgamation(A, P, f, J)
        assert R.order == 3 * len(J) and verify_ring_axioms(R).ok
        assert R.projection.is_surjective()


def test_amalgamation_quotient_hom():
    A = make_zmod(12)
    B, f = quotient_ring(A, ideal_generated_by(A, [3]))
    for J in all_ideals(B):
        R = amalgamation(A, B, f, J)
        assert R.order == 12 * len(J) and verify_ring_axioms(R).ok
        assert R.projection.is_surjective()
        for I in all_ideals(A):
            assert is_homogeneous(R, R.lifted_ideal(I))[0]


def test_amalgamation_mismatch():
    A = make_zmod(4)
    with pytest.raises(RingMismatchError):
        amalgamation(A, A, make_hom(make_zmod(4), A, range(4)), all_ideals(A)[0])


def test_image_mult_set_and_annihilator():
    R = make_zmod(12)
    Q, f = quotient_ring(R, ideal_generated_by(R, [4]))
    T = image_mult_set(f, make_mult_set(R, [2]))
    assert {Q.labels[x] for x in T.elements} == {0, 1, 2}
    assert set(annihilator(R, [4]).elements) == {0, 3, 6, 9}


def test_truncated_trivext_submodules():
    A = make_truncated(2, 2)
    E = make_free_module(A, 1)
    T = trivial_extension(A, E)
    assert verify_ring_axioms(T).ok
    assert len(all_submodules(E)) == 3
