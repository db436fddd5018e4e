import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from oracles import units_mod

from ringlab import (
    make_gf,
    make_poly_quotient,
    make_table_ring,
    make_truncated,
    make_zmod,
    verify_ring_axioms,
)
from ringlab.errors import AxiomError, InvalidOrderError, OrderBoundError
from ringlab.nonnil import is_domain, nilpotents


@given(st.integers(2, 64))
@settings(max_examples=40, deadline=None)
def test_zmod_units_match_gcd(n):
    R = make_zmod(n)
    assert set(R.units) == units_mod(n)
    assert verify_ring_axioms(R).ok


@pytest.mark.parametrize("p,k", [(2, 1), (2, 2), (2, 3), (3, 2), (5, 2), (2, 4)])
def test_gf_is_field(p, k):
    F = make_gf(p, k)
    assert F.order == p ** k
    assert verify_ring_axioms(F).ok
    assert len(F.units) == F.order - 1


@pytest.mark.parametrize("p,k", [(2, 2), (2, 3), (3, 2), (3, 3)])
def test_truncated_nilpotents(p, k):
    R = make_truncated(p, k)
    assert verify_ring_axioms(R).ok
    # nilpotents of F_p[t]/(t^k) are the multiples of t: constant term zero
    assert {R.labels[i] for i in nilpotents(R)} == {lab for lab in R.labels if lab[0] == 0}
    assert len(R.units) == R.order - R.order // p


def test_poly_quotient_arithmetic():
    # F_2[t]/(t^2 + t + 1): t * t = t + 1
    R = make_poly_quotient(2, [1, 1, 1])
    t = R.index((0, 1))
    assert R.labels[R.mul[t, t]] == (1, 1)
    assert is_domain(R)
    # F_2[t]/(t^2 + 1) = F_2[t]/((t+1)^2) is not a domain
    S = make_poly_quotient(2, [1, 0, 1])
    assert not is_domain(S)


def test_poly_quotient_rejects_bad_input():
    with pytest.raises(InvalidOrderError):
        make_poly_quotient(4, [1, 1])
    with pytest.raises(InvalidOrderError):
        make_poly_quotient(3, [1, 2])


def test_table_ring_rejects_broken_distributivity():
    Z3 = make_zmod(3)
    mul = np.array(Z3.mul)
    mul[2, 2] = 0
    with pytest.raises(AxiomError) as exc:
        make_table_ring(Z3.add, mul, 0, 1)
    assert exc.value.axiom in {"associativity", "distributivity"}


def test_table_ring_accepts_valid_tables():
    Z6 = make_zmod(6)
    R = make_table_ring(Z6.add, Z6.mul, 0, 1)
    assert R.order == 6 and R.units == Z6.units


def test_zmod_rejects_small_and_huge():
    with pytest.raises(InvalidOrderError):
        make_zmod(1)
    with pytest.raises(OrderBoundError):
        make_zmod(10 ** 6)


def test_element_arithmetic():
    R = make_zmod(12)
    assert R.labels[(R(5) * R(7)).index] == 11
    assert R.labels[(R(5) + R(9)).index] == 2
    assert R(5).is_unit() and not R(4).is_unit()
