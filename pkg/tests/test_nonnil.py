import pytest

from ringlab import (
    all_ideals,
    is_chained,
    is_divided_prime,
    is_nonnil_chained,
    is_nonnil_S_bezout,
    is_phi_ring,
    make_free_module,
    make_gf,
    make_mult_set,
    make_truncated,
    make_zmod,
    nilradical,
    phi_image,
    product,
    quotient_by_nil_check,
    trivial_extension,
)
from ringlab.errors import NotPhiRingError
from ringlab.nonnil import is_domain, is_nonnil, maximal_ideals, nilpotents, primes, zero_divisors


def _nil_oracle(R):
    out = set()
    for x in range(R.order):
        p = x
        for _ in range(R.order):
            if p == R.zero:
                out.add(x)
                break
            p = int(R.mul[p, x])
    return out


@pytest.mark.parametrize("R", [make_zmod(n) for n in (12, 16, 18, 27, 36)]
                         + [make_truncated(3, 3), product(make_zmod(4), make_zmod(9))],
                         ids=lambda R: R.describe())
def test_nilpotents_match_power_oracle(R):
    assert set(nilpotents(R)) == _nil_oracle(R)


@pytest.mark.parametrize("n", range(2, 50))
def test_phi_rings_among_zmod_are_the_local_ones(n):
    local = len({p for p in range(2, n + 1) if n % p == 0 and all(p % d for d in range(2, p))}) == 1
    assert is_phi_ring(make_zmod(n)) == local


def test_domain_and_zero_divisors():
    assert is_domain(make_gf(2, 3))
    assert not is_domain(make_zmod(12))
    assert zero_divisors(make_zmod(6)) == [0, 2, 3, 4]


def test_divided_prime_in_truncated_ring():
    R = make_truncated(2, 3)
    N = nilradical(R)
    assert len(N) == 4 and is_divided_prime(R, N)
    assert len(primes(R)) == 1 and maximal_ideals(R) == [N]


def test_phi_image_of_local_ring_is_itself():
    R = make_zmod(8)
    K, to_k = phi_image(R)
    assert K.order == 8 and to_k.is_injective()
    with pytest.raises(NotPhiRingError):
        phi_image(make_zmod(6))


def test_nonnil_ideals_of_local_ring():
    F2 = make_zmod(2)
    T = trivial_extension(F2, make_free_module(F2, 2))
    nonnil = [I for I in all_ideals(T) if is_nonnil(I)]
    assert len(nonnil) == 1 and nonnil[0].is_whole()
    assert not is_chained(T)
    assert is_nonnil_chained(T)


def test_chained_zmod_prime_powers():
    assert is_chained(make_zmod(27))
    assert not is_chained(make_zmod(12))


@pytest.mark.parametrize("R", [make_zmod(8), make_zmod(9), make_truncated(2, 3), make_gf(2, 2)],
                         ids=lambda R: R.describe())
def test_nonnil_S_bezout_agrees_with_quotient_check(R):
    for g in range(R.order):
        S = make_mult_set(R, [g])
        rep = is_nonnil_S_bezout(R, S)
        assert bool(rep) == quotient_by_nil_check(R, S)
        assert rep.witness["nonnil_ideals"] == 1
