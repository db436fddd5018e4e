import numpy as np
import pytest

from ringlab import (
    is_S_cyclic,
    make_free_module,
    make_hom,
    make_module,
    make_mult_set,
    make_zmod,
    product,
    submodule_generated,
)
from ringlab.errors import AxiomError
from ringlab.modhom import all_submodules, image_is_subring, restrict_scalars, verify_module_axioms


def test_free_module_axioms_and_labels():
    R = make_zmod(4)
    M = make_free_module(R, 2)
    assert M.order == 16
    assert verify_module_axioms(M) == (None, ())
    x = M.index((1, 3))
    assert M.labels[M.action[2, x]] == (2, 2)


def test_submodule_counts_of_F2_squared():
    # F_2^2 has 5 subspaces: 0, three lines, everything
    M = make_free_module(make_zmod(2), 2)
    assert sorted(len(F) for F in all_submodules(M)) == [1, 2, 2, 2, 4]


def test_submodules_of_Z4_as_module_over_itself():
    M = make_free_module(make_zmod(4), 1)
    assert sorted(len(F) for F in all_submodules(M)) == [1, 2, 4]


def test_make_module_rejects_bad_action():
    R = make_zmod(2)
    Z2 = make_zmod(2)
    action = np.array([[0, 0], [0, 0]])  # 1 does not act as identity
    with pytest.raises(AxiomError) as exc:
        make_module(R, Z2.add, action)
    assert exc.value.axiom == "unital action"


def test_restricted_scalars_is_a_module():
    Z4, Z2 = make_zmod(4), make_zmod(2)
    f = make_hom(Z4, Z2, [0, 1, 0, 1])
    M = restrict_scalars(make_free_module(Z2, 2), f)
    assert verify_module_axioms(M) == (None, ())
    assert M.ring is Z4


def test_hom_verification():
    Z6, Z3 = make_zmod(6), make_zmod(3)
    f = make_hom(Z6, Z3, [x % 3 for x in range(6)])
    assert f.is_surjective() and not f.is_injective()
    with pytest.raises(AxiomError):
        make_hom(Z6, Z3, [0, 2, 1, 0, 2, 1])  # not unital
    with pytest.raises(AxiomError):
        make_hom(make_zmod(4), Z3, [0, 1, 2, 0])  # not additive


def test_diagonal_image_is_subring():
    A = make_zmod(3)
    P = product(A, A)
    f = make_hom(A, P, [(a, a) for a in range(3)])
    assert image_is_subring(f)


def test_S_cyclic_units_vs_scaling():
    R = make_zmod(2)
    M = make_free_module(R, 2)
    F = submodule_generated(M, [(1, 0), (0, 1)])
    assert not is_S_cyclic(F, make_mult_set(R, []))
    # over Z/4, 2Z/4 x Z/4 needs two generators; closure{2} contains 0
    Z4 = make_zmod(4)
    N = make_free_module(Z4, 2)
    G = submodule_generated(N, [(2, 0), (0, 1)])
    assert not is_S_cyclic(G, make_mult_set(Z4, []))
    rep = is_S_cyclic(G, make_mult_set(Z4, [2]))
    assert rep and rep.witness["s"] == 0
    assert "degenerate-S:contains-zero" in rep.flags
