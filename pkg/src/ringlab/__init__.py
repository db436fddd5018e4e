"""Exact computation with finite commutative rings: ideal lattices,
S-principal and S-Bezout deciders, ring constructions, and a property
harness that checks the S-Bezout transfer results on random instances."""

from .constructions import (
    amalgamation,
    duplication,
    image_mult_set,
    is_homogeneous,
    localize,
    product,
    quotient_ring,
    trivial_extension,
)
from .deciders import (
    is_bezout,
    is_P_bezout,
    is_S_bezout,
    is_S_finite,
    is_S_pir,
    is_S_principal,
)
from .errors import AxiomError, RingLabError
from .ideals import Ideal, all_ideals, combine, contract, extend, ideal_generated_by, is_principal
from .modhom import is_S_cyclic, make_free_module, make_hom, make_module, submodule_generated
from .mulsets import MultiplicativeSet, WitnessReport, make_mult_set
from .nonnil import (
    is_chained,
    is_divided_prime,
    is_nonnil_chained,
    is_nonnil_S_bezout,
    is_phi_ring,
    nilradical,
    phi_image,
    primes,
    quotient_by_nil_check,
)
from .ring import (
    FiniteRing,
    make_gf,
    make_poly_quotient,
    make_table_ring,
    make_truncated,
    make_zmod,
    verify_ring_axioms,
)
from .zext import ZExtRing, zx_first_projection, zx_ideal, zx_is_S_principal, zx_membership

__version__ = "0.1.0"
