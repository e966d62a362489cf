"""
skeinfrob: exact Kauffman bracket skein algebras at odd roots of unity,
their character rings, trace pairings and Frobenius certificates.
"""
from .annulus import (
    AnnulusSkein, ann_basis, ann_expand, ann_expand_cleared, ann_invert, ann_left_matrix,
    ann_left_matrix_formula, ann_mul, ann_pairing_det, ann_pairing_det_closed_form,
    ann_pairing_matrix, ann_reduce, ann_thread, ann_trace, ann_trace_matrix, char_to_annulus,
)
from .charring import (
    CharElement, CharFraction, canonical_key, canonical_pair, char_is_zero, char_mul,
    laurent_embed,
)
from .chebyshev import (
    IntPolynomial, cheb_T, cheb_eval, from_cheb_basis, to_cheb_basis, verify_cheb_identities,
    x_power_relation,
)
from .cyclotomic import CycloScalar, a_power, cyclotomic_polynomial, quantum_loop, scalar
from .errors import (
    DomainError, IdentityVerificationError, InternalArithmeticError, LevelMismatchError,
    NotComputableError, ParseError, SingularMatrixError, SkeinError,
)
from .laurent import LaurentPoly
from .linalg import RingMatrix, identity_matrix, mat_det, mat_mul, mat_solve, mat_trace
from .pants import (
    FactoredElement, PantsSkein, pants_expand, pants_mul, pants_pairing_det,
    pants_pairing_det_direct, pants_pairing_matrix, pants_pairing_matrix_kronecker,
    pants_reduce, pants_thread, pants_trace, pants_trace_matrix, pure_tensor, tensor_char,
)
from .places import (
    Place, Verdict, annulus_place, annulus_roots_check, left_det_at_place, on_locus,
    specialize_char, specialize_matrix, specialized_frobenius_check, torus_place,
    torus_place_from_traces, trace_coordinates,
)
from .punctured import (
    PuncturedSkein, delta_poly_mul, delta_power_relation, epsilon_bound_predicate,
    eta_delta_convert, from_cheb_view, punctured_trace, quotient_to_torus, to_cheb_view,
    verify_delta_power_relation, weight,
)
from .skein import ReducedSkein, SkeinElement
from .textio import parse_place, parse_scalar, parse_skein
from .torus import (
    TorusSkein, centrality_check, certify_C_basis, char_to_torus, torus_B, torus_Bprime,
    torus_expand_cleared, torus_invert, torus_left_matrix, torus_mul, torus_pairing_det,
    torus_pairing_det_block_form, torus_pairing_det_closed_form, torus_pairing_matrix,
    torus_reduce_to_B, torus_reduce_to_Bprime, torus_reduce_to_C, torus_round_trip,
    torus_thread, torus_trace, torus_trace_matrix, verify_identities,
)

__version__ = "0.1.0"
