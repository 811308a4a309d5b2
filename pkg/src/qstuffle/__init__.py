"""Exact arithmetic for the q-stuffle Hopf algebra.

Words over the infinite alphabet {y_s : s >= 1} (with y_1 largest), sparse
noncommutative polynomials over Q[q], the q-stuffle product and its dual
coproduct, Lyndon-word combinatorics, the primitive projector, and the
effective construction of dual graded bases with verification of the
Schützenberger factorization -- everything computed exactly.
"""

from ._version import __version__
from .coeff import QPoly
from .words import (weight, letter_less, word_less, words_of_weight,
                    word_to_str, word_from_str)
from .ncpoly import NCPoly, Tensor2, tensor_outer, word_poly
from .lyndon import (is_lyndon, lyndon_of_weight, cfl_factorization,
                     standard_factorization, derivation_tree, converse_tree)
from .ops import (stuffle, shuffle, stuffle_poly, shuffle_poly,
                  stuffle_coproduct, deconcat_coproduct, counit,
                  is_primitive, is_grouplike, exp_proper, log_one_plus)
from .eulerian import (primitive_projector, primitive_projector_adjoint,
                       diagonal_series, log_diagonal, reconstruct)
from .bases import (pbw_element, dual_pbw_oracle, dual_pbw_element,
                    lyndon_stuffle_element, xi_basis, pi_basis, chi_basis,
                    GradedBasis, verify_duality, verify_factorization,
                    verify_methods, verify_primitivity)

__all__ = [
    "__version__", "QPoly", "NCPoly", "Tensor2", "tensor_outer", "word_poly",
    "weight", "letter_less", "word_less", "words_of_weight", "word_to_str",
    "word_from_str", "is_lyndon", "lyndon_of_weight", "cfl_factorization",
    "standard_factorization", "derivation_tree", "converse_tree", "stuffle",
    "shuffle", "stuffle_poly", "shuffle_poly", "stuffle_coproduct",
    "deconcat_coproduct", "counit", "is_primitive", "is_grouplike",
    "exp_proper", "log_one_plus", "primitive_projector",
    "primitive_projector_adjoint", "diagonal_series", "log_diagonal",
    "reconstruct", "pbw_element", "dual_pbw_oracle", "dual_pbw_element",
    "lyndon_stuffle_element", "xi_basis", "pi_basis", "chi_basis",
    "GradedBasis", "verify_duality", "verify_factorization", "verify_methods",
    "verify_primitivity",
]
