"""Exact computation of vanishing multiplicities on the Boolean hypercube.

Core objects: sparse multivariate polynomials over the rationals or
GF(p), Taylor-shift multiplicities, canonical k-reduced forms, a
brute-force minimum-degree oracle, power-sum symmetric function
machinery, extremal witness constructions, and the integer identities
tying the witness's leading coefficient to Catalan numbers.
"""

from ._kernel import BACKEND as kernel_backend
from .fields import CharacteristicError, Field, is_prime
from .poly import AffineForm, SparsePolynomial, product_of_affine_forms
from .reduction import (
    ReductionResult,
    find_reducible_monomial,
    is_reduced,
    reduce_polynomial,
    reduced_monomial_basis,
    vanishing_reduced_basis,
)
from .vanishing import (
    NONZERO,
    EvaluationMatrix,
    OriginCondition,
    exact_multiplicity,
    minimum_degree,
    multiplicity_at,
    multiplicity_profile,
    null_space,
    taylor_data_matrix,
    witness_for_degree,
)

__version__ = "0.1.0"

__all__ = [
    "AffineForm",
    "CharacteristicError",
    "EvaluationMatrix",
    "Field",
    "NONZERO",
    "OriginCondition",
    "ReductionResult",
    "SparsePolynomial",
    "exact_multiplicity",
    "find_reducible_monomial",
    "is_prime",
    "is_reduced",
    "kernel_backend",
    "minimum_degree",
    "multiplicity_at",
    "multiplicity_profile",
    "null_space",
    "product_of_affine_forms",
    "reduce_polynomial",
    "reduced_monomial_basis",
    "taylor_data_matrix",
    "vanishing_reduced_basis",
    "witness_for_degree",
    "__version__",
]
