"""Exact combinatorics of type-A rational Cherednik algebras and Hilbert
schemes of the plane curve singularities {x^m = y^n} and {y^n = 0}.

All arithmetic is exact (fractions.Fraction); there is no floating point
anywhere in the package.
"""

from .affineperm import (
    AffinePermutation,
    compare_order,
    coset_factorization,
    coset_factorization_transpose,
    is_m_restricted,
    is_m_stable,
    min_coset_rep,
    omega_from_basis,
    precedes,
    sorting_permutation,
    translation,
)

__all__ = [
    "AffinePermutation",
    "compare_order",
    "coset_factorization",
    "coset_factorization_transpose",
    "is_m_restricted",
    "is_m_stable",
    "min_coset_rep",
    "omega_from_basis",
    "precedes",
    "sorting_permutation",
    "translation",
]
