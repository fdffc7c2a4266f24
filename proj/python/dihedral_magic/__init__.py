"""Dihedral permutation algebras: semi-magic square counts, character tables,
orthogonal idempotents and quaternionic bases for D_{2n}."""

from fractions import Fraction

from ._core import (  # noqa: F401
    Element,
    ResourceError,
    character_table,
    check_ehrhart_properties,
    circulant_idempotent,
    class_data,
    count_closed,
    count_convolution,
    count_pie,
    count_sum_formula,
    decompose_rho,
    eigenbasis,
    elements,
    idempotent_set,
    ideal_dimensions,
    kernel_basis_strings,
    mm_dimension,
    oracle_canonical,
    oracle_count,
    perm_matrix,
    phi_rank,
    project_isotypic,
    quaternion_basis,
    root_of_unity_sum,
    series,
    u_prime,
    verify,
)


def kernel_basis(n):
    """Kernel of the permutation map as lists of Fractions in basis order
    e, R, ..., R^{n-1}, C, CR, ..., CR^{n-1}."""
    return [[Fraction(c) for c in vec] for vec in kernel_basis_strings(n)]


__version__ = "0.1.0"
