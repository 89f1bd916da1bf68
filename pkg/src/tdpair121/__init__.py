"""Exact-arithmetic tridiagonal pairs of shape (1,2,1).

Construct, verify and analyze tridiagonal pairs on a 4-dimensional space
over the rationals or a prime field: parameter arrays, admissibility, the
canonical construction, six bases, representation and transition matrices,
and the dihedral family of relatives.  All arithmetic is exact and every
check is zero-tolerance.
"""

from .bases import (
    BasisId,
    EtaVectors,
    basis_matrix,
    canonical_seed,
    eta_vectors,
    represent,
    represent_formula,
    transition_formula,
    transition_numeric,
)
from .fields import Field, FieldElement, QQ, field_arith, parse_element
from .linalg import (
    EigenData,
    Matrix,
    SingularMatrixError,
    Subspace,
    charpoly,
    eigen_data,
    poly_roots,
    primitive_idempotents,
    subspace_combine,
    subspace_intersection,
    subspace_sum,
)
from .params import (
    AdmissibilityReport,
    D4Word,
    DerivedParams,
    FLIP_DUAL,
    FLIP_PRIMARY,
    ParameterArray,
    SWAP,
    admissible,
    canonical_matrices,
    construct,
    derived_params,
    derived_of_relative_consistency,
    extract_parameter_array,
    relative,
)
from .tdsystem import (
    Decomposition,
    TDSystem,
    VerificationReport,
    common_invariant_subspace,
    find_td_orderings,
    shape,
    split_decomposition,
    verify_split_actions,
    verify_td_system,
)

__version__ = "0.1.0"
