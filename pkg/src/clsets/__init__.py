"""Cameron-Liebler classes of k-subsets: enumeration, exact tests and classification."""

from .classify import (
    CanonicalFamily,
    ClassificationResult,
    EKRCensus,
    canonical_form,
    classify,
    ekr_bound_check,
    enumerate_cl_brute,
    enumerate_ekr_2k,
    verify_classification,
)
from .clkernel import (
    VERDICTS,
    CLReport,
    Family,
    anti_pencil,
    check_by_disjointness,
    check_by_eigenvector,
    check_by_kernel,
    check_by_partitions,
    check_by_rowspace,
    complement,
    full_check,
    incidence_matrix,
    parameter,
    point_pencil,
    verdict_table,
)
from .errors import DivisibilityError, DomainError, InconsistencyError, RangeError, ResourceError
from .exactla import ExactMatrix, ExactVector, dot, in_row_space, kernel_basis, mat_vec, rank_exact
from .setcore import (
    GroundSet,
    KSubset,
    UniformPartition,
    binom,
    colex_rank,
    colex_unrank,
    count_partitions,
    disjoint,
    enumerate_k_subsets,
    enumerate_partitions,
)
from .spectral import kneser_matrix, predicted_spectrum, verify_spectrum

__version__ = "0.1.0"
