"""Certified bounds on the minimum positive gap between signed sums of
square roots of small integers and the nearest integer.

The library is exact end to end: arbitrary-precision integers and
rationals, outward-rounded dyadic intervals for every real quantity, an
all-integer LLL with block enumeration on top, and lower-bound
certificates whose threshold comparison is an exact rational decision.
"""

from .exactnum import (
    Enclosure,
    LogBound,
    PrecisionExhausted,
    RadicalSum,
    certify_sign,
    compare_abs,
    dyadic_decimal,
    enclose_radical_sum,
    isqrt,
    scaled_nearest_sqrt,
    sqrt_enclosure,
)
from .squarefree import (
    is_squarefree,
    nth_squarefree,
    prime_count,
    squarefree_decompose,
    squarefree_upto,
)
from .lattice import (
    DependentRowsError,
    GramSchmidtProfile,
    LatticeBasis,
    ShortestVector,
    build_basis,
    determinant,
    enumerate_shortest,
    gram_schmidt,
)
from .reduction import (
    ReducedBasis,
    ReductionError,
    ReductionParams,
    bkz,
    lll,
    reduced_profile,
)
from .bounds import (
    LowerBoundCertificate,
    NoCertificateError,
    QianWangInstance,
    RatioCell,
    SqrtThreshold,
    UpperBoundWitness,
    certification_threshold,
    certify_lower_bound,
    find_lower_bound,
    qian_wang_instance,
    ratio_scan,
    root_separation_log10,
    row_witness,
    upper_bound_from_reduction,
)
from .oracle import BruteForceResult, EnumerationCapError, brute_force

__version__ = "0.1.0"
