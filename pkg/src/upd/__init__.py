"""Exact monomial-ideal engine for uniformly bounded primary decompositions.

Families n ↦ I(n) of monomial ideals model the graded components A/I(n) of a
finitely generated N^t-graded module.  The package decomposes them so that
every P-primary component contains P^k for one k across the whole family,
checks the matching uniform index for H^0_J, and cross-checks everything
against a brute-force staircase oracle.
"""

from .decomposition import (
    PrimaryComponent,
    PrimaryDecomposition,
    assemble,
    associated_primes,
    irreducible_decomposition,
    is_primary,
    primary_decomposition,
)
from .errors import (
    AssemblyError,
    CapExceeded,
    ContextMismatch,
    IntersectionMismatch,
    KTooSmall,
    NotPrimary,
    ParseError,
    UnitIdealError,
    ZeroIdealError,
)
from .family import Box, FamilySpec, Mode, ass_union, evaluate, iterate, load_family, parse_family, parse_ideal
from .kernels import BACKEND
from .monomial import (
    Monomial,
    MonomialIdeal,
    RingContext,
    colon,
    contains_monomial,
    ideal_eq,
    ideal_leq,
    ideal_sum,
    intersect,
    minimalize,
    power,
    product,
    radical,
    saturate,
)
from .oracle import staircase
from .theorems import (
    BoundedCertificate,
    ScanReport,
    artin_rees_consequence,
    bounded_decomposition,
    h0,
    h0_via_components,
    k_min,
    minimal_s,
    scan_uniform_k,
    verify_certificate,
    verify_h0_uniform,
)

__version__ = "0.1.0"
