"""Exact computation of alpha-determinants, wreath determinants, immanants,
symmetric-group characters and Kostka numbers, plus verification suites that
check the identities relating them by exhaustive exact arithmetic."""

from .adet import (
    adet2_poly,
    adet2_structured,
    adet_at,
    adet_poly,
    det_power_coeff,
    subgroup_avg_adet,
    wrdet,
    wreath_average_poly,
)
from .characters import (
    alpha_power_expansion,
    character,
    class_size,
    convolve_characters,
    immanant,
    subgroup_averaged_character,
)
from .errors import (
    AlphadetError,
    DimensionMismatch,
    DivisionByZeroPoly,
    IdentityViolation,
    NoFactorFound,
    NonUniqueFactor,
    NotDivisible,
    NotSquare,
    ShapeWeightMismatch,
    SizeCapExceeded,
)
from .matrices import (
    PermutedBlockOnes,
    RatMatrix,
    block_ones,
    column_replicator,
    inflate,
    perm_matrix,
)
from .partitions import (
    conjugate,
    content_poly,
    content_poly_at,
    kostka_ssyt,
    num_standard_tableaux,
    partitions_of,
)
from .perms import (
    BlockProfile,
    Perm,
    block_profile,
    coset_factor,
    double_coset_index,
    enumerate_perms,
    jucys_murphy_product,
    young_subgroup,
)
from .polynomials import QPoly, QPoly2
from .randmat import SplitMix64, random_matrix
from .rationals import format_rational, parse_rational

__version__ = "0.1.0"
