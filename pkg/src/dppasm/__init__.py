"""Descending plane partitions, alternating sign matrices and the bijection
between DPPs without special parts and permutation matrices."""

from .bijection import (
    BijectionTrace,
    asm_to_dpp,
    asm_to_mt,
    dpp_to_asm,
    dpp_to_partition,
    mt_to_asm,
    mt_to_partition,
    mt_to_permutation,
    partition_to_dpp,
    partition_to_mt,
    permutation_to_mt,
)
from .core import (
    Asm,
    AsmStats,
    Dpp,
    DppStats,
    MonotoneTriangle,
    Partition,
    Permutation,
    asm_stats,
    diagonal_equal_entries,
    dpp_stats,
    inversion_number,
    special_parts,
    validate_dpp,
)
from .enumeration import (
    dpp_arrangements,
    enumerate_asms,
    enumerate_dpps,
    enumerate_dpps_no_special,
    enumerate_mts,
    enumerate_permutations,
)
from .genfunc import (
    QPolynomial,
    count_formula,
    empirical_gf,
    nosp_gf_formula,
    q_bracket,
    q_count_formula,
    q_factorial,
)

__version__ = "0.1.0"
