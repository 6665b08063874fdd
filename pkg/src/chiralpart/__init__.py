"""Chiral partitions of n: irreducible S_n-modules whose determinant is the
sign character, together with the same question for permutation modules."""

from chiralpart.chirality import (
    ChiralConfig,
    CountReport,
    chiral_hook_count,
    classify,
    count_chiral,
    count_chiral_by_valuation,
    count_odd,
    count_self_conjugate_chiral,
    enumerate_chiral,
    enumerate_self_conjugate_chiral,
    g_exact,
    is_chiral,
    is_chiral_by_tower,
    is_chiral_hook,
    ratio_inequality_holds,
    sample_chiral,
)
from chiralpart.kernels import BACKEND
from chiralpart.partition import (
    BinaryDecomposition,
    FrobeniusCoords,
    binary_decomposition,
    conjugate,
    content_sum,
    dimension,
    frobenius,
    from_core_and_quotient,
    from_frobenius,
    nu,
    p_core,
    p_quotient,
    partition_count,
    partitions,
    v2,
)
from chiralpart.permrep import (
    bell,
    bin_set,
    count_perm_chiral,
    count_perm_odd_dimension,
    is_neat,
    multinomial_is_odd,
    perm_is_chiral,
    perm_is_chiral_oracle,
)
from chiralpart.tower import (
    CoreTower,
    deviation,
    partition_of,
    row_weights,
    tower_of,
    truncated_core,
)

__version__ = "0.1.0"
