"""Exact verification toolkit for symmetric groups: twisted involution
counts versus character degree sums, the row-insertion correspondence,
hook-length degrees, the outer automorphisms of S_6, and exact-sum fiber
certificates for the involution-count layers."""

from .automorphisms import (
    Automorphism,
    IdentityAutomorphism,
    InnerAutomorphism,
    OuterS6Automorphism,
    Pentad,
    alpha_injection,
    build_outer_s6,
    map_mult4,
    outer_s6_catalog,
    parse_automorphism,
    pentad_catalog,
)
from .characters import (
    CharacterTable,
    IndicatorReport,
    character_table,
    class_size,
    cycle_type,
    mn_character,
    twisted_fs_indicator,
    verify_indicator_identity,
)
from .fibers import (
    FiberDecomposition,
    check_observations,
    search_decomposition,
    verify_decomposition,
)
from .partitions import (
    HookGrid,
    degree,
    hook_grid,
    involution_count_closed_form,
    layer_value,
    layer_values,
    partitions_of,
    recurrence_a,
    total_degree_sum,
)
from .perms import (
    CycleDecomposition,
    Permutation,
    compose,
    conjugate,
    cycle_decomposition,
    enumerate_group,
    inverse,
    order,
    parse_permutation,
    rank,
    unrank,
)
from .rsk import StandardTableau, inverse_rsk, row_insert, rsk_pair
from .twisted import (
    TwistedCount,
    complex_rep_criterion,
    enumerate_twisted,
    inner_class_representatives,
    sweep_outer_s6,
    verify_bound,
    verify_odd_order_structure,
)

__version__ = "0.1.0"
