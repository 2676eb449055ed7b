"""Exact computations with bismash-product Hopf algebras k^G # kF built
from factorizable permutation groups L = FG."""

from .cyclo import Cyclotomic
from .characters import (
    ClassFunction,
    CyclicLabel,
    Partition,
    SymmetricLabel,
    TrivialLabel,
    UnsupportedStabilizerError,
    cyclic_characters,
    hook_length_dimension,
    induced_character_value,
    mn_character,
    partitions,
    transversal,
)
from .hopf import AlgebraElement, BasisSymbol, BismashAlgebra, TensorElement
from .indicators import (
    IndicatorReport,
    SimpleModuleDescriptor,
    classify_simples,
    count_m,
    full_report,
    hn_dimension_profile,
    indicator_cp,
    indicator_generic,
    jp_counts,
    ratio,
    sn_invariant_elements,
    total_orthogonality,
)
from .matched_pair import (
    Factorization,
    FactorizationError,
    OrbitData,
    act_into_F,
    act_into_G,
    build_factorization,
    build_hn,
    build_jn,
    inversion_set,
    invariants_GF,
    orbits,
    verify_matched_pair,
)
from .perm import (
    Permutation,
    PermutationGroup,
    count_involutions,
    cyclic_group,
    enumerate_group,
    involution_recursion,
    parse_cycles,
    symmetric_group,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
