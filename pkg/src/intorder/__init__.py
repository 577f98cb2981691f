"""Interval orders from mixed open/closed representations, and their dimension."""

from .builders import (
    antichain_partition_minima,
    realizer_multi_length,
    realizer_unit_oc,
    realizer_zero_one,
    zero_one_decomposition,
)
from .dimension import DimensionResult, exact_dimension, unit_dim3_by_pattern
from .instances import canonical_interval_order, named, random_representation
from .intervals import (
    MixedInterval,
    Representation,
    canonical_closed_representation,
    classify,
    closed,
    is_consistent,
    is_interval_order,
    is_unit_interval_order,
    open_,
    open_all,
    point,
    poset_from_representation,
    precedes,
    scale,
)
from .poset import (
    IncPair,
    Poset,
    Realizer,
    build_poset,
    contains_subposet,
    down_set,
    incomparable_pairs,
    is_linear_extension,
    up_set,
    verify_realizer,
)
from .reversal import (
    CycleWitness,
    extension_separating,
    find_strict_alternating_cycle,
    linear_extension_reversing,
)

__version__ = "0.1.0"
