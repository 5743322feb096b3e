"""Partitions of Z_n into arithmetic-progression blocks.

Thin re-export of the C++ extension. Counts come back as Python ints of
arbitrary size; partitions print in the canonical ``n=.. m=.. blocks=(h:l)..``
form.
"""

from ._core import (
    APBlock,
    APPartition,
    BudgetExceeded,
    InvariantViolation,
    PartitionType,
    PreconditionError,
    all_types,
    block_from_set,
    check_condition,
    count_ap_partitions,
    cyclic_multinomial,
    enumerate_ap_partitions,
    enumerate_dissections,
    enumerate_spaced_subsets,
    generalized_kaplansky,
    head_profiles,
    kaplansky,
    msun_count,
    parse,
    separate,
    separation_trace,
    starting_points,
    subsets_to_partitions,
    to_json,
    to_text,
    type_of,
    underlying_set,
    validate_partition,
    verify,
    verify_roundtrip,
)

__all__ = [name for name in dir() if not name.startswith("_")]
