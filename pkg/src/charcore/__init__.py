"""Exact character values of symmetric groups on the abacus encoding,
with prime-power divisibility verifiers and desk-scale statistics."""

from .abacus import (
    Abacus,
    Hook,
    QuotientView,
    from_partition,
    hooks_of_length,
    is_tcore,
    quotient,
    remove_border_strip,
    skew_per_residue,
    tcore,
    to_partition,
)
from .characters import (
    CharacterTable,
    build_table,
    centralizer_order,
    chi,
    degree,
    verify_orthogonality,
)
from .divisibility import (
    CombineConfig,
    HookSequence,
    ReductionTrace,
    VerifyReport,
    check_divisibility_theorem,
    combine_step,
    enumerate_hook_sequences,
    epsilon,
    reduce_partition,
    theorem1_pipeline,
    verify_combine_congruence,
    verify_count_factorization,
)
from .errors import (
    FormatError,
    RangeError,
    SizeCapError,
    UnreachableError,
)
from .partitions import (
    Partition,
    conjugate,
    enumerate_partitions,
    format_partition,
    hook_lengths,
    parse_partition,
    partition_count,
    partitions_of,
    sample_uniform,
)
from .tableaux import (
    SkewShape,
    count_skew_syt,
    count_syt,
    is_border_strip,
    lr_coefficient,
    verify_lr_expansion,
)

__version__ = "0.1.0"
