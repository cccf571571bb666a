"""Exact counts of factorizations of an n-cycle in S_n into two given classes."""

from .characters import (
    CharacterTable,
    character,
    character_table,
    count_frobenius,
    count_hook,
    hook_character,
)
from .errors import CapacityError, ConsistencyError, PartitionParseError
from .oracle import (
    Permutation,
    canonical_cycle,
    canonical_representative,
    compose,
    count_bruteforce,
    cycle_type,
    enumerate_class,
)
from .partitions import (
    Partition,
    class_size,
    format_partition,
    is_hook,
    parse_partition,
    partitions_of,
    z_lambda,
)
from .polyformula import BivariatePoly, count_positive, q_poly, r_coefficients, r_poly
from .records import CountRecord

__version__ = "0.1.0"
