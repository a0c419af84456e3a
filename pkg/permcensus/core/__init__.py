# coding=utf-8
"""
Core Module - Permutation algebra, the code container and configuration
"""

from permcensus.core.permutation import (
    Permutation,
    CycleType,
    compose,
    invert,
    hamming_distance,
    cycle_type,
    derangement_count,
    partitions,
    all_permutations,
)
from permcensus.core.code import (
    Code,
    make_code,
    format_code,
    parse_code,
    read_code_file,
    write_code_file,
)
from permcensus.core.config import RunConfig
from permcensus.core.loader import load_config

__all__ = [
    # Permutations
    "Permutation",
    "CycleType",
    "compose",
    "invert",
    "hamming_distance",
    "cycle_type",
    "derangement_count",
    "partitions",
    "all_permutations",
    # Codes
    "Code",
    "make_code",
    "format_code",
    "parse_code",
    "read_code_file",
    "write_code_file",
    # Configuration
    "RunConfig",
    "load_config",
]
