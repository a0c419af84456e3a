# coding=utf-8
"""
Utility Module - Errors, time helpers and union-find
"""

from permcensus.utils.errors import (
    PermCensusError,
    InvalidParameterError,
    CodeFormatError,
    DistanceViolationError,
    OracleLimitError,
    GraphStructureError,
    EmptyResultError,
    ResourceCapExceeded,
    CanonConsistencyError,
)
from permcensus.utils.time import get_configured_time, format_timestamp, Stopwatch
from permcensus.utils.unionfind import UnionFind, find_orbits

__all__ = [
    "PermCensusError",
    "InvalidParameterError",
    "CodeFormatError",
    "DistanceViolationError",
    "OracleLimitError",
    "GraphStructureError",
    "EmptyResultError",
    "ResourceCapExceeded",
    "CanonConsistencyError",
    "get_configured_time",
    "format_timestamp",
    "Stopwatch",
    "UnionFind",
    "find_orbits",
]
