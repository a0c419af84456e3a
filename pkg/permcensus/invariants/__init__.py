# coding=utf-8
"""
Invariants Module - Quotient sets, cycle index, occurrence matrix

None of these is a complete invariant; the colored graph in canon is.
"""

from permcensus.invariants.quotients import (
    QuotientPair,
    quotient_pair,
    quotient_pairs_equivalent,
    find_conjugator,
    find_conjugator_bruteforce,
    conjugate_set,
)
from permcensus.invariants.cycle_index import (
    CycleIndexVector,
    cycle_index,
    distance_enumerator,
    distance_matrix,
)
from permcensus.invariants.occurrence import (
    OccurrenceMatrix,
    occurrence_matrix,
    is_balanced,
)
from permcensus.invariants.efficiency import InvariantStats, invariant_efficiency

__all__ = [
    "QuotientPair",
    "quotient_pair",
    "quotient_pairs_equivalent",
    "find_conjugator",
    "find_conjugator_bruteforce",
    "conjugate_set",
    "CycleIndexVector",
    "cycle_index",
    "distance_enumerator",
    "distance_matrix",
    "OccurrenceMatrix",
    "occurrence_matrix",
    "is_balanced",
    "InvariantStats",
    "invariant_efficiency",
]
