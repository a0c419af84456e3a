# coding=utf-8
"""
Occurrence Module

Occurrence matrix o_ij = |{φ ∈ C : φ(i) = j}| and the r-balance test.
"""

from dataclasses import dataclass
from typing import FrozenSet, Tuple

import numpy as np

from permcensus.core.code import Code
from permcensus.core.config import validate_balance


@dataclass(frozen=True)
class OccurrenceMatrix:
    """n x n occurrence counts; rows are positions i, columns are symbols j"""

    entries: Tuple[Tuple[int, ...], ...]

    @property
    def degree(self) -> int:
        return len(self.entries)

    def as_array(self) -> np.ndarray:
        return np.array(self.entries, dtype=np.int64)

    def multiset(self) -> Tuple[int, ...]:
        """Sorted n² entries; the isometry invariant"""
        return tuple(sorted(v for row in self.entries for v in row))

    def value_set(self) -> FrozenSet[int]:
        """Set view {o_ij}; weaker than the multiset"""
        return frozenset(v for row in self.entries for v in row)


def occurrence_array(code: Code) -> np.ndarray:
    """Occurrence counts as an int64 array"""
    n = code.degree
    table = np.array([phi.images for phi in code.elements], dtype=np.int64)
    counts = np.zeros((n, n), dtype=np.int64)
    positions = np.broadcast_to(np.arange(n), table.shape)
    np.add.at(counts, (positions, table), 1)
    return counts


def occurrence_matrix(code: Code) -> OccurrenceMatrix:
    """
    Occurrence matrix of a code

    Examples:
        Sym(3) has every entry equal to 2; the cyclic shifts of Id of degree 5 give all 1.
    """
    return OccurrenceMatrix(tuple(tuple(int(v) for v in row) for row in occurrence_array(code)))


def is_balanced(code: Code, r: int) -> bool:
    """True iff every o_ij = r; requires |C| = n·r, checked before scanning"""
    validate_balance(r)
    if code.size != code.degree * r:
        return False
    return bool((occurrence_array(code) == r).all())
