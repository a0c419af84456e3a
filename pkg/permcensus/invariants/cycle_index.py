# coding=utf-8
"""
Cycle Index Module

Cycle index vector b_j (ordered pairs (φ,ψ) with φψ⁻¹ in the j-th conjugacy
class) and the distance enumerator, its fixed-point projection.
"""

from collections import Counter
from dataclasses import dataclass
from typing import Dict, List, Tuple

import numpy as np

from permcensus.core.code import Code
from permcensus.core.permutation import CycleType, compose, cycle_lengths, invert, partitions


@dataclass(frozen=True)
class CycleIndexVector:
    """
    Integer form of Q_C(x) = Σ b_j x^j / |C|

    counts follows the reverse-lexicographic partition order of partitions(n),
    so two vectors compare element by element.
    """

    degree: int
    code_size: int
    counts: Tuple[int, ...]

    def count(self, cycle_type: CycleType) -> int:
        return self.counts[partitions(self.degree).index(cycle_type)]

    def as_dict(self, nonzero_only: bool = True) -> Dict[str, int]:
        """Counts keyed by partition string, e.g. {"3+2": 10}"""
        return {
            str(part): value
            for part, value in zip(partitions(self.degree), self.counts)
            if value or not nonzero_only
        }

    def distance_projection(self) -> List[int]:
        """A[k] = Σ b_j over classes with exactly n-k fixed points"""
        result = [0] * (self.degree + 1)
        for part, value in zip(partitions(self.degree), self.counts):
            result[part.moved_points] += value
        return result


def cycle_index(code: Code) -> CycleIndexVector:
    """
    Cycle index counts over all |C|² ordered pairs, diagonal included

    Examples:
        Sym(3) as a (3,2)-code gives {"1+1+1": 6, "2+1": 18, "3": 12}.
    """
    n = code.degree
    inverses = [invert(psi) for psi in code.elements]
    tally: Counter = Counter()
    for phi in code.elements:
        for psi_inv in inverses:
            tally[cycle_lengths(compose(phi, psi_inv).images)] += 1
    counts = tuple(tally.get(part.parts, 0) for part in partitions(n))
    return CycleIndexVector(n, code.size, counts)


def distance_matrix(code: Code) -> np.ndarray:
    """s x s matrix of pairwise Hamming distances"""
    table = np.array([phi.images for phi in code.elements], dtype=np.int8)
    return (table[:, None, :] != table[None, :, :]).sum(axis=2)


def distance_enumerator(code: Code) -> List[int]:
    """
    A[k] = number of ordered pairs at distance k, for 0 <= k <= n

    Computed from the distance matrix, independently of cycle_index.
    """
    counts = np.bincount(distance_matrix(code).ravel(), minlength=code.degree + 1)
    return [int(x) for x in counts]
