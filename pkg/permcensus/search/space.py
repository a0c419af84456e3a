# coding=utf-8
"""
Search Space Module

Sym(n) as a numpy table in lexicographic order, with vectorised ranking,
distance kernels and the extension sets V_d(C).
"""

import logging
from functools import lru_cache
from itertools import permutations as _itertools_permutations
from math import comb, factorial
from typing import Dict, Iterable, List, Sequence

import numpy as np

from permcensus.core.code import Code
from permcensus.core.config import validate_distance
from permcensus.core.permutation import Permutation, derangement_count
from permcensus.group.isometry import Isometry
from permcensus.utils.errors import InvalidParameterError
from permcensus.utils.unionfind import UnionFind

logger = logging.getLogger(__name__)

MAX_TABLE_DEGREE = 7
_CHUNK = 512


class SymmetricGroup:
    """
    All n! permutations as rows of an (n!, n) int8 table, lexicographic order

    Row index equals the Lehmer rank, so rank() inverts table lookups. Far
    matrices (distance >= d) are computed on first use and cached.
    """

    def __init__(self, n: int):
        if n > MAX_TABLE_DEGREE:
            raise InvalidParameterError(
                f"Exhaustive search space is limited to n <= {MAX_TABLE_DEGREE}, got {n}"
            )
        self.n = n
        self.order = factorial(n)
        self.table = np.array(list(_itertools_permutations(range(n))), dtype=np.int8)
        self._weights = np.array([factorial(n - 1 - i) for i in range(n)], dtype=np.int64)
        self._far: Dict[int, np.ndarray] = {}

    def rank(self, rows: np.ndarray) -> np.ndarray:
        """Lehmer ranks of image rows (shape (m, n) or (n,))"""
        rows = np.atleast_2d(np.asarray(rows, dtype=np.int64))
        # smaller[:, i] = #{j > i : rows[j] < rows[i]}
        less = rows[:, None, :] < rows[:, :, None]
        upper = np.triu(np.ones((self.n, self.n), dtype=bool), k=1)
        smaller = (less & upper).sum(axis=2)
        return smaller @ self._weights

    def index(self, phi: Permutation) -> int:
        return int(self.rank(np.array(phi.images))[0])

    def indices(self, perms: Iterable[Permutation]) -> np.ndarray:
        rows = np.array([p.images for p in perms], dtype=np.int64).reshape(-1, self.n)
        return self.rank(rows) if len(rows) else np.zeros(0, dtype=np.int64)

    def permutation(self, index: int) -> Permutation:
        return Permutation.trusted(tuple(int(x) for x in self.table[index]))

    def distances_from(self, index: int) -> np.ndarray:
        """Hamming distance of every permutation to the one at index"""
        return (self.table != self.table[index]).sum(axis=1)

    def far(self, d: int) -> np.ndarray:
        """Boolean (n!, n!) matrix of pairs at distance >= d"""
        matrix = self._far.get(d)
        if matrix is None:
            matrix = np.empty((self.order, self.order), dtype=bool)
            for lo in range(0, self.order, _CHUNK):
                block = self.table[lo:lo + _CHUNK]
                matrix[lo:lo + _CHUNK] = (block[:, None, :] != self.table[None, :, :]).sum(axis=2) >= d
            self._far[d] = matrix
            logger.debug("Far matrix computed for n=%d d=%d", self.n, d)
        return matrix

    def apply_isometry(self, t: Isometry, indices: np.ndarray) -> np.ndarray:
        """Indices of the images α·ι^k(φ)·β⁻¹ of the permutations at indices"""
        rows = self.table[indices].astype(np.int64)
        if t.inv:
            inverse = np.empty_like(rows)
            np.put_along_axis(inverse, rows, np.arange(self.n)[None, :].repeat(len(rows), axis=0), axis=1)
            rows = inverse
        alpha = np.array(t.alpha.images, dtype=np.int64)
        beta_inv = np.argsort(np.array(t.beta.images, dtype=np.int64))
        return self.rank(alpha[rows[:, beta_inv]])

    def extension_mask(self, code: Code) -> np.ndarray:
        """Boolean mask of V_d(C)"""
        far = self.far(code.min_distance)
        mask = np.ones(self.order, dtype=bool)
        for index in self.indices(code.elements):
            mask &= far[index]
        return mask

    def extension_indices(self, code: Code) -> np.ndarray:
        """Indices of V_d(C), ascending (lexicographic)"""
        return np.flatnonzero(self.extension_mask(code))


@lru_cache(maxsize=None)
def get_space(n: int) -> SymmetricGroup:
    """Shared SymmetricGroup per degree (one per process)"""
    return SymmetricGroup(n)


def vd_set(code: Code) -> List[Permutation]:
    """
    Permutations at distance >= d from every element of C, lexicographic order

    Examples:
        For (5,4) and C = {Id} there are 89 of them.
    """
    space = get_space(code.degree)
    return [space.permutation(i) for i in space.extension_indices(code)]


def neighborhood_size(n: int, d: int) -> int:
    """
    Σ_{k=d}^{n} C(n,k)·D_k, the number of permutations at distance >= d from Id

    Raises:
        InvalidParameterError: d outside 2..n
    """
    validate_distance(n, d)
    return sum(comb(n, k) * derangement_count(k) for k in range(d, n + 1))


def is_maximal(code: Code) -> bool:
    """True iff V_d(C) is empty"""
    return not get_space(code.degree).extension_mask(code).any()


def stabilizer_orbits(space: SymmetricGroup, generators: Sequence[Isometry],
                      indices: np.ndarray) -> List[np.ndarray]:
    """
    Orbits of the group generated by isometries on a set of permutation indices

    The set must be invariant under the generators (V_d(C) under Stab(C)).
    Orbits are returned ordered by their smallest index.
    """
    if len(indices) == 0:
        return []
    if not generators:
        return [np.array([i]) for i in indices]
    uf = UnionFind(len(indices))
    for t in generators:
        images = space.apply_isometry(t, indices)
        positions = np.searchsorted(indices, images)
        for a, b in enumerate(positions):
            uf.union(a, int(b))
    return [indices[group] for group in uf.groups()]
