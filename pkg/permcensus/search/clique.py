# coding=utf-8
"""
Clique Solver Module

Exact branch-and-bound maximum (weighted) clique with greedy coloring
bounds, and enumeration of all cliques of a fixed size. Vertex sets are
Python int bitmasks; vertices are renumbered by descending degree so the
coloring visits high-degree vertices first.
"""

import logging
from typing import Iterator, List, Optional, Sequence, Tuple

import numpy as np

from permcensus.core.code import Code, make_code
from permcensus.core.config import validate_distance
from permcensus.core.permutation import Permutation
from permcensus.search.result import SearchBudget
from permcensus.search.space import get_space

logger = logging.getLogger(__name__)


def masks_from_matrix(matrix: np.ndarray) -> List[int]:
    """Bitmask adjacency rows of a boolean matrix (diagonal ignored)"""
    size = matrix.shape[0]
    weights = [1 << j for j in range(size)]
    masks = []
    for i in range(size):
        row = matrix[i].copy()
        row[i] = False
        masks.append(sum(weights[j] for j in np.flatnonzero(row)))
    return masks


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


class _CliqueGraph:
    """Degree-ordered bitset copy of the input graph"""

    def __init__(self, adjacency: Sequence[int], weights: Optional[Sequence[int]] = None):
        size = len(adjacency)
        degrees = [_popcount(a) for a in adjacency]
        self.order = sorted(range(size), key=lambda v: (-degrees[v], v))
        position = {v: p for p, v in enumerate(self.order)}
        self.adjacency = [0] * size
        for v in range(size):
            mask = 0
            for u in _bits(adjacency[v]):
                mask |= 1 << position[u]
            self.adjacency[position[v]] = mask
        self.weights = [1] * size if weights is None else [weights[v] for v in self.order]
        self.all = (1 << size) - 1

    def original(self, vertices: Sequence[int]) -> List[int]:
        return sorted(self.order[v] for v in vertices)

    def color_bounds(self, candidates: int) -> Tuple[List[int], List[int]]:
        """
        Greedy coloring of the candidates

        Returns the vertices in color-class order and, per vertex, the
        cumulative sum of the class maxima up to its class (an upper bound on
        the weight of any clique inside the classes so far).
        """
        adjacency = self.adjacency
        weights = self.weights
        order: List[int] = []
        bounds: List[int] = []
        uncolored = candidates
        total = 0
        while uncolored:
            available = uncolored
            members = []
            heaviest = 0
            while available:
                low = available & -available
                v = low.bit_length() - 1
                available &= ~adjacency[v] & ~low
                uncolored &= ~low
                members.append(v)
                heaviest = max(heaviest, weights[v])
            total += heaviest
            order.extend(members)
            bounds.extend([total] * len(members))
        return order, bounds


def max_clique(adjacency: Sequence[int], weights: Optional[Sequence[int]] = None,
               budget: Optional[SearchBudget] = None, lower_bound: int = 0,
               target: Optional[int] = None) -> Tuple[List[int], int]:
    """
    Exact maximum (weighted) clique

    Args:
        adjacency: Bitmask neighbour sets over vertices 0..m-1
        weights: Positive vertex weights (default 1)
        budget: Node/time caps
        lower_bound: Only cliques heavier than this are searched for
        target: Stop as soon as a clique of this weight is found

    Returns:
        (sorted vertex list, weight); empty list when nothing beats lower_bound
    """
    graph = _CliqueGraph(adjacency, weights)
    budget = budget or SearchBudget()
    best: List[int] = []
    best_weight = lower_bound
    clique: List[int] = []
    done = False

    def expand(candidates: int, weight: int) -> None:
        nonlocal best, best_weight, done
        budget.tick(depth=len(clique), best=best_weight)
        order, bounds = graph.color_bounds(candidates)
        for idx in range(len(order) - 1, -1, -1):
            if done or weight + bounds[idx] <= best_weight:
                return
            v = order[idx]
            clique.append(v)
            grown = weight + graph.weights[v]
            remaining = candidates & graph.adjacency[v]
            if remaining:
                expand(remaining, grown)
            elif grown > best_weight:
                best, best_weight = list(clique), grown
                if target is not None and best_weight >= target:
                    done = True
            clique.pop()
            candidates &= ~(1 << v)

    if adjacency:
        expand(graph.all, 0)
    result = graph.original(best)
    logger.debug("Max clique: weight %d over %d vertices, %d nodes", best_weight, len(adjacency), budget.nodes)
    return result, (best_weight if result else 0)


def enumerate_cliques(adjacency: Sequence[int], size: int,
                      budget: Optional[SearchBudget] = None) -> Iterator[List[int]]:
    """
    All cliques with exactly `size` vertices, each once (as a sorted vertex list)

    Vertices are added in increasing degree-order position; branches whose
    coloring bound cannot reach `size` are cut.
    """
    graph = _CliqueGraph(adjacency)
    budget = budget or SearchBudget()
    clique: List[int] = []

    def extend(candidates: int) -> Iterator[List[int]]:
        budget.tick(depth=len(clique))
        need = size - len(clique)
        if need == 0:
            yield graph.original(clique)
            return
        if _popcount(candidates) < need:
            return
        _, bounds = graph.color_bounds(candidates)
        if bounds and bounds[-1] < need:
            return
        for v in list(_bits(candidates)):
            candidates &= ~(1 << v)
            clique.append(v)
            yield from extend(candidates & graph.adjacency[v])
            clique.pop()
            if _popcount(candidates) < need:
                return

    if size == 0:
        yield []
        return
    yield from extend(graph.all if adjacency else 0)


def max_code(n: int, d: int, budget: Optional[SearchBudget] = None) -> Code:
    """
    A maximum-size (n,d)-code containing Id

    The clique search runs on V_d({Id}) only, since every code is isometric
    to one containing Id.
    """
    validate_distance(n, d)
    space = get_space(n)
    identity = Permutation.identity(n)
    neighbourhood = space.extension_indices(Code(n, d, (identity,)))
    far = space.far(d)[np.ix_(neighbourhood, neighbourhood)]
    members, _ = max_clique(masks_from_matrix(far), budget=budget)
    return make_code(d, [identity] + [space.permutation(int(neighbourhood[v])) for v in members])


def max_code_size(n: int, d: int, budget: Optional[SearchBudget] = None) -> int:
    """
    μ(n,d), the largest size of an (n,d)-code

    Examples:
        μ(5,4) = 20, μ(4,3) = 12, μ(4,4) = 4.
    """
    return max_code(n, d, budget).size
