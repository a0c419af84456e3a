# coding=utf-8
"""
Orbit Clique Module

Large codes as unions of orbits of a subgroup G ≤ Sym(n), acting on Sym(n)
by left multiplication (φ ↦ βφ) or by conjugation (φ ↦ βφβ⁻¹). An orbit
is admissible when its own elements are pairwise at distance >= d; two
admissible orbits are joined when all cross distances are >= d. A maximum
weighted clique (weight = orbit size) gives the code.
"""

import logging
from collections import deque
from dataclasses import dataclass, field
from typing import List, Sequence, Set, Tuple

import networkx as nx
import numpy as np

from permcensus.core.code import Code, make_code
from permcensus.core.config import ORBIT_MODES, validate_choice, validate_distance
from permcensus.core.permutation import Permutation, compose
from permcensus.search.clique import max_clique
from permcensus.search.result import SearchBudget
from permcensus.search.space import SymmetricGroup, get_space
from permcensus.utils.errors import EmptyResultError, InvalidParameterError
from permcensus.utils.unionfind import UnionFind

logger = logging.getLogger(__name__)


def generate_group(generators: Sequence[Permutation], n: int) -> List[Permutation]:
    """Elements of the subgroup of Sym(n) generated by the given permutations, sorted"""
    for g in generators:
        if g.degree != n:
            raise InvalidParameterError(f"Generator {g} has degree {g.degree}, expected {n}")
    identity = Permutation.identity(n)
    group: Set[Permutation] = {identity}
    queue = deque([identity])
    while queue:
        current = queue.popleft()
        for g in generators:
            element = compose(g, current)
            if element not in group:
                group.add(element)
                queue.append(element)
    return sorted(group)


@dataclass
class OrbitGraph:
    """
    Orbits of G on Sym(n) with admissibility flags and the compatibility edges

    Orbits partition Sym(n); each is a sorted array of table indices. Edges
    join admissible orbits only and are stored as (a, b) with a < b.
    """

    n: int
    d: int
    mode: str
    group_order: int
    orbits: List[np.ndarray] = field(default_factory=list)
    admissible: List[bool] = field(default_factory=list)
    edges: List[Tuple[int, int]] = field(default_factory=list)

    def admissible_indices(self) -> List[int]:
        return [i for i, ok in enumerate(self.admissible) if ok]

    def to_networkx(self) -> nx.Graph:
        """Graph on admissible orbits with 'weight' = orbit size"""
        graph = nx.Graph()
        for i in self.admissible_indices():
            graph.add_node(i, weight=len(self.orbits[i]))
        graph.add_edges_from(self.edges)
        return graph


def _orbits(space: SymmetricGroup, group: Sequence[Permutation], mode: str) -> List[np.ndarray]:
    table = space.table.astype(np.int64)
    uf = UnionFind(space.order)
    for g in group:
        beta = np.array(g.images, dtype=np.int64)
        if mode == "left":
            images = beta[table]
        else:
            beta_inv = np.argsort(beta)
            images = beta[table[:, beta_inv]]
        for a, b in enumerate(space.rank(images)):
            uf.union(a, int(b))
    return [np.array(group_members) for group_members in uf.groups()]


def build_orbit_graph(n: int, d: int, generators: Sequence[Permutation], mode: str = "left") -> OrbitGraph:
    """Orbit decomposition of Sym(n) under ⟨generators⟩ and the orbit compatibility graph"""
    validate_distance(n, d)
    validate_choice("mode", mode, ORBIT_MODES)
    space = get_space(n)
    group = generate_group(generators, n)
    far = space.far(d)
    graph = OrbitGraph(n, d, mode, len(group), orbits=_orbits(space, group, mode))
    for orbit in graph.orbits:
        block = far[np.ix_(orbit, orbit)]
        np.fill_diagonal(block, True)
        graph.admissible.append(bool(block.all()))
    admissible = graph.admissible_indices()
    for x, a in enumerate(admissible):
        for b in admissible[x + 1:]:
            if far[np.ix_(graph.orbits[a], graph.orbits[b])].all():
                graph.edges.append((a, b))
    logger.info("Orbit graph: |G| = %d, %d orbits, %d admissible, %d edges",
                graph.group_order, len(graph.orbits), len(admissible), len(graph.edges))
    return graph


def orbit_clique_search(n: int, d: int, generators: Sequence[Permutation], mode: str = "left",
                        budget: SearchBudget = None) -> Code:
    """
    Largest code that is a union of admissible G-orbits

    Raises:
        EmptyResultError: no orbit is admissible
    """
    graph = build_orbit_graph(n, d, generators, mode)
    admissible = graph.admissible_indices()
    if not admissible:
        raise EmptyResultError(
            f"No orbit of the group of order {graph.group_order} is a ({n},{d})-code",
            suggestion="Try a smaller group, another mode, or a smaller d",
        )
    local = {orbit: i for i, orbit in enumerate(admissible)}
    masks = [0] * len(admissible)
    for a, b in graph.edges:
        masks[local[a]] |= 1 << local[b]
        masks[local[b]] |= 1 << local[a]
    weights = [len(graph.orbits[i]) for i in admissible]
    members, weight = max_clique(masks, weights=weights, budget=budget)
    space = get_space(n)
    indices = sorted(int(x) for v in members for x in graph.orbits[admissible[v]])
    code = make_code(d, [space.permutation(i) for i in indices])
    logger.info("Orbit clique: %d orbits, code size %d", len(members), weight)
    return code
