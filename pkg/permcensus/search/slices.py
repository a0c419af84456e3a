# coding=utf-8
"""
Size Slice Census

All isometry classes of (n,d)-codes of one exact size, without a full
census. Every code of size >= 2 is isometric to one containing Id and a
fixed representative ρ of the smallest cycle type τ among its pair
quotients φψ⁻¹ (right multiplication keeps quotient types, conjugation
then moves the quotient onto ρ). The remaining elements form a clique in
the graph on permutations φ with type(φ) and type(φρ⁻¹) not below τ, two
of them adjacent when their quotient type is not below τ. Types are
ordered as in cycle index vectors; only types moving at least d points
occur, which encodes the distance condition.
"""

import logging
from typing import Dict, List, Optional, Tuple

import numpy as np

from permcensus.canon.labeling import canonical_code, canonical_form
from permcensus.core.code import make_code
from permcensus.core.config import validate_distance
from permcensus.core.permutation import CycleType, Permutation, cycle_lengths, partitions
from permcensus.search.clique import enumerate_cliques, masks_from_matrix
from permcensus.search.genbylist import seed_code
from permcensus.search.registry import CertificateRegistry
from permcensus.search.result import ClassRecord, EnumerationResult, SearchBudget
from permcensus.search.space import SymmetricGroup, get_space
from permcensus.utils.errors import InvalidParameterError, ResourceCapExceeded

logger = logging.getLogger(__name__)

KLOEVE_DEGREE = 6
KLOEVE_DISTANCE = 5
KLOEVE_SIZE = 18


def cycle_type_representative(cycle_type: CycleType) -> Permutation:
    """Permutation of the given type whose cycles are runs of consecutive points"""
    images = []
    start = 0
    for length in cycle_type.parts:
        images.extend(start + (k + 1) % length for k in range(length))
        start += length
    return Permutation.trusted(tuple(images))


def _type_positions(space: SymmetricGroup) -> np.ndarray:
    """Position in partitions(n) of the cycle type of every table row"""
    position = {t.parts: i for i, t in enumerate(partitions(space.n))}
    return np.array([position[cycle_lengths(row.tolist())] for row in space.table], dtype=np.int64)


def _quotient_ranks(space: SymmetricGroup, left: np.ndarray, right: np.ndarray) -> np.ndarray:
    """Table indices of u·v⁻¹ for every pair (u in left, v in right), shape (len(left), len(right))"""
    u = space.table[left].astype(np.int64)
    v_inv = np.argsort(space.table[right].astype(np.int64), axis=1)
    # (u∘v⁻¹)(i) = u[v⁻¹[i]]
    images = u[np.arange(len(left))[:, None, None], v_inv[None, :, :]]
    return space.rank(images.reshape(-1, space.n)).reshape(len(left), len(right))


def _slice_for_type(space: SymmetricGroup, d: int, size: int, allowed: np.ndarray,
                    type_of: np.ndarray, rho: Permutation, inversion: bool,
                    registry: CertificateRegistry, budget: SearchBudget) -> int:
    identity = Permutation.identity(space.n)
    rho_index = space.index(rho)
    rho_inv = np.argsort(np.array(rho.images, dtype=np.int64))
    candidates = np.flatnonzero(allowed[type_of])
    candidates = candidates[candidates != rho_index]
    over_rho = space.rank(space.table[candidates].astype(np.int64)[:, rho_inv])
    vertices = candidates[allowed[type_of[over_rho]]]
    if len(vertices) < size - 2:
        return 0
    adjacency = allowed[type_of[_quotient_ranks(space, vertices, vertices)]]
    np.fill_diagonal(adjacency, False)
    found = 0
    for clique in enumerate_cliques(masks_from_matrix(adjacency), size - 2, budget):
        found += 1
        code = make_code(d, [identity, rho] + [space.permutation(int(vertices[v])) for v in clique])
        form = canonical_form(code, inversion)
        if form.certificate not in registry:
            record = ClassRecord(form.certificate, size, not space.extension_mask(code).any(),
                                 form.group_size, canonical_code(code, form, inversion))
            registry.insert_if_absent(form.certificate, record)
    logger.debug("Slice type %s: %d vertices, %d cliques", rho, len(vertices), found)
    return found


def slice_census(n: int, d: int, size: int, inversion: bool = True,
                 budget: Optional[SearchBudget] = None) -> EnumerationResult:
    """
    Enumerate the isometry classes of (n,d)-codes of exactly `size` elements

    Args:
        n: Degree
        d: Minimum distance
        size: Code size (>= 1)
        inversion: Count the inversion as an isometry
        budget: Node/time caps; one node per clique search step

    Returns:
        EnumerationResult whose codes are the canonical representatives

    Raises:
        InvalidParameterError: size < 1
        ResourceCapExceeded: cap reached; diagnostics carry the classes found
    """
    validate_distance(n, d)
    if size < 1:
        raise InvalidParameterError(f"Slice size must be >= 1, got {size}")
    budget = budget or SearchBudget()
    space = get_space(n)
    registry = CertificateRegistry()
    types = partitions(n)
    admissible: List[int] = [i for i, t in enumerate(types) if t.moved_points >= d]
    type_of = _type_positions(space)
    cliques = 0

    try:
        if size == 1:
            seed = seed_code(n, d)
            form = canonical_form(seed, inversion)
            registry.insert_if_absent(form.certificate, ClassRecord(
                form.certificate, 1, False, form.group_size, canonical_code(seed, form, inversion)))
        else:
            for i in admissible:
                allowed = np.zeros(len(types), dtype=bool)
                allowed[[j for j in admissible if j >= i]] = True
                rho = cycle_type_representative(types[i])
                cliques += _slice_for_type(space, d, size, allowed, type_of, rho, inversion, registry, budget)
    except ResourceCapExceeded as e:
        e.diagnostics.update({"classes_found": len(registry), "size": size})
        raise

    parameters: Dict[str, object] = {"n": n, "d": d, "size": size, "algorithm": "slice", "inversion": inversion}
    result = EnumerationResult.from_records(
        parameters, registry.values(), emit=lambda r: True,
        wall_time=budget.elapsed, node_count=budget.nodes,
    )
    logger.info("slice(%d,%d,%d): %d cliques, %d classes", n, d, size, cliques, result.total_classes)
    return result


def kloeve65(inversion: bool = True, budget: Optional[SearchBudget] = None) -> EnumerationResult:
    """
    The (6,5) size-18 slice

    Examples:
        Seven classes under the full isometry group.
    """
    return slice_census(KLOEVE_DEGREE, KLOEVE_DISTANCE, KLOEVE_SIZE, inversion, budget)


def slice_types(n: int, d: int) -> List[Tuple[str, Permutation]]:
    """Cycle types moving at least d points with their fixed representatives"""
    validate_distance(n, d)
    return [(str(t), cycle_type_representative(t)) for t in partitions(n) if t.moved_points >= d]
