# coding=utf-8
"""
Brute-force Isometry Oracles

Exhaustive scans of Iso(n) used to cross-check the certificate path. Both
refuse degrees beyond their cap instead of running for hours.
"""

import logging
from typing import FrozenSet, List, Optional, Tuple

from permcensus.core.code import Code
from permcensus.core.permutation import all_permutations, compose, invert
from permcensus.group.isometry import Isometry, all_isometries
from permcensus.utils.errors import InvalidParameterError, OracleLimitError

logger = logging.getLogger(__name__)

MAX_ISOMETRY_DEGREE = 5
MAX_STABILIZER_DEGREE = 4


def _image_set(code: Code) -> FrozenSet[Tuple[int, ...]]:
    return frozenset(phi.images for phi in code.elements)


def _maps_onto(alpha: Tuple[int, ...], beta_inv: Tuple[int, ...],
               sources: List[Tuple[int, ...]], target: FrozenSet[Tuple[int, ...]]) -> bool:
    """True when every image α·ι^k(φ)·β⁻¹ of the (pre-inverted) sources lies in target"""
    for source in sources:
        if tuple(alpha[source[b]] for b in beta_inv) not in target:
            return False
    return True


def _check_pair(c1: Code, c2: Code) -> None:
    if c1.degree != c2.degree:
        raise InvalidParameterError(f"Degree mismatch: {c1.degree} vs {c2.degree}")
    if c1.min_distance != c2.min_distance:
        raise InvalidParameterError(
            f"Minimum distance mismatch: d={c1.min_distance} vs d={c2.min_distance}"
        )


def are_isometric_bruteforce(c1: Code, c2: Code, limit: int = MAX_ISOMETRY_DEGREE) -> Optional[Isometry]:
    """
    Search Iso(n) for t with apply_to_code(t, c1) = c2

    The scan pins the image ψ ∈ c2 of the first element φ0 of c1: for each
    (k, β, ψ) the left factor is forced to α = ψ·β·ι^k(φ0)⁻¹. Every isometry
    mapping c1 onto c2 arises this way, so the scan is exhaustive.

    Args:
        c1: First code
        c2: Second code
        limit: Degree cap

    Returns:
        First witness in (k, β, ψ) order, or None

    Raises:
        InvalidParameterError: degree or distance mismatch
        OracleLimitError: n above the cap
    """
    _check_pair(c1, c2)
    n = c1.degree
    if n > limit:
        raise OracleLimitError("are_isometric_bruteforce", n, limit)
    if c1.size != c2.size:
        return None

    target = _image_set(c2)
    phi0 = c1.elements[0]
    for inv in (0, 1):
        sources = [invert(phi).images if inv else phi.images for phi in c1.elements]
        pinned_inv = invert(phi0) if inv == 0 else phi0
        for beta in all_permutations(n):
            beta_inv = invert(beta).images
            for psi in c2.elements:
                alpha = compose(compose(psi, beta), pinned_inv)
                if _maps_onto(alpha.images, beta_inv, sources, target):
                    return Isometry(alpha, beta, inv)
    return None


def stabilizer_bruteforce(code: Code, limit: int = MAX_STABILIZER_DEGREE) -> List[Isometry]:
    """
    All t ∈ Iso(n) with apply_to_code(t, C) = C, by a full scan of 2·(n!)² elements

    Returns:
        Sorted list of stabilizer elements (a subgroup of Iso(n))

    Raises:
        OracleLimitError: n above the cap
    """
    n = code.degree
    if n > limit:
        raise OracleLimitError("stabilizer_bruteforce", n, limit)

    target = _image_set(code)
    sources = {
        0: [phi.images for phi in code.elements],
        1: [invert(phi).images for phi in code.elements],
    }
    result = []
    for t in all_isometries(n):
        if _maps_onto(t.alpha.images, invert(t.beta).images, sources[t.inv], target):
            result.append(t)
    logger.debug("Brute-force stabilizer of a size-%d code: order %d", code.size, len(result))
    return sorted(result)


def classes_bruteforce(codes: List[Code], limit: int = MAX_ISOMETRY_DEGREE) -> List[List[Code]]:
    """
    Bucket codes into isometry classes by pairwise brute-force tests

    Used by the micro-census oracle; quadratic in the number of codes.
    """
    classes: List[List[Code]] = []
    for code in codes:
        for bucket in classes:
            if are_isometric_bruteforce(bucket[0], code, limit) is not None:
                bucket.append(code)
                break
        else:
            classes.append([code])
    return classes
