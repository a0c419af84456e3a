# coding=utf-8
"""
Quotient Set Module

The quotient-set pair (Δ(C), Σ(C)) with Δ = {φψ⁻¹} and Σ = {φ⁻¹ψ}, and its
equivalence: up to independent conjugation of each set, and up to swapping
the two sets (the inversion exchanges them).
"""

from collections import Counter, defaultdict
from dataclasses import dataclass
from itertools import permutations as _itertools_permutations
from typing import Dict, FrozenSet, Iterator, List, Optional, Tuple

from permcensus.core.code import Code
from permcensus.core.permutation import (
    Permutation,
    all_permutations,
    compose,
    cycle_lengths,
    invert,
)
from permcensus.utils.errors import InvalidParameterError


@dataclass(frozen=True)
class QuotientPair:
    """Pair of quotient sets of a code; both contain Id and are closed under inversion"""

    degree: int
    delta: FrozenSet[Permutation]
    sigma: FrozenSet[Permutation]


def quotient_pair(code: Code) -> QuotientPair:
    """
    Quotient sets over all ordered pairs of the code

    Examples:
        A singleton {φ} gives delta = sigma = {Id}.
    """
    inverses = [invert(phi) for phi in code.elements]
    delta = set()
    sigma = set()
    for phi, phi_inv in zip(code.elements, inverses):
        for psi, psi_inv in zip(code.elements, inverses):
            delta.add(compose(phi, psi_inv))
            sigma.add(compose(phi_inv, psi))
    return QuotientPair(code.degree, frozenset(delta), frozenset(sigma))


def conjugate_set(elements: FrozenSet[Permutation], alpha: Permutation) -> FrozenSet[Permutation]:
    """αSα⁻¹"""
    alpha_inv = invert(alpha)
    return frozenset(compose(compose(alpha, x), alpha_inv) for x in elements)


def type_signature(elements: FrozenSet[Permutation]) -> Tuple[Tuple[Tuple[int, ...], int], ...]:
    """Sorted cycle-type multiset of a set of permutations (a conjugation invariant)"""
    return tuple(sorted(Counter(cycle_lengths(x.images) for x in elements).items()))


def _cycles(images: Tuple[int, ...]) -> List[Tuple[int, ...]]:
    """Cycles of a 0-based image table, each starting at its smallest point"""
    n = len(images)
    seen = [False] * n
    cycles = []
    for start in range(n):
        if seen[start]:
            continue
        cycle = []
        x = start
        while not seen[x]:
            seen[x] = True
            cycle.append(x)
            x = images[x]
        cycles.append(tuple(cycle))
    return cycles


def _cycle_matchings(source: List[Tuple[int, ...]], target: List[Tuple[int, ...]]) -> Iterator[Tuple[int, ...]]:
    """
    All α with α·σ·α⁻¹ = τ, given the cycles of σ and τ (same cycle type)

    α sends each cycle (c0 .. c_{l-1}) of σ onto a cycle (e0 .. e_{l-1}) of τ
    of the same length with some rotation: α(c_i) = e_{(i+r) mod l}.
    """
    n = sum(len(c) for c in source)
    by_length_source: Dict[int, List[Tuple[int, ...]]] = defaultdict(list)
    by_length_target: Dict[int, List[Tuple[int, ...]]] = defaultdict(list)
    for c in source:
        by_length_source[len(c)].append(c)
    for c in target:
        by_length_target[len(c)].append(c)
    lengths = sorted(by_length_source)
    alpha = [0] * n

    def _assign(li: int) -> Iterator[Tuple[int, ...]]:
        if li == len(lengths):
            yield tuple(alpha)
            return
        length = lengths[li]
        sources = by_length_source[length]
        for order in _itertools_permutations(by_length_target[length]):
            yield from _rotate(li, length, sources, order, 0)

    def _rotate(li, length, sources, order, ci) -> Iterator[Tuple[int, ...]]:
        if ci == len(sources):
            yield from _assign(li + 1)
            return
        src, dst = sources[ci], order[ci]
        # fixed points have a single rotation
        for r in range(length):
            for i in range(length):
                alpha[src[i]] = dst[(i + r) % length]
            yield from _rotate(li, length, sources, order, ci + 1)

    yield from _assign(0)


def find_conjugator(source: FrozenSet[Permutation], target: FrozenSet[Permutation]) -> Optional[Permutation]:
    """
    Some α with αSα⁻¹ = T, or None

    A maximal-support element δ0 of S must land on an element of T of the
    same cycle type, so α ranges over the cycle matchings of δ0 onto each
    such element instead of all of Sym(n).
    """
    if len(source) != len(target):
        return None
    if type_signature(source) != type_signature(target):
        return None
    pivot = max(source, key=lambda x: (sum(1 for i, y in enumerate(x.images) if i != y), x.images))
    pivot_type = cycle_lengths(pivot.images)
    pivot_cycles = _cycles(pivot.images)
    for candidate in sorted(target):
        if cycle_lengths(candidate.images) != pivot_type:
            continue
        for images in _cycle_matchings(pivot_cycles, _cycles(candidate.images)):
            alpha = Permutation.trusted(images)
            if conjugate_set(source, alpha) == target:
                return alpha
    return None


def find_conjugator_bruteforce(source: FrozenSet[Permutation],
                               target: FrozenSet[Permutation], degree: int) -> Optional[Permutation]:
    """Full Sym(n) scan; the correctness oracle for find_conjugator"""
    for alpha in all_permutations(degree):
        if conjugate_set(source, alpha) == target:
            return alpha
    return None


def quotient_pairs_equivalent(p1: QuotientPair, p2: QuotientPair, bruteforce: bool = False) -> bool:
    """
    True iff ∃α,β: αΔα⁻¹=Δ' and βΣβ⁻¹=Σ', or the swapped variant αΔα⁻¹=Σ' and βΣβ⁻¹=Δ'

    Args:
        p1: First pair
        p2: Second pair
        bruteforce: Scan all of Sym(n) for conjugators

    Raises:
        InvalidParameterError: degree mismatch
    """
    if p1.degree != p2.degree:
        raise InvalidParameterError(f"Degree mismatch: {p1.degree} vs {p2.degree}")
    if bruteforce:
        def conj(s, t):
            return find_conjugator_bruteforce(s, t, p1.degree) is not None
    else:
        def conj(s, t):
            return find_conjugator(s, t) is not None

    if conj(p1.delta, p2.delta) and conj(p1.sigma, p2.sigma):
        return True
    return conj(p1.delta, p2.sigma) and conj(p1.sigma, p2.delta)


def quotient_signature(pair: QuotientPair) -> Tuple:
    """Hashable necessary condition for equivalence: the unordered pair of type signatures"""
    return tuple(sorted((type_signature(pair.delta), type_signature(pair.sigma))))
