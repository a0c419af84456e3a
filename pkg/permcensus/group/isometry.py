# coding=utf-8
"""
Isometry Group Module

Elements of Iso(n) = (L x R) ⋊ I acting on Sym(n).

Convention: the isometry (α, β, k) maps φ to α·ι^k(φ)·β⁻¹, the inversion ι
being applied first. Hence l_α = (α, Id, 0), r_β = (Id, β, 0) and
ι = (Id, Id, 1). Composition follows the wreath-product rule

    (α1, β1, 0)(α2, β2, k2) = (α1α2, β1β2, k2)
    (α1, β1, 1)(α2, β2, k2) = (α1β2, β1α2, 1-k2)
"""

import re
from collections import deque
from dataclasses import dataclass
from itertools import product
from math import factorial
from typing import Iterable, Iterator, List, Set

from permcensus.core.code import Code
from permcensus.core.permutation import (
    MIN_DEGREE,
    Permutation,
    all_permutations,
    compose,
    invert,
)
from permcensus.utils.errors import InvalidParameterError

_TEXT_RE = re.compile(r"^alpha=([\d ]+);\s*beta=([\d ]+);\s*inv=([01])$")


@dataclass(frozen=True, order=True)
class Isometry:
    """Isometry φ ↦ α·ι^k(φ)·β⁻¹ of (Sym(n), d_H); the triple is unique for n >= 3"""

    alpha: Permutation
    beta: Permutation
    inv: int = 0

    def __post_init__(self):
        if self.alpha.degree != self.beta.degree:
            raise InvalidParameterError(
                f"Isometry factors of different degree: {self.alpha.degree} vs {self.beta.degree}"
            )
        if self.inv not in (0, 1):
            raise InvalidParameterError(f"Inversion bit must be 0 or 1, got {self.inv}")

    @classmethod
    def identity(cls, n: int) -> "Isometry":
        ident = Permutation.identity(n)
        return cls(ident, ident, 0)

    @classmethod
    def left(cls, alpha: Permutation) -> "Isometry":
        """l_α : φ ↦ αφ"""
        return cls(alpha, Permutation.identity(alpha.degree), 0)

    @classmethod
    def right(cls, beta: Permutation) -> "Isometry":
        """r_β : φ ↦ φβ⁻¹"""
        return cls(Permutation.identity(beta.degree), beta, 0)

    @classmethod
    def inversion(cls, n: int) -> "Isometry":
        """ι : φ ↦ φ⁻¹"""
        ident = Permutation.identity(n)
        return cls(ident, ident, 1)

    @classmethod
    def parse(cls, text: str) -> "Isometry":
        """Parse the 'alpha=<images>; beta=<images>; inv=<0|1>' form"""
        match = _TEXT_RE.match(text.strip())
        if not match:
            raise InvalidParameterError(
                f"Invalid isometry '{text}'",
                suggestion="Expected: alpha=2 1 3; beta=1 2 3; inv=0"
            )
        alpha = Permutation.from_images([int(x) for x in match.group(1).split()])
        beta = Permutation.from_images([int(x) for x in match.group(2).split()])
        return cls(alpha, beta, int(match.group(3)))

    @property
    def degree(self) -> int:
        return self.alpha.degree

    def is_identity(self) -> bool:
        return self.inv == 0 and self.alpha.is_identity() and self.beta.is_identity()

    def __str__(self) -> str:
        return f"alpha={self.alpha}; beta={self.beta}; inv={self.inv}"


def apply(t: Isometry, phi: Permutation) -> Permutation:
    """
    Image of φ under t: α∘φ∘β⁻¹ when k=0, α∘φ⁻¹∘β⁻¹ when k=1

    Raises:
        InvalidParameterError: degree mismatch
    """
    if t.degree != phi.degree:
        raise InvalidParameterError(f"Degree mismatch: isometry on {t.degree} points, permutation on {phi.degree}")
    source = invert(phi) if t.inv else phi
    return compose(compose(t.alpha, source), invert(t.beta))


def compose_isometries(t1: Isometry, t2: Isometry) -> Isometry:
    """Isometry t with apply(t, φ) = apply(t1, apply(t2, φ))"""
    if t1.degree != t2.degree:
        raise InvalidParameterError(f"Degree mismatch: {t1.degree} vs {t2.degree}")
    if t1.inv == 0:
        return Isometry(compose(t1.alpha, t2.alpha), compose(t1.beta, t2.beta), t2.inv)
    return Isometry(compose(t1.alpha, t2.beta), compose(t1.beta, t2.alpha), 1 - t2.inv)


def invert_isometry(t: Isometry) -> Isometry:
    """Group inverse: (α⁻¹, β⁻¹, 0) for k=0 and (β⁻¹, α⁻¹, 1) for k=1"""
    if t.inv == 0:
        return Isometry(invert(t.alpha), invert(t.beta), 0)
    return Isometry(invert(t.beta), invert(t.alpha), 1)


def apply_to_code(t: Isometry, code: Code) -> Code:
    """
    Elementwise image of a code, re-sorted

    Isometries preserve distances, so the result is an (n,d)-code of equal size.
    """
    if t.degree != code.degree:
        raise InvalidParameterError(f"Degree mismatch: isometry on {t.degree} points, code on {code.degree}")
    alpha = t.alpha.images
    beta_inv = invert(t.beta).images
    images = []
    for phi in code.elements:
        source = invert(phi).images if t.inv else phi.images
        images.append(Permutation.trusted(tuple(alpha[source[b]] for b in beta_inv)))
    return Code(code.degree, code.min_distance, tuple(sorted(images)))


def iso_group_order(n: int) -> int:
    """
    |Iso(n)| = 2·(n!)²

    Raises:
        InvalidParameterError: n < 3, where the isometry group is not (L x R) ⋊ I
    """
    if n < MIN_DEGREE:
        raise InvalidParameterError(f"The isometry group description requires n >= {MIN_DEGREE}, got {n}")
    return 2 * factorial(n) ** 2


def all_isometries(n: int) -> Iterator[Isometry]:
    """All 2·(n!)² isometries, ordered by (k, α, β)"""
    perms = list(all_permutations(n))
    for inv, alpha, beta in product((0, 1), perms, perms):
        yield Isometry(alpha, beta, inv)


def isometry_closure(generators: Iterable[Isometry], n: int) -> Set[Isometry]:
    """Subgroup of Iso(n) generated by the given isometries (breadth-first closure)"""
    gens: List[Isometry] = list(generators)
    identity = Isometry.identity(n)
    group = {identity}
    queue = deque([identity])
    while queue:
        current = queue.popleft()
        for g in gens:
            product_element = compose_isometries(g, current)
            if product_element not in group:
                group.add(product_element)
                queue.append(product_element)
    return group
