# coding=utf-8
"""
Permutation Algebra Module

Permutations of {1..n} with composition, inversion, Hamming distance,
cycle types and derangement numbers.

Images are stored 0-based; every constructor and every printed form is
1-based, so the shift never shows at an interface.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations as _itertools_permutations
from typing import Iterator, List, Sequence, Tuple

from permcensus.utils.errors import InvalidParameterError

MIN_DEGREE = 3
MAX_DEGREE = 16


@dataclass(frozen=True, order=True)
class Permutation:
    """
    Permutation of degree n given by its image table

    Ordering and equality follow the image sequence, so sorting a list of
    permutations sorts it lexicographically.
    """

    images: Tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if not MIN_DEGREE <= n <= MAX_DEGREE:
            raise InvalidParameterError(
                f"Permutation degree {n} outside supported range {MIN_DEGREE}..{MAX_DEGREE}"
            )
        if sorted(self.images) != list(range(n)):
            raise InvalidParameterError(
                f"Not a permutation of 1..{n}: {[i + 1 for i in self.images]}",
                suggestion="Each symbol 1..n must appear exactly once"
            )

    @classmethod
    def from_images(cls, images: Sequence[int]) -> "Permutation":
        """
        Build from 1-based images

        Examples:
            >>> Permutation.from_images([2, 3, 1]).one_based()
            [2, 3, 1]
        """
        return cls(tuple(int(i) - 1 for i in images))

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        """Identity permutation of degree n"""
        return cls(tuple(range(n)))

    @classmethod
    def trusted(cls, images: Tuple[int, ...]) -> "Permutation":
        """Wrap a 0-based image tuple already known to be a permutation (no validation)"""
        perm = object.__new__(cls)
        object.__setattr__(perm, "images", images)
        return perm

    @property
    def degree(self) -> int:
        return len(self.images)

    def one_based(self) -> List[int]:
        """1-based image list"""
        return [i + 1 for i in self.images]

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def __str__(self) -> str:
        return " ".join(str(i + 1) for i in self.images)

    def __repr__(self) -> str:
        return f"Permutation([{', '.join(str(i + 1) for i in self.images)}])"


@dataclass(frozen=True, order=True)
class CycleType:
    """Cycle type of a permutation: non-increasing cycle lengths summing to n (fixed points included)"""

    parts: Tuple[int, ...]

    def __post_init__(self):
        if not self.parts or any(p <= 0 for p in self.parts):
            raise InvalidParameterError(f"Cycle type parts must be positive: {self.parts}")
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise InvalidParameterError(f"Cycle type parts must be non-increasing: {self.parts}")

    @classmethod
    def parse(cls, text: str) -> "CycleType":
        """Parse the '3+2' form"""
        try:
            return cls(tuple(int(p) for p in text.split("+")))
        except ValueError:
            raise InvalidParameterError(f"Invalid cycle type '{text}'", suggestion="Example: 3+1+1")

    @property
    def degree(self) -> int:
        return sum(self.parts)

    @property
    def fixed_points(self) -> int:
        return self.parts.count(1)

    @property
    def moved_points(self) -> int:
        return self.degree - self.fixed_points

    def __str__(self) -> str:
        return "+".join(str(p) for p in self.parts)


def _check_degrees(phi: Permutation, psi: Permutation) -> None:
    if phi.degree != psi.degree:
        raise InvalidParameterError(
            f"Degree mismatch: {phi.degree} vs {psi.degree}",
            suggestion="Both permutations must act on the same set {1..n}"
        )


def compose(phi: Permutation, psi: Permutation) -> Permutation:
    """
    Composition φ∘ψ, i.e. result(i) = φ(ψ(i))

    Examples:
        >>> compose(Permutation.from_images([2, 3, 1]), Permutation.from_images([2, 1, 3])).one_based()
        [3, 2, 1]
    """
    _check_degrees(phi, psi)
    images = phi.images
    return Permutation.trusted(tuple(images[j] for j in psi.images))


def invert(phi: Permutation) -> Permutation:
    """Inverse permutation: invert(φ)(φ(i)) = i"""
    inverse = [0] * phi.degree
    for i, j in enumerate(phi.images):
        inverse[j] = i
    return Permutation.trusted(tuple(inverse))


def hamming_distance(phi: Permutation, psi: Permutation) -> int:
    """Number of points i with φ(i) ≠ ψ(i); never 1"""
    _check_degrees(phi, psi)
    return sum(1 for a, b in zip(phi.images, psi.images) if a != b)


def cycle_lengths(images: Sequence[int]) -> Tuple[int, ...]:
    """Non-increasing cycle lengths of a 0-based image table"""
    n = len(images)
    seen = [False] * n
    lengths = []
    for start in range(n):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = images[x]
            length += 1
        lengths.append(length)
    lengths.sort(reverse=True)
    return tuple(lengths)


def cycle_type(phi: Permutation) -> CycleType:
    """
    Cycle type of φ

    Examples:
        >>> str(cycle_type(Permutation.from_images([2, 3, 1, 5, 4])))
        '3+2'
    """
    return CycleType(cycle_lengths(phi.images))


def derangement_count(k: int) -> int:
    """
    Number D_k of fixed-point-free permutations of k points

    D_0 = 1, D_1 = 0, D_k = (k-1)(D_{k-1} + D_{k-2}).
    """
    if k < 0:
        raise InvalidParameterError(f"derangement_count needs k >= 0, got {k}")
    previous, current = 1, 0
    if k == 0:
        return previous
    for m in range(2, k + 1):
        previous, current = current, (m - 1) * (current + previous)
    return current


@lru_cache(maxsize=None)
def partitions(n: int) -> Tuple[CycleType, ...]:
    """
    All partitions of n in reverse-lexicographic order ([n] first, [1^n] last)

    This order is the fixed coordinate order of cycle index vectors.
    """
    result: List[CycleType] = []

    def _extend(remaining: int, largest: int, prefix: List[int]) -> None:
        if remaining == 0:
            result.append(CycleType(tuple(prefix)))
            return
        for part in range(min(remaining, largest), 0, -1):
            prefix.append(part)
            _extend(remaining - part, part, prefix)
            prefix.pop()

    _extend(n, n, [])
    return tuple(result)


def all_permutations(n: int) -> Iterator[Permutation]:
    """All n! permutations of degree n in lexicographic order"""
    for images in _itertools_permutations(range(n)):
        yield Permutation.trusted(images)
