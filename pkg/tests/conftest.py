# coding=utf-8
"""Shared fixtures and markers for the permcensus test suite"""

import os
import random
from itertools import combinations
from typing import List

import pytest

from permcensus.core.code import Code, make_code
from permcensus.core.permutation import Permutation, all_permutations, hamming_distance
from permcensus.group.isometry import Isometry, all_isometries

EXTENDED_ENV = "PERMCENSUS_EXTENDED"


def pytest_collection_modifyitems(config, items):
    if os.environ.get(EXTENDED_ENV) == "1":
        return
    skip = pytest.mark.skip(reason=f"extended run (hours); set {EXTENDED_ENV}=1")
    for item in items:
        if "extended" in item.keywords:
            item.add_marker(skip)


def perm(*images: int) -> Permutation:
    """1-based shorthand"""
    return Permutation.from_images(images)


def cyclic_code(n: int, d: int) -> Code:
    """The n cyclic shifts of Id; pairwise distance n"""
    return make_code(d, [Permutation(tuple((i + k) % n for i in range(n))) for k in range(n)])


def random_code(rng: random.Random, n: int, d: int, size: int) -> Code:
    """Greedy random (n,d)-code with at most `size` elements"""
    pool = list(all_permutations(n))
    rng.shuffle(pool)
    chosen: List[Permutation] = []
    for phi in pool:
        if all(hamming_distance(phi, psi) >= d for psi in chosen):
            chosen.append(phi)
            if len(chosen) == size:
                break
    return make_code(d, chosen)


def random_isometry(rng: random.Random, n: int) -> Isometry:
    alpha = list(range(n))
    beta = list(range(n))
    rng.shuffle(alpha)
    rng.shuffle(beta)
    return Isometry(Permutation(tuple(alpha)), Permutation(tuple(beta)), rng.randint(0, 1))


def all_subset_codes(n: int, d: int) -> List[Code]:
    """Every non-empty (n,d)-code, by subset enumeration of Sym(n) (n = 3 only)"""
    perms = list(all_permutations(n))
    codes = []
    for size in range(1, len(perms) + 1):
        for subset in combinations(perms, size):
            if all(hamming_distance(a, b) >= d for a, b in combinations(subset, 2)):
                codes.append(make_code(d, subset))
    return codes


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240611)


@pytest.fixture(scope="session")
def isometries3() -> List[Isometry]:
    return list(all_isometries(3))
