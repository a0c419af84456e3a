# coding=utf-8
"""Isometry group laws and the brute-force oracles"""

import pytest

from conftest import cyclic_code, perm, random_code, random_isometry
from permcensus.core.code import make_code
from permcensus.core.permutation import Permutation, all_permutations, hamming_distance
from permcensus.group.isometry import (
    Isometry,
    all_isometries,
    apply,
    apply_to_code,
    compose_isometries,
    invert_isometry,
    iso_group_order,
    isometry_closure,
)
from permcensus.group.oracle import are_isometric_bruteforce, classes_bruteforce, stabilizer_bruteforce
from permcensus.utils.errors import InvalidParameterError, OracleLimitError


def test_group_order_formula():
    assert iso_group_order(3) == 72
    assert iso_group_order(5) == 28800
    with pytest.raises(InvalidParameterError):
        iso_group_order(2)


def test_closure_of_generators_has_full_order():
    generators = [
        Isometry.left(perm(2, 1, 3)),
        Isometry.left(perm(2, 3, 1)),
        Isometry.right(perm(2, 1, 3)),
        Isometry.right(perm(2, 3, 1)),
        Isometry.inversion(3),
    ]
    group = isometry_closure(generators, 3)
    assert len(group) == 72
    assert group == set(all_isometries(3))


def test_action_law_exhaustive_degree_three(isometries3):
    perms = list(all_permutations(3))
    for t1 in isometries3:
        for t2 in isometries3:
            product = compose_isometries(t1, t2)
            for phi in perms:
                assert apply(product, phi) == apply(t1, apply(t2, phi))


def test_action_law_degree_four(rng):
    perms = list(all_permutations(4))
    for _ in range(400):
        t1, t2 = random_isometry(rng, 4), random_isometry(rng, 4)
        product = compose_isometries(t1, t2)
        for phi in perms:
            assert apply(product, phi) == apply(t1, apply(t2, phi))


def test_inverse_law_exhaustive():
    for n in (3, 4):
        for t in all_isometries(n):
            assert compose_isometries(t, invert_isometry(t)).is_identity()
            assert compose_isometries(invert_isometry(t), t).is_identity()


def test_isometries_are_injective_and_preserve_distance(rng):
    perms = list(all_permutations(4))
    for _ in range(50):
        t = random_isometry(rng, 4)
        images = [apply(t, phi) for phi in perms]
        assert len(set(images)) == len(perms)
        for _ in range(20):
            a, b = rng.sample(range(len(perms)), 2)
            assert hamming_distance(images[a], images[b]) == hamming_distance(perms[a], perms[b])


def test_named_isometries():
    phi = perm(2, 3, 1, 4)
    alpha = perm(4, 1, 2, 3)
    assert apply(Isometry.inversion(4), phi) == perm(3, 1, 2, 4)
    assert apply(Isometry.left(alpha), Permutation.identity(4)) == alpha
    assert apply(Isometry.right(alpha), Permutation.identity(4)) == perm(2, 3, 4, 1)


def test_text_form():
    t = Isometry(perm(2, 1, 3), perm(1, 3, 2), 1)
    assert str(t) == "alpha=2 1 3; beta=1 3 2; inv=1"
    assert Isometry.parse(str(t)) == t
    with pytest.raises(InvalidParameterError):
        Isometry.parse("alpha=1 2 3; beta=1 2 3")


def test_apply_to_code_keeps_parameters(rng):
    code = random_code(rng, 5, 3, 8)
    image = apply_to_code(random_isometry(rng, 5), code)
    assert (image.degree, image.min_distance, image.size) == (5, 3, code.size)
    assert make_code(3, image.elements) == image


def test_stabilizer_of_identity_singleton():
    stab = stabilizer_bruteforce(make_code(2, [Permutation.identity(3)]))
    # α = β, either inversion bit
    assert len(stab) == 12
    assert all(t.alpha == t.beta for t in stab)


def test_bruteforce_finds_witness(rng):
    for _ in range(10):
        code = random_code(rng, 4, 3, 5)
        image = apply_to_code(random_isometry(rng, 4), code)
        witness = are_isometric_bruteforce(code, image)
        assert witness is not None
        assert apply_to_code(witness, code) == image


def test_bruteforce_negative_and_guards():
    identity = Permutation.identity(4)
    small = make_code(2, [identity, perm(2, 1, 3, 4)])
    far = make_code(2, [identity, perm(2, 1, 4, 3)])
    assert are_isometric_bruteforce(small, far) is None
    assert are_isometric_bruteforce(small, cyclic_code(4, 2)) is None
    with pytest.raises(InvalidParameterError):
        are_isometric_bruteforce(small, make_code(3, [identity]))
    with pytest.raises(OracleLimitError):
        are_isometric_bruteforce(cyclic_code(6, 5), cyclic_code(6, 5))
    with pytest.raises(OracleLimitError):
        stabilizer_bruteforce(cyclic_code(5, 4))


def test_classes_bruteforce_buckets():
    identity = Permutation.identity(3)
    codes = [
        make_code(2, [identity, perm(2, 1, 3)]),
        make_code(2, [identity, perm(1, 3, 2)]),
        make_code(2, [identity, perm(2, 3, 1)]),
    ]
    assert sorted(len(bucket) for bucket in classes_bruteforce(codes)) == [1, 2]
