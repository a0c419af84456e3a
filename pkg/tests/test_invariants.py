# coding=utf-8
"""Quotient sets, cycle index, occurrence matrix and their isometry invariance"""

import pytest

from conftest import cyclic_code, perm, random_code, random_isometry
from permcensus.canon import find_isometry
from permcensus.core.code import make_code
from permcensus.core.permutation import CycleType, Permutation, all_permutations
from permcensus.group.isometry import Isometry, apply_to_code
from permcensus.group.oracle import are_isometric_bruteforce
from permcensus.invariants import (
    cycle_index,
    distance_enumerator,
    find_conjugator,
    find_conjugator_bruteforce,
    invariant_efficiency,
    is_balanced,
    occurrence_matrix,
    quotient_pair,
    quotient_pairs_equivalent,
)
from permcensus.invariants.quotients import conjugate_set
from permcensus.utils.errors import InvalidParameterError


def test_quotient_sets_of_a_subgroup():
    code = cyclic_code(5, 4)
    pair = quotient_pair(code)
    assert pair.delta == frozenset(code.elements)
    assert pair.sigma == frozenset(code.elements)


def test_quotient_sets_of_a_singleton():
    pair = quotient_pair(make_code(2, [perm(2, 3, 1)]))
    assert pair.delta == pair.sigma == frozenset([Permutation.identity(3)])


def test_inversion_swaps_quotient_sets(rng):
    code = random_code(rng, 5, 3, 7)
    pair = quotient_pair(code)
    image = quotient_pair(apply_to_code(Isometry.inversion(5), code))
    assert image.delta == pair.sigma
    assert image.sigma == pair.delta


def test_conjugator_search_agrees_with_bruteforce(rng):
    for _ in range(20):
        source = quotient_pair(random_code(rng, 4, 2, 4)).delta
        alpha = Permutation(tuple(rng.sample(range(4), 4)))
        target = conjugate_set(source, alpha)
        found = find_conjugator(source, target)
        assert found is not None
        assert conjugate_set(source, found) == target
    # different cycle-type content
    source = frozenset([Permutation.identity(4), perm(2, 1, 3, 4)])
    target = frozenset([Permutation.identity(4), perm(2, 1, 4, 3)])
    assert find_conjugator(source, target) is None
    assert find_conjugator_bruteforce(source, target, 4) is None


def test_sym3_cycle_index():
    code = make_code(2, all_permutations(3))
    assert cycle_index(code).as_dict() == {"3": 12, "2+1": 18, "1+1+1": 6}
    assert cycle_index(code).count(CycleType((2, 1))) == 18


def test_distance_enumerator_of_cyclic_code():
    # 5 diagonal pairs at distance 0, 20 ordered pairs at distance 5
    assert distance_enumerator(cyclic_code(5, 4)) == [5, 0, 0, 0, 0, 20]


def test_distance_enumerator_is_projection_of_cycle_index(rng):
    for n in (4, 5):
        for _ in range(25):
            code = random_code(rng, n, 2, rng.randint(1, 12))
            assert cycle_index(code).distance_projection() == distance_enumerator(code)


def test_occurrence_matrix_and_balance():
    sym3 = make_code(2, all_permutations(3))
    assert occurrence_matrix(sym3).value_set() == frozenset([2])
    assert is_balanced(sym3, 2)
    assert not is_balanced(sym3, 1)

    cyclic = cyclic_code(5, 4)
    assert occurrence_matrix(cyclic).multiset() == (1,) * 25
    assert is_balanced(cyclic, 1)

    uneven = make_code(2, [Permutation.identity(3), perm(2, 1, 3), perm(1, 3, 2)])
    assert not is_balanced(uneven, 1)
    with pytest.raises(InvalidParameterError):
        is_balanced(cyclic, 0)


def test_invariants_preserved_by_isometries(rng):
    for trial in range(1000):
        n = 4 if trial % 2 else 5
        code = random_code(rng, n, rng.randint(2, n), rng.randint(1, 8))
        image = apply_to_code(random_isometry(rng, n), code)
        assert cycle_index(image) == cycle_index(code)
        assert distance_enumerator(image) == distance_enumerator(code)
        assert occurrence_matrix(image).multiset() == occurrence_matrix(code).multiset()
        if trial % 10 == 0:
            assert quotient_pairs_equivalent(quotient_pair(code), quotient_pair(image))


def test_quotient_equivalence_degree_mismatch():
    with pytest.raises(InvalidParameterError):
        quotient_pairs_equivalent(quotient_pair(cyclic_code(4, 3)), quotient_pair(cyclic_code(5, 4)))


def test_efficiency_report_counts_collisions():
    identity = Permutation.identity(4)
    codes = [
        make_code(2, [identity, perm(2, 1, 3, 4)]),
        make_code(2, [identity, perm(2, 3, 1, 4)]),
        make_code(2, [identity, perm(2, 1, 4, 3)]),
        make_code(2, [identity, perm(2, 3, 4, 1)]),
    ]
    stats = {s.name: s for s in invariant_efficiency(codes)}
    # distances 2, 3, 4, 4: the two distance-4 codes collide
    assert stats["distance_enumerator"].distinct_values == 3
    assert stats["distance_enumerator"].collisions == [[2, 3]]
    assert stats["cycle_index"].complete_on_input
    assert stats["quotient_pair"].distinct_values == 4
    assert stats["occurrence_multiset"].distinct_values == 3
    assert stats["occurrence_set"].distinct_values == 2


def test_cycle_index_is_not_complete():
    # three pairwise 5-cycle quotients each; only the first lies in a cyclic group
    identity = Permutation.identity(5)
    cyclic = make_code(4, [identity, perm(2, 3, 4, 5, 1), perm(3, 4, 5, 1, 2)])
    spread = make_code(4, [identity, perm(2, 3, 4, 5, 1), perm(3, 1, 5, 2, 4)])
    assert cycle_index(cyclic) == cycle_index(spread)
    assert cycle_index(cyclic).as_dict() == {"5": 6, "1+1+1+1+1": 3}
    assert distance_enumerator(cyclic) == distance_enumerator(spread)
    assert not quotient_pairs_equivalent(quotient_pair(cyclic), quotient_pair(spread))
    assert find_isometry(cyclic, spread) is None
    assert are_isometric_bruteforce(cyclic, spread) is None
