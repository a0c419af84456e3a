# coding=utf-8
"""Neighbourhoods, clique search, isomorph-free generation and slices"""

import random
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations

import networkx as nx
import numpy as np
import pytest

from conftest import all_subset_codes, perm
from permcensus.core.code import make_code
from permcensus.core.permutation import Permutation, all_permutations, compose, hamming_distance, invert
from permcensus.group.oracle import are_isometric_bruteforce, classes_bruteforce
from permcensus.invariants import cycle_index, distance_enumerator
from permcensus.search import (
    CertificateRegistry,
    SearchBudget,
    build_orbit_graph,
    canonical_augmentation,
    enumerate_balanced,
    enumerate_cliques,
    generate_group,
    genbylist,
    get_space,
    is_maximal,
    max_clique,
    max_code,
    max_code_size,
    neighborhood_size,
    orbit_clique_search,
    slice_census,
    slice_types,
    vd_set,
)
from permcensus.search.clique import masks_from_matrix
from permcensus.utils.errors import EmptyResultError, InvalidParameterError, ResourceCapExceeded


@pytest.fixture(scope="module")
def census43():
    return genbylist(4, 3)


def _bruteforce_counts(n, d):
    counts, maximal = {}, {}
    for bucket in classes_bruteforce(all_subset_codes(n, d)):
        size = bucket[0].size
        counts[size] = counts.get(size, 0) + 1
        if is_maximal(bucket[0]):
            maximal[size] = maximal.get(size, 0) + 1
    return counts, maximal


def test_vd_set_of_identity():
    assert len(vd_set(make_code(4, [Permutation.identity(5)]))) == 89
    assert len(vd_set(make_code(3, [Permutation.identity(4)]))) == 17


def test_neighbourhood_formula():
    assert neighborhood_size(2, 2) == 1
    for n in range(3, 7):
        for d in range(2, n + 1):
            assert len(vd_set(make_code(d, [Permutation.identity(n)]))) == neighborhood_size(n, d)
    with pytest.raises(InvalidParameterError):
        neighborhood_size(4, 1)


def test_vd_set_is_lexicographic():
    code = make_code(3, [Permutation.identity(4), perm(2, 3, 4, 1)])
    listed = vd_set(code)
    assert [p.images for p in listed] == sorted(p.images for p in listed)


def test_maximum_code_sizes():
    assert max_code_size(4, 3) == 12
    assert max_code_size(4, 4) == 4
    assert max_code_size(5, 4) == 20
    assert max_code_size(3, 2) == 6
    code = max_code(4, 3)
    assert code.elements[0].is_identity()
    assert is_maximal(code)


def test_max_clique_against_networkx():
    rng = random.Random(7)
    for _ in range(20):
        m = rng.randint(5, 25)
        graph = nx.gnp_random_graph(m, 0.5, seed=rng.randint(0, 10**6))
        matrix = nx.to_numpy_array(graph, dtype=bool)
        members, weight = max_clique(masks_from_matrix(matrix))
        assert weight == max(len(c) for c in nx.find_cliques(graph))
        assert all(graph.has_edge(a, b) for a, b in combinations(members, 2))


def test_weighted_max_clique():
    # path 0-1-2: the heavy end wins
    masks = [0b010, 0b101, 0b010]
    assert max_clique(masks, weights=[1, 1, 5]) == ([1, 2], 6)
    assert max_clique([], weights=[]) == ([], 0)


def test_enumerate_cliques_counts():
    graph = nx.complete_graph(5)
    masks = masks_from_matrix(nx.to_numpy_array(graph, dtype=bool))
    assert len(list(enumerate_cliques(masks, 3))) == 10
    assert list(enumerate_cliques(masks, 0)) == [[]]


def test_far_matrix_symmetric_without_loops():
    far = get_space(4).far(3)
    assert far.shape == (24, 24)
    assert not far.diagonal().any()
    assert np.array_equal(far, far.T)


def test_census_43(census43):
    assert census43.total_classes == 61
    assert census43.total_maximal == 4
    assert census43.largest_size == 12


def test_generators_agree_on_43(census43):
    canaug = canonical_augmentation(4, 3, include_all=True)
    assert canaug.counts_by_size == census43.counts_by_size
    assert canaug.maximal_counts_by_size == census43.maximal_counts_by_size
    assert canaug.certificate_set() == census43.certificate_set()
    unpruned = genbylist(4, 3, child_pruning=False)
    assert unpruned.certificate_set() == census43.certificate_set()


def test_default_augmentation_emits_maximal_classes(census43):
    result = canonical_augmentation(4, 3)
    assert len(result.codes) == 4
    assert all(result.maximal_flags)
    assert result.total_classes == 61


@pytest.mark.parametrize("d", [2, 3])
def test_micro_census_matches_subset_enumeration(d):
    counts, maximal = _bruteforce_counts(3, d)
    for result in (genbylist(3, d), canonical_augmentation(3, d, include_all=True)):
        assert result.counts_by_size == dict(sorted(counts.items()))
        assert result.maximal_counts_by_size == dict(sorted(maximal.items()))


def test_representatives_of_43_are_pairwise_non_isometric(census43):
    by_size = {}
    for code in census43.codes:
        by_size.setdefault(code.size, []).append(code)
    for codes in by_size.values():
        for c1, c2 in combinations(codes, 2):
            assert are_isometric_bruteforce(c1, c2) is None


@pytest.mark.parametrize("n", [3, 4])
def test_maximal_latin_codes_are_full(n):
    result = canonical_augmentation(n, n)
    assert result.codes
    assert all(code.size == n for code in result.codes)


def test_max_size_stops_extension():
    result = genbylist(4, 3, max_size=3)
    assert result.largest_size == 3
    assert result.parameters["max_size"] == 3


def test_balanced_small():
    result = enumerate_balanced(4, 3, 1)
    assert result.codes
    assert all(code.size == 4 for code in result.codes)
    assert result.parameters["balanced"] is True


def test_budget_cap_reports_partial_counts():
    with pytest.raises(ResourceCapExceeded) as info:
        genbylist(5, 4, budget=SearchBudget(max_nodes=10))
    assert info.value.diagnostics["classes_found"] >= 1
    assert "partial_counts_by_size" in info.value.diagnostics
    with pytest.raises(ResourceCapExceeded):
        canonical_augmentation(5, 4, budget=SearchBudget(max_nodes=10))


def test_parallel_augmentation_is_deterministic():
    with ProcessPoolExecutor(max_workers=2) as pool:
        parallel = canonical_augmentation(4, 3, include_all=True, mapper=lambda fn, items: list(pool.map(fn, items)))
    serial = canonical_augmentation(4, 3, include_all=True)
    assert parallel.certificates == serial.certificates
    assert parallel.codes == serial.codes


def test_registry_insert_if_absent():
    registry = CertificateRegistry()
    assert registry.insert_if_absent(b"\x02", "b")
    assert registry.insert_if_absent(b"\x01", "a")
    assert not registry.insert_if_absent(b"\x01", "c")
    assert len(registry) == 2
    assert b"\x01" in registry
    assert registry.get(b"\x01") == "a"
    assert registry.values() == ["a", "b"]


def test_orbit_search_cyclic_left():
    code = orbit_clique_search(5, 4, [perm(2, 3, 4, 5, 1)], mode="left")
    assert code.size == 20


def test_orbit_graph_counts():
    graph = build_orbit_graph(5, 4, [perm(2, 3, 4, 5, 1)], mode="left")
    assert graph.group_order == 5
    assert len(graph.orbits) == 24
    assert len(graph.admissible_indices()) == 24


def test_orbit_search_without_admissible_orbit():
    with pytest.raises(EmptyResultError):
        orbit_clique_search(4, 3, [perm(2, 1, 3, 4)], mode="left")


def test_generate_group():
    assert len(generate_group([perm(2, 3, 1), perm(2, 1, 3)], 3)) == 6
    assert len(generate_group([], 4)) == 1
    with pytest.raises(InvalidParameterError):
        generate_group([perm(2, 1, 3)], 4)


def test_slices_match_census(census43):
    for size, count in census43.counts_by_size.items():
        assert slice_census(4, 3, size).total_classes == count
    assert slice_census(4, 3, 13).total_classes == 0
    with pytest.raises(InvalidParameterError):
        slice_census(4, 3, 0)


def test_slice_without_inversion_matches_census():
    census = genbylist(4, 3, inversion=False)
    for size in (2, 3, 6):
        assert slice_census(4, 3, size, inversion=False).total_classes == census.counts_by_size[size]


def test_slice_types():
    assert [name for name, _ in slice_types(4, 3)] == ["4", "3+1", "2+2"]


def test_parallel_genbylist_matches_serial(census43):
    with ProcessPoolExecutor(max_workers=2) as pool:
        parallel = genbylist(4, 3, mapper=lambda fn, items: list(pool.map(fn, items)))
    assert parallel.certificates == census43.certificates
    assert parallel.codes == census43.codes
    assert parallel.counts_by_size == census43.counts_by_size
    assert parallel.maximal_flags == census43.maximal_flags


def test_distance_enumerator_is_projection_over_census(census43):
    for code in census43.codes:
        assert cycle_index(code).distance_projection() == distance_enumerator(code)


def _conjugation_orbits(n, generator):
    seen, orbits = set(), []
    for phi in all_permutations(n):
        if phi in seen:
            continue
        orbit, frontier = {phi}, [phi]
        while frontier:
            image = compose(compose(generator, frontier.pop()), invert(generator))
            if image not in orbit:
                orbit.add(image)
                frontier.append(image)
        seen |= orbit
        orbits.append(sorted(orbit))
    return orbits


def test_orbit_search_conjugation_against_subset_scan():
    n, d, generator = 4, 3, perm(2, 3, 4, 1)
    orbits = _conjugation_orbits(n, generator)

    def spread(block_a, block_b):
        return all(phi == psi or hamming_distance(phi, psi) >= d for phi in block_a for psi in block_b)

    admissible = [o for o in orbits if spread(o, o)]
    best = 0
    for k in range(1, len(admissible) + 1):
        for chosen in combinations(admissible, k):
            if all(spread(a, b) for a, b in combinations(chosen, 2)):
                best = max(best, sum(len(o) for o in chosen))

    graph = build_orbit_graph(n, d, [generator], mode="conjugation")
    assert graph.group_order == 4
    assert sorted(len(o) for o in graph.orbits) == sorted(len(o) for o in orbits)
    assert len({len(o) for o in graph.orbits}) > 1
    assert len(graph.admissible_indices()) == len(admissible)

    code = orbit_clique_search(n, d, [generator], mode="conjugation")
    assert code.size == best
    for phi in code.elements:
        assert compose(compose(generator, phi), invert(generator)) in code
    weighted = nx.max_weight_clique(graph.to_networkx(), weight="weight")[1]
    assert weighted == best
