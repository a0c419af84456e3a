# coding=utf-8
"""Colored graph encoding, canonical labeling and stabilizers"""

import dataclasses

import networkx as nx
import pytest

from conftest import cyclic_code, perm, random_code, random_isometry
from permcensus import CERTIFICATE_FORMAT_VERSION
from permcensus.canon import (
    build_graph,
    canonical_code,
    canonical_form,
    canonical_representative,
    find_isometry,
    reconstruct_code,
    stabilizer,
)
from permcensus.core.code import make_code
from permcensus.core.permutation import Permutation
from permcensus.group.isometry import Isometry, all_isometries, apply_to_code, isometry_closure
from permcensus.group.oracle import are_isometric_bruteforce, stabilizer_bruteforce
from permcensus.utils.errors import GraphStructureError, InvalidParameterError


def _same_colors(a, b):
    return a["color"] == b["color"]


def test_graph_shape():
    code = cyclic_code(4, 3)
    graph = build_graph(code)
    n, s = 4, code.size
    assert graph.vertex_count == s + n * n + 2 * n
    assert graph.edge_count == s * n + 2 * n * n
    assert [len(c) for c in graph.color_classes()] == [s, 2 * n, n * n]
    split = build_graph(code, inversion=False)
    assert [len(c) for c in split.color_classes()] == [s, n, n, n * n]


def test_reconstruct_round_trip(rng):
    for _ in range(20):
        code = random_code(rng, 5, 3, rng.randint(1, 9))
        assert reconstruct_code(build_graph(code)) == code
        assert reconstruct_code(build_graph(code, inversion=False)) == code


def test_reconstruct_after_relabel_is_isometric(rng):
    code = random_code(rng, 4, 2, 6)
    graph = build_graph(code)
    mapping = list(range(graph.vertex_count))
    rng.shuffle(mapping)
    decoded = reconstruct_code(graph.relabel(mapping))
    assert are_isometric_bruteforce(code, decoded) is not None


def test_reconstruct_rejects_damaged_graphs():
    graph = build_graph(cyclic_code(4, 3))
    with pytest.raises(GraphStructureError):
        reconstruct_code(dataclasses.replace(graph, colors=(0,) * graph.vertex_count))
    # drop one row-cell edge
    row_cell = next(iter(graph.adjacency[0]))
    adjacency = list(graph.adjacency)
    adjacency[0] = adjacency[0] - {row_cell}
    adjacency[row_cell] = adjacency[row_cell] - {0}
    with pytest.raises(GraphStructureError):
        reconstruct_code(dataclasses.replace(graph, adjacency=tuple(adjacency)))


def test_certificate_header():
    form = canonical_form(cyclic_code(4, 3))
    assert form.certificate[0] == CERTIFICATE_FORMAT_VERSION
    assert form.hex == form.certificate.hex()
    assert len(form.digest) == 64


def test_certificate_invariant_under_isometries(rng):
    for trial in range(60):
        n = 4 if trial % 3 else 5
        code = random_code(rng, n, rng.randint(2, n), rng.randint(1, 10))
        image = apply_to_code(random_isometry(rng, n), code)
        assert canonical_form(image).certificate == canonical_form(code).certificate


def test_certificate_agrees_with_bruteforce_on_random_pairs(rng):
    for _ in range(300):
        size = rng.randint(2, 6)
        c1 = random_code(rng, 4, 2, size)
        c2 = random_code(rng, 4, 2, size)
        if c1.size != c2.size:
            continue
        same = canonical_form(c1).certificate == canonical_form(c2).certificate
        assert same == (are_isometric_bruteforce(c1, c2) is not None)


def test_canonical_representative_is_stable(rng):
    code = random_code(rng, 5, 3, 7)
    form, rep = canonical_representative(code)
    image = apply_to_code(random_isometry(rng, 5), code)
    image_form, image_rep = canonical_representative(image)
    assert rep == image_rep
    assert canonical_code(image, image_form) == rep
    assert canonical_form(rep).certificate == form.certificate


def test_find_isometry_returns_witness(rng):
    for _ in range(20):
        code = random_code(rng, 5, 4, rng.randint(2, 8))
        image = apply_to_code(random_isometry(rng, 5), code)
        witness = find_isometry(code, image)
        assert witness is not None
        assert apply_to_code(witness, code) == image


def test_find_isometry_negative_and_guards():
    identity = Permutation.identity(4)
    near = make_code(2, [identity, perm(2, 1, 3, 4)])
    far = make_code(2, [identity, perm(2, 1, 4, 3)])
    assert find_isometry(near, far) is None
    assert find_isometry(near, cyclic_code(4, 2)) is None
    with pytest.raises(InvalidParameterError):
        find_isometry(near, make_code(3, [identity]))


def test_inversion_flag_splits_classes(rng):
    for _ in range(30):
        code = random_code(rng, 4, 2, rng.randint(2, 6))
        inverse = apply_to_code(Isometry.inversion(4), code)
        assert canonical_form(code).certificate == canonical_form(inverse).certificate
        plain = canonical_form(code, False).certificate == canonical_form(inverse, False).certificate
        assert plain == any(t.inv == 0 for t in _witnesses(code, inverse))


def _witnesses(c1, c2):
    return [t for t in all_isometries(c1.degree) if apply_to_code(t, c1) == c2]


def test_stabilizer_order_matches_bruteforce(rng):
    codes = [cyclic_code(4, 3), make_code(2, [Permutation.identity(3)]), make_code(2, [Permutation.identity(4)])]
    codes += [random_code(rng, 4, rng.randint(2, 4), rng.randint(1, 8)) for _ in range(15)]
    for code in codes:
        form = canonical_form(code)
        brute = stabilizer_bruteforce(code)
        assert form.group_size == len(brute)
        generators = stabilizer(code, form=form)
        assert all(apply_to_code(t, code) == code for t in generators)
        assert isometry_closure(generators, code.degree) == set(brute)
        assert (generators == []) == (form.group_size == 1)


def test_networkx_isomorphism_agrees(rng):
    for _ in range(15):
        c1 = random_code(rng, 4, 3, 4)
        c2 = apply_to_code(random_isometry(rng, 4), c1) if rng.random() < 0.5 else random_code(rng, 4, 3, 4)
        if c1.size != c2.size:
            continue
        g1 = build_graph(c1).to_networkx()
        g2 = build_graph(c2).to_networkx()
        same = canonical_form(c1).certificate == canonical_form(c2).certificate
        assert same == nx.is_isomorphic(g1, g2, node_match=_same_colors)
