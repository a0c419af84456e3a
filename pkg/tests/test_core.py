# coding=utf-8
"""Permutations, cycle types and the code container"""

from itertools import permutations as _itertools_permutations

import pytest

from conftest import cyclic_code, perm
from permcensus.core.code import format_code, make_code, parse_code, read_code_file, write_code_file
from permcensus.core.permutation import (
    CycleType,
    Permutation,
    all_permutations,
    compose,
    cycle_type,
    derangement_count,
    hamming_distance,
    invert,
    partitions,
)
from permcensus.utils.errors import CodeFormatError, DistanceViolationError, InvalidParameterError


def test_one_based_round_trip():
    phi = perm(2, 3, 1, 5, 4)
    assert phi.images == (1, 2, 0, 4, 3)
    assert phi.one_based() == [2, 3, 1, 5, 4]
    assert str(phi) == "2 3 1 5 4"


@pytest.mark.parametrize("images", [[1, 1, 2], [0, 1, 2], [1, 2, 4], [2, 1]])
def test_invalid_permutations_rejected(images):
    with pytest.raises(InvalidParameterError):
        Permutation.from_images(images)


def test_compose_applies_right_factor_first():
    assert compose(perm(2, 3, 1), perm(2, 1, 3)) == perm(3, 2, 1)


def test_inverse():
    for phi in all_permutations(4):
        assert compose(phi, invert(phi)).is_identity()
        assert compose(invert(phi), phi).is_identity()


def test_distance_one_never_occurs():
    perms = list(all_permutations(4))
    distances = {hamming_distance(a, b) for a in perms for b in perms}
    assert distances == {0, 2, 3, 4}


def test_distance_degree_mismatch():
    with pytest.raises(InvalidParameterError):
        hamming_distance(Permutation.identity(3), Permutation.identity(4))


def test_cycle_type():
    assert str(cycle_type(perm(2, 3, 1, 5, 4))) == "3+2"
    assert str(cycle_type(Permutation.identity(4))) == "1+1+1+1"
    parsed = CycleType.parse("3+1+1")
    assert parsed.moved_points == 3
    assert parsed.fixed_points == 2
    with pytest.raises(InvalidParameterError):
        CycleType.parse("1+3")


def test_derangement_numbers():
    assert [derangement_count(k) for k in range(8)] == [1, 0, 1, 2, 9, 44, 265, 1854]


def test_partitions_order():
    parts = partitions(5)
    assert len(parts) == 7
    assert parts[0].parts == (5,)
    assert parts[1].parts == (4, 1)
    assert parts[-1].parts == (1, 1, 1, 1, 1)


def test_all_permutations_lexicographic():
    listed = [p.images for p in all_permutations(4)]
    assert listed == list(_itertools_permutations(range(4)))


def test_make_code_sorts_and_deduplicates():
    code = make_code(2, [perm(2, 1, 3), Permutation.identity(3), perm(2, 1, 3)])
    assert code.size == 2
    assert code.elements[0].is_identity()


def test_make_code_reports_offending_pair():
    with pytest.raises(DistanceViolationError) as info:
        make_code(3, [Permutation.identity(4), perm(2, 1, 3, 4)])
    assert info.value.distance == 2
    assert info.value.min_distance == 3


def test_make_code_rejects_empty_and_bad_distance():
    with pytest.raises(InvalidParameterError):
        make_code(2, [])
    with pytest.raises(InvalidParameterError):
        make_code(5, [Permutation.identity(4)])


def test_cyclic_shifts_form_a_code():
    code = cyclic_code(4, 3)
    assert code.size == 4
    assert all(hamming_distance(a, b) == 4 for a in code for b in code if a != b)


def test_code_file_format(tmp_path):
    code = cyclic_code(5, 4)
    text = format_code(code, comments=["five shifts"])
    assert text.splitlines()[0] == "# five shifts"
    assert text.splitlines()[1] == "n=5 d=4 s=5"
    assert parse_code(text) == code

    path = write_code_file(tmp_path / "nested" / "c.code", code)
    assert read_code_file(path) == code


@pytest.mark.parametrize("text", [
    "n=3 d=2 s=2\n1 2 3\n",
    "n=3 d=2 s=1\n1 2\n",
    "d=2 s=1\n1 2 3\n",
    "n=3 d=2 s=1\n1 x 3\n",
    "n=3 d=2 s=2\n1 2 3\n1 2 3\n",
    "",
])
def test_malformed_code_files(text):
    with pytest.raises(CodeFormatError):
        parse_code(text)


def test_code_file_distance_violation():
    with pytest.raises(DistanceViolationError):
        parse_code("n=4 d=3 s=2\n1 2 3 4\n2 1 3 4\n")


def test_missing_code_file(tmp_path):
    with pytest.raises(CodeFormatError):
        read_code_file(tmp_path / "absent.code")


def test_unreadable_code_files(tmp_path):
    path = tmp_path / "latin1.code"
    path.write_bytes(b"n=3 d=2 s=1\n1 2 3 \xff\n")
    with pytest.raises(CodeFormatError):
        read_code_file(path)
    with pytest.raises(CodeFormatError):
        read_code_file(tmp_path)
