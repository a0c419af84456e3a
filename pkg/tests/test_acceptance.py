# coding=utf-8
"""
Published census values

slow: minutes each. extended: hours, run with PERMCENSUS_EXTENDED=1.
"""

import pytest

from permcensus.canon import find_isometry
from permcensus.context import RunContext
from permcensus.core.config import RunConfig
from permcensus.invariants import cycle_index, invariant_efficiency
from permcensus.search import canonical_augmentation, enumerate_balanced, genbylist, kloeve65

MAXIMAL_54 = {7: 1, 8: 25, 9: 36, 10: 46, 11: 18, 12: 10, 13: 1, 15: 1, 20: 1}


@pytest.fixture(scope="module")
def census54():
    return canonical_augmentation(5, 4)


@pytest.mark.slow
def test_census_54(census54):
    assert census54.total_classes == 9445
    assert census54.total_maximal == 139
    assert census54.maximal_counts_by_size == MAXIMAL_54
    assert len(census54.codes) == 139


@pytest.mark.slow
def test_census_54_is_deterministic_across_workers(census54):
    run = RunConfig.from_config("enumerate", {}, n=5, d=4, jobs=4)
    with RunContext(run, show_progress=False) as ctx:
        parallel = canonical_augmentation(5, 4, budget=ctx.budget(), mapper=ctx.mapper())
    assert parallel.certificates == census54.certificates
    assert parallel.codes == census54.codes
    assert parallel.counts_by_size == census54.counts_by_size


@pytest.mark.slow
@pytest.mark.parametrize("n, d, r, expected", [
    (5, 4, 2, 6),
    (5, 4, 3, 1),
    (5, 4, 4, 1),
    (5, 3, 2, 218),
])
def test_balanced_counts(n, d, r, expected):
    result = enumerate_balanced(n, d, r)
    assert len(result.codes) == expected
    assert all(code.size == n * r for code in result.codes)


@pytest.mark.extended
def test_balanced_65():
    run = RunConfig.from_config("balanced", {}, n=6, d=5, r=2, jobs=4)
    with RunContext(run, show_progress=False) as ctx:
        result = enumerate_balanced(6, 5, 2, mapper=ctx.mapper())
    assert len(result.codes) == 2799


@pytest.mark.extended
def test_kloeve_slice():
    assert kloeve65().total_classes == 7


@pytest.fixture(scope="module")
def list54():
    return genbylist(5, 4)


@pytest.mark.slow
def test_generators_agree_on_54(list54):
    full = canonical_augmentation(5, 4, include_all=True)
    assert list54.total_classes == full.total_classes == 9445
    assert list54.certificate_set() == full.certificate_set()
    assert list54.counts_by_size == full.counts_by_size
    assert list54.maximal_counts_by_size == MAXIMAL_54


@pytest.mark.slow
def test_cycle_index_collisions_in_census_54(list54):
    stats = {s.name: s for s in invariant_efficiency(list54.codes)}
    collisions = stats["cycle_index"].collisions
    assert collisions
    first, second = (list54.codes[i] for i in collisions[0][:2])
    assert cycle_index(first) == cycle_index(second)
    assert find_isometry(first, second) is None
