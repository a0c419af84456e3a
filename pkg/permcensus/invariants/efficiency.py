# coding=utf-8
"""
Invariant Efficiency Module

Measures how well each non-complete invariant separates a list of pairwise
non-isometric codes: the number of distinct values per code size and the
groups of codes sharing a value (witnesses of non-completeness).
"""

import logging
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Hashable, List, Sequence

from permcensus.core.code import Code
from permcensus.invariants.cycle_index import cycle_index, distance_enumerator
from permcensus.invariants.occurrence import occurrence_matrix
from permcensus.invariants.quotients import (
    quotient_pair,
    quotient_pairs_equivalent,
    quotient_signature,
)

logger = logging.getLogger(__name__)

INVARIANTS = (
    "distance_enumerator",
    "cycle_index",
    "occurrence_multiset",
    "occurrence_set",
    "quotient_pair",
)


@dataclass
class InvariantStats:
    """Separation statistics of one invariant"""

    name: str
    classes: int = 0
    distinct_values: int = 0
    collisions: List[List[int]] = field(default_factory=list)

    @property
    def complete_on_input(self) -> bool:
        return not self.collisions

    def to_dict(self) -> Dict[str, Any]:
        return {
            "invariant": self.name,
            "classes": self.classes,
            "distinct_values": self.distinct_values,
            "colliding_groups": len(self.collisions),
            "largest_collision": max((len(g) for g in self.collisions), default=1),
        }


_KEYS: Dict[str, Callable[[Code], Hashable]] = {
    "distance_enumerator": lambda c: tuple(distance_enumerator(c)),
    "cycle_index": lambda c: cycle_index(c).counts,
    "occurrence_multiset": lambda c: occurrence_matrix(c).multiset(),
    "occurrence_set": lambda c: tuple(sorted(occurrence_matrix(c).value_set())),
    "quotient_pair": lambda c: quotient_signature(quotient_pair(c)),
}


def _group_by_key(codes: Sequence[Code], key: Callable[[Code], Hashable]) -> List[List[int]]:
    buckets: Dict[Hashable, List[int]] = defaultdict(list)
    for index, code in enumerate(codes):
        buckets[(code.size, key(code))].append(index)
    return list(buckets.values())


def _split_by_quotient_equivalence(codes: Sequence[Code], group: List[int]) -> List[List[int]]:
    """Refine a signature bucket into true quotient-pair equivalence classes"""
    pairs = {i: quotient_pair(codes[i]) for i in group}
    classes: List[List[int]] = []
    for i in group:
        for cls in classes:
            if quotient_pairs_equivalent(pairs[cls[0]], pairs[i]):
                cls.append(i)
                break
        else:
            classes.append([i])
    return classes


def invariant_efficiency(codes: Sequence[Code], names: Sequence[str] = INVARIANTS) -> List[InvariantStats]:
    """
    Separation statistics for each invariant over pairwise non-isometric codes

    Codes of different sizes are never compared. Indices in the collision
    groups refer to positions in codes.
    """
    report = []
    for name in names:
        groups = _group_by_key(codes, _KEYS[name])
        if name == "quotient_pair":
            groups = [cls for group in groups for cls in _split_by_quotient_equivalence(codes, group)]
        stats = InvariantStats(
            name=name,
            classes=len(codes),
            distinct_values=len(groups),
            collisions=sorted(sorted(g) for g in groups if len(g) > 1),
        )
        logger.info("%s: %d values over %d classes", name, stats.distinct_values, stats.classes)
        report.append(stats)
    return report
