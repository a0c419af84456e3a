# coding=utf-8
"""
Canonical Augmentation

Isomorph-free generation in which each class is produced exactly once:

* the children of C are C ∪ {φ}, one φ per Stab(C)-orbit of V_d(C);
* a child K is accepted iff φ lies in the Aut(K)-orbit of the canonically
  removed element, the row with the largest canonical label among rows.

Constraints: a size cap, an occurrence cap r (o_ij <= r) and a target size
reachable only while |C| + |candidates| >= target. Balanced codes are the
target-size classes under the occurrence cap.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from permcensus.canon.labeling import CanonicalForm, canonical_code, canonical_form
from permcensus.canon.stabilizer import stabilizer
from permcensus.core.code import Code
from permcensus.invariants.occurrence import occurrence_array
from permcensus.search.genbylist import Mapper, seed_code
from permcensus.search.result import ClassRecord, EnumerationResult, SearchBudget
from permcensus.search.space import SymmetricGroup, get_space, stabilizer_orbits
from permcensus.utils.errors import ResourceCapExceeded

logger = logging.getLogger(__name__)

EMIT_MAXIMAL = "maximal"
EMIT_ALL = "all"
EMIT_TARGET = "target"


@dataclass(frozen=True)
class AugmentOptions:
    """Per-run options shipped to workers"""

    inversion: bool = True
    max_size: Optional[int] = None
    occurrence_cap: Optional[int] = None
    target_size: Optional[int] = None
    emit: str = EMIT_MAXIMAL

    def emits(self, size: int, maximal: bool) -> bool:
        if self.emit == EMIT_ALL:
            return True
        if self.emit == EMIT_TARGET:
            return size == self.target_size
        return maximal


def occurrence_filter(space: SymmetricGroup, code: Code, indices: np.ndarray, cap: int) -> np.ndarray:
    """Extensions φ keeping every o_i,φ(i) <= cap"""
    if len(indices) == 0:
        return indices
    occ = occurrence_array(code)
    rows = space.table[indices].astype(np.int64)
    allowed = (occ[np.arange(code.degree)[None, :], rows] < cap).all(axis=1)
    return indices[allowed]


class _Augmenter:
    """Depth-first canonical augmentation over one subtree"""

    def __init__(self, n: int, options: AugmentOptions, budget: SearchBudget, cutoff: Optional[int] = None):
        self.space = get_space(n)
        self.options = options
        self.budget = budget
        self.cutoff = cutoff
        self.records: List[ClassRecord] = []
        self.frontier: List[Code] = []

    def visit(self, code: Code, form: CanonicalForm) -> None:
        if self.cutoff is not None and code.size == self.cutoff:
            self.frontier.append(code)
            return
        self.budget.tick(classes=len(self.records), depth=code.size)
        options = self.options
        extensions = self.space.extension_indices(code)
        maximal = len(extensions) == 0
        record = ClassRecord(form.certificate, code.size, maximal, form.group_size)
        if options.emits(code.size, maximal):
            record.code = canonical_code(code, form, options.inversion)
        self.records.append(record)
        for child, child_form in self.children(code, form, extensions):
            self.visit(child, child_form)

    def children(self, code: Code, form: CanonicalForm,
                 extensions: np.ndarray) -> List[Tuple[Code, CanonicalForm]]:
        options = self.options
        if options.max_size is not None and code.size >= options.max_size:
            return []
        candidates = extensions
        if options.occurrence_cap is not None:
            candidates = occurrence_filter(self.space, code, candidates, options.occurrence_cap)
        if options.target_size is not None and code.size + len(candidates) < options.target_size:
            return []
        if len(candidates) == 0:
            return []

        accepted = []
        generators = stabilizer(code, options.inversion, form)
        for orbit in stabilizer_orbits(self.space, generators, candidates):
            phi = self.space.permutation(int(orbit[0]))
            child = code.with_element(phi)
            child_form = canonical_form(child, options.inversion)
            orbits = child_form.vertex_orbits()
            if orbits.find(child.elements.index(phi)) == orbits.find(child_form.canonical_row):
                accepted.append((child, child_form))
        return accepted


def _subtree_task(task: Tuple[Code, AugmentOptions, int, float]):
    """Worker entry: augment below one frontier code"""
    code, options, max_nodes, max_seconds = task
    budget = SearchBudget(max_nodes, max_seconds)
    augmenter = _Augmenter(code.degree, options, budget)
    try:
        augmenter.visit(code, canonical_form(code, options.inversion))
    except ResourceCapExceeded as e:
        return None, budget.nodes, e.reason
    return augmenter.records, budget.nodes, None


def _run(n: int, d: int, options: AugmentOptions, parameters: dict, budget: Optional[SearchBudget],
         mapper: Optional[Mapper], split_depth: int) -> EnumerationResult:
    budget = budget or SearchBudget()
    seed = seed_code(n, d)
    records: List[ClassRecord] = []
    try:
        if mapper is None:
            augmenter = _Augmenter(n, options, budget)
            records = augmenter.records
            augmenter.visit(seed, canonical_form(seed, options.inversion))
        else:
            head = _Augmenter(n, options, budget, cutoff=max(split_depth, 1))
            records = head.records
            head.visit(seed, canonical_form(seed, options.inversion))
            logger.debug("Split at size %d: %d subtrees", split_depth, len(head.frontier))
            tasks = [(code, options, budget.max_nodes, budget.remaining_seconds()) for code in head.frontier]
            for sub_records, nodes, failure in mapper(_subtree_task, tasks):
                if failure is not None:
                    raise ResourceCapExceeded(f"worker stopped: {failure}", {"node_count": budget.nodes + nodes})
                records.extend(sub_records)
                budget.tick(nodes, classes=len(records))
    except ResourceCapExceeded as e:
        sizes = {}
        for record in records:
            sizes[record.size] = sizes.get(record.size, 0) + 1
        e.diagnostics.update({
            "classes_found": len(records),
            "partial_counts_by_size": {str(k): v for k, v in sorted(sizes.items())},
        })
        raise

    result = EnumerationResult.from_records(
        parameters, records, emit=lambda r: r.code is not None,
        wall_time=budget.elapsed, node_count=budget.nodes,
    )
    logger.info("canonical augmentation(%d,%d): %d classes visited, %d emitted",
                n, d, result.total_classes, len(result.codes))
    return result


def canonical_augmentation(n: int, d: int, inversion: bool = True, max_size: Optional[int] = None,
                           include_all: bool = False, budget: Optional[SearchBudget] = None,
                           mapper: Optional[Mapper] = None, split_depth: int = 3) -> EnumerationResult:
    """
    Enumerate the isometry classes of (n,d)-codes by canonical augmentation

    Args:
        n: Degree
        d: Minimum distance
        inversion: Count the inversion as an isometry
        max_size: Do not extend codes of this size
        include_all: Emit every class instead of the maximal ones
        budget: Node/time caps; one node per class
        mapper: Parallel map; subtrees below split_depth go to workers
        split_depth: Code size at which the tree is split

    Returns:
        EnumerationResult; counts cover every class, codes the emitted ones
    """
    options = AugmentOptions(inversion, max_size, emit=EMIT_ALL if include_all else EMIT_MAXIMAL)
    parameters = {"n": n, "d": d, "algorithm": "canaug", "inversion": inversion}
    if max_size is not None:
        parameters["max_size"] = max_size
    return _run(n, d, options, parameters, budget, mapper, split_depth)


def enumerate_balanced(n: int, d: int, r: int, inversion: bool = True, budget: Optional[SearchBudget] = None,
                       mapper: Optional[Mapper] = None, split_depth: int = 3) -> EnumerationResult:
    """
    Enumerate the isometry classes of r-balanced (n,d)-codes

    Partial codes with some o_ij > r are cut; the emitted classes are those
    of size n·r, all of which have every o_ij = r. counts_by_size covers
    every visited class with o_ij <= r.
    """
    target = n * r
    options = AugmentOptions(inversion, max_size=target, occurrence_cap=r,
                             target_size=target, emit=EMIT_TARGET)
    parameters = {"n": n, "d": d, "r": r, "algorithm": "canaug", "balanced": True, "inversion": inversion}
    return _run(n, d, options, parameters, budget, mapper, split_depth)
