# coding=utf-8
"""
List-based Generation

Depth-first extension from the seed {Id}; every visited code is looked up
in the certificate registry and expanded only when its class is new. One
seed suffices because Iso(n) is transitive on Sym(n).
"""

import logging
from dataclasses import dataclass
from typing import Callable, List, Optional, Tuple

from permcensus.canon.labeling import CanonicalForm, canonical_code, canonical_form
from permcensus.canon.stabilizer import stabilizer
from permcensus.core.code import Code
from permcensus.core.permutation import Permutation
from permcensus.search.registry import CertificateRegistry
from permcensus.search.result import ClassRecord, EnumerationResult, SearchBudget
from permcensus.search.space import get_space, stabilizer_orbits
from permcensus.utils.errors import ResourceCapExceeded

logger = logging.getLogger(__name__)

Mapper = Callable[[Callable, List], List]


@dataclass(frozen=True)
class ExpansionOptions:
    """Per-run options shipped to workers"""

    inversion: bool = True
    child_pruning: bool = True
    max_size: Optional[int] = None


def seed_code(n: int, d: int) -> Code:
    return Code(n, d, (Permutation.identity(n),))


def expand_code(code: Code, form: CanonicalForm, options: ExpansionOptions) -> Tuple[ClassRecord, List[Code]]:
    """
    Class record of a visited code and its children

    Children are C ∪ {φ} for φ in V_d(C), one per Stab(C)-orbit when child
    pruning is on; none when the size cap is reached.
    """
    space = get_space(code.degree)
    extensions = space.extension_indices(code)
    record = ClassRecord(
        certificate=form.certificate,
        size=code.size,
        maximal=len(extensions) == 0,
        group_size=form.group_size,
        code=canonical_code(code, form, options.inversion),
    )
    if options.max_size is not None and code.size >= options.max_size:
        return record, []
    if options.child_pruning:
        generators = stabilizer(code, options.inversion, form)
        chosen = [int(orbit[0]) for orbit in stabilizer_orbits(space, generators, extensions)]
    else:
        chosen = [int(i) for i in extensions]
    return record, [code.with_element(space.permutation(i)) for i in chosen]


def _visit_task(task: Tuple[Code, ExpansionOptions]) -> Tuple[ClassRecord, List[Code], int]:
    code, options = task
    form = canonical_form(code, options.inversion)
    record, children = expand_code(code, form, options)
    return record, children, form.node_count


def _abort(e: ResourceCapExceeded, registry: CertificateRegistry) -> ResourceCapExceeded:
    sizes = {}
    for _, record in registry.items():
        sizes[record.size] = sizes.get(record.size, 0) + 1
    e.diagnostics.update({
        "classes_found": len(registry),
        "partial_counts_by_size": {str(k): v for k, v in sorted(sizes.items())},
    })
    return e


def genbylist(n: int, d: int, inversion: bool = True, max_size: Optional[int] = None,
              child_pruning: bool = True, budget: Optional[SearchBudget] = None,
              mapper: Optional[Mapper] = None) -> EnumerationResult:
    """
    Enumerate every isometry class of (n,d)-codes

    Args:
        n: Degree
        d: Minimum distance
        inversion: Count the inversion as an isometry
        max_size: Do not extend codes of this size
        child_pruning: Extend by one element per Stab(C)-orbit of V_d(C)
        budget: Node/time caps; one node per class
        mapper: Parallel map (input order kept); None runs depth-first in-process

    Returns:
        EnumerationResult emitting all classes, maximal ones flagged

    Raises:
        ResourceCapExceeded: cap reached; diagnostics carry the partial counts
    """
    budget = budget or SearchBudget()
    options = ExpansionOptions(inversion, child_pruning, max_size)
    registry = CertificateRegistry()
    seed = seed_code(n, d)
    try:
        if mapper is None:
            _depth_first(seed, options, registry, budget)
        else:
            _waves(seed, options, registry, budget, mapper)
    except ResourceCapExceeded as e:
        raise _abort(e, registry)

    parameters = {"n": n, "d": d, "algorithm": "list", "inversion": inversion}
    if max_size is not None:
        parameters["max_size"] = max_size
    result = EnumerationResult.from_records(
        parameters, registry.values(), emit=lambda r: True,
        wall_time=budget.elapsed, node_count=budget.nodes,
    )
    logger.info("genbylist(%d,%d): %d classes, %d maximal", n, d, result.total_classes, result.total_maximal)
    return result


def _depth_first(seed: Code, options: ExpansionOptions, registry: CertificateRegistry,
                 budget: SearchBudget) -> None:
    stack = [seed]
    while stack:
        code = stack.pop()
        form = canonical_form(code, options.inversion)
        if form.certificate in registry:
            continue
        record, children = expand_code(code, form, options)
        registry.insert_if_absent(form.certificate, record)
        budget.tick(classes=len(registry), depth=code.size)
        stack.extend(reversed(children))


def _waves(seed: Code, options: ExpansionOptions, registry: CertificateRegistry,
           budget: SearchBudget, mapper: Mapper) -> None:
    """Level-synchronous expansion; insertion order is certificate order within a level"""
    level = [seed]
    while level:
        results = mapper(_visit_task, [(code, options) for code in level])
        following = {}
        for record, children, _ in sorted(results, key=lambda item: item[0].certificate):
            if registry.insert_if_absent(record.certificate, record):
                budget.tick(classes=len(registry), depth=record.size)
                for child in children:
                    following.setdefault(child.elements, child)
        level = [following[key] for key in sorted(following)]
        logger.debug("Wave done: %d classes, %d candidates next", len(registry), len(level))
