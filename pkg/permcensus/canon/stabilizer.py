# coding=utf-8
"""
Stabilizer Module

Translation of colored-graph isomorphisms into isometries: Stab(C) from the
automorphism generators, and witness isometries between isometric codes.
Every translated isometry is checked by direct application; a failure is
an internal defect and is raised, never skipped.
"""

import logging
from typing import List, Optional, Sequence

from permcensus.canon.labeling import CanonicalForm, canonical_form
from permcensus.core.code import Code
from permcensus.core.permutation import Permutation
from permcensus.group.isometry import Isometry, apply_to_code
from permcensus.utils.errors import CanonConsistencyError, InvalidParameterError

logger = logging.getLogger(__name__)


def vertex_map_to_isometry(vertex_map: Sequence[int], code_size: int, degree: int) -> Isometry:
    """
    Isometry realised by a vertex map between two graphs of the build_graph layout

    Columns sent to columns give k=0 with β read off the column images and α
    off the symbol images. Columns sent to symbols give k=1 with α(i) the
    symbol index of the image of column i and β(j) the column index of the
    image of symbol j.

    Raises:
        CanonConsistencyError: the map does not respect the column/symbol split
    """
    col0 = code_size
    sym0 = code_size + degree
    columns = [vertex_map[col0 + i] for i in range(degree)]
    symbols = [vertex_map[sym0 + j] for j in range(degree)]
    try:
        if col0 <= columns[0] < sym0:
            beta = Permutation(tuple(c - col0 for c in columns))
            alpha = Permutation(tuple(x - sym0 for x in symbols))
            return Isometry(alpha, beta, 0)
        alpha = Permutation(tuple(c - sym0 for c in columns))
        beta = Permutation(tuple(x - col0 for x in symbols))
        return Isometry(alpha, beta, 1)
    except InvalidParameterError as e:
        raise CanonConsistencyError(
            "Graph map does not act on columns and symbols as an isometry",
            details=[("reason", e.message), ("columns", columns), ("symbols", symbols)],
        )


def stabilizer(code: Code, inversion: bool = True, form: Optional[CanonicalForm] = None) -> List[Isometry]:
    """
    Generators of Stab(C) from the automorphisms of the colored graph

    Args:
        code: The code
        inversion: Include the inversion in the equivalence
        form: Precomputed canonical_form(code, inversion)

    Returns:
        Sorted, duplicate-free generators; empty when the stabilizer is trivial.
        The group order is form.group_size.

    Raises:
        CanonConsistencyError: an automorphism does not fix C, or a non-trivial
            automorphism translates to the identity isometry
    """
    if form is None:
        form = canonical_form(code, inversion)
    result = set()
    for g in form.automorphism_generators:
        t = vertex_map_to_isometry(g, code.size, code.degree)
        if apply_to_code(t, code) != code:
            raise CanonConsistencyError(
                "Graph automorphism does not stabilize the code",
                details=[("isometry", str(t))],
            )
        if t.is_identity():
            if any(g[v] != v for v in range(len(g))):
                raise CanonConsistencyError("Non-trivial automorphism translates to the identity isometry")
            continue
        result.add(t)
    return sorted(result)


def find_isometry(c1: Code, c2: Code, inversion: bool = True,
                  forms: Optional[Sequence[CanonicalForm]] = None) -> Optional[Isometry]:
    """
    Witness isometry t with apply_to_code(t, c1) = c2, from the two canonical labelings

    Returns:
        The witness, or None when the certificates differ

    Raises:
        InvalidParameterError: different n or d
        CanonConsistencyError: equal certificates whose labelings do not realise an isometry
    """
    if c1.degree != c2.degree or c1.min_distance != c2.min_distance:
        raise InvalidParameterError(
            f"Codes differ in parameters: (n,d)=({c1.degree},{c1.min_distance}) vs ({c2.degree},{c2.min_distance})"
        )
    if c1.size != c2.size:
        return None
    f1, f2 = forms if forms is not None else (canonical_form(c1, inversion), canonical_form(c2, inversion))
    if f1.certificate != f2.certificate:
        return None
    vertex_map = [0] * len(f1.labeling)
    for a, b in zip(f1.labeling, f2.labeling):
        vertex_map[a] = b
    t = vertex_map_to_isometry(vertex_map, c1.size, c1.degree)
    if apply_to_code(t, c1) != c2:
        raise CanonConsistencyError(
            "Equal certificates but the labeling map is not an isometry",
            details=[("isometry", str(t))],
        )
    logger.debug("Witness isometry: %s", t)
    return t
