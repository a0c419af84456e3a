# coding=utf-8
"""
Canonical Labeling Module

Partition refinement canonical labeling of colored graphs, in the
individualization-refinement style:

1. The initial ordered partition lists the color classes in color order,
   the row class split by each row's sorted distance profile.
2. Refinement splits cells by neighbour counts into a splitter cell until
   the partition is equitable. Fragments are ordered by ascending count and
   all but the first largest fragment are queued (Hopcroft).
3. The search tree individualizes each vertex of the first smallest
   non-singleton cell in turn. A discrete partition is a leaf; its
   certificate is the tuple of adjacency bitmasks in position order and the
   largest certificate wins.
4. Leaves equivalent to the first leaf or to the best leaf yield
   automorphisms. Children in the same orbit under the automorphisms fixing
   the current path are skipped; an automorphism found from the first leaf
   jumps back to the common ancestor with the first path.

All ordering rules are fixed, so certificates are stable across runs and may
be persisted.
"""

import hashlib
import logging
from collections import deque
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from permcensus import CERTIFICATE_FORMAT_VERSION
from permcensus.canon.graph import ROW, ColoredGraph, build_graph, reconstruct_code
from permcensus.core.code import Code
from permcensus.utils.unionfind import UnionFind, find_orbits

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CanonicalForm:
    """
    Result of canonical labeling

    Attributes:
        certificate: version byte, color class sizes, upper-triangular adjacency bits
        automorphism_generators: vertex maps g with g[v] = image of v
        group_size: order of the colored-graph automorphism group
        labeling: labeling[p] = vertex placed at canonical position p
        row_count: number of row vertices (positions 0 .. row_count-1)
        node_count: search tree nodes visited
    """

    certificate: bytes
    automorphism_generators: Tuple[Tuple[int, ...], ...]
    group_size: int
    labeling: Tuple[int, ...]
    row_count: int
    node_count: int = 0

    @property
    def hex(self) -> str:
        return self.certificate.hex()

    @property
    def digest(self) -> str:
        """SHA-256 of the certificate; its prefix names census files"""
        return hashlib.sha256(self.certificate).hexdigest()

    @property
    def canonical_row(self) -> int:
        """Row vertex with the largest canonical label among rows"""
        return self.labeling[self.row_count - 1]

    def positions(self) -> List[int]:
        """Inverse labeling: positions()[v] = canonical position of vertex v"""
        pos = [0] * len(self.labeling)
        for p, v in enumerate(self.labeling):
            pos[v] = p
        return pos

    def vertex_orbits(self) -> UnionFind:
        """Orbits of the automorphism group on vertices"""
        return find_orbits(self.automorphism_generators, len(self.labeling))


def _row_profile(graph: ColoredGraph, row: int, rows: Sequence[int]) -> Tuple[int, ...]:
    """Sorted numbers of shared cells with the other rows (n minus their distances)"""
    mine = graph.adjacency[row]
    return tuple(sorted(len(mine & graph.adjacency[other]) for other in rows if other != row))


def initial_partition(graph: ColoredGraph) -> List[List[int]]:
    """Color classes in color order; rows split by distance profile"""
    cells: List[List[int]] = []
    classes = graph.color_classes()
    for members in classes:
        if graph.colors[members[0]] == ROW and len(members) > 1:
            buckets = {}
            for row in members:
                buckets.setdefault(_row_profile(graph, row, members), []).append(row)
            cells.extend(buckets[key] for key in sorted(buckets))
        else:
            cells.append(members)
    return cells


class _LabelingSearch:
    """Mutable state of one canonical labeling run"""

    def __init__(self, graph: ColoredGraph):
        self.graph = graph
        self.size = graph.vertex_count
        self.adjacency = [tuple(sorted(a)) for a in graph.adjacency]
        self.node_count = 0
        self.generators: List[Tuple[int, ...]] = []
        self.first_path: Optional[List[int]] = None
        self.first_lab: Optional[List[int]] = None
        self.first_cert: Optional[Tuple[int, ...]] = None
        self.best_lab: Optional[List[int]] = None
        self.best_cert: Optional[Tuple[int, ...]] = None
        self._orbit_cache = {}

    # ---------- partition handling ----------

    def _refine(self, lab: List[int], cstart: List[int], cend: List[int], queue_init: Sequence[int]) -> None:
        adjacency = self.adjacency
        in_queue = bytearray(self.size)
        queue = deque(queue_init)
        for start in queue_init:
            in_queue[start] = 1
        while queue:
            splitter = queue.popleft()
            in_queue[splitter] = 0
            counts = {}
            for v in lab[splitter:cend[splitter]]:
                for w in adjacency[v]:
                    counts[w] = counts.get(w, 0) + 1
            for t in sorted({cstart[w] for w in counts}):
                end = cend[t]
                if end - t == 1:
                    continue
                groups = {}
                for v in lab[t:end]:
                    groups.setdefault(counts.get(v, 0), []).append(v)
                if len(groups) == 1:
                    continue
                p = t
                fragments = []
                for key in sorted(groups):
                    start = p
                    for v in groups[key]:
                        lab[p] = v
                        cstart[v] = start
                        p += 1
                    cend[start] = p
                    fragments.append(start)
                if in_queue[t]:
                    pushed = fragments[1:]
                else:
                    largest = max(fragments, key=lambda f: (cend[f] - f, -f))
                    pushed = [f for f in fragments if f != largest]
                for f in pushed:
                    in_queue[f] = 1
                    queue.append(f)

    def _target_cell(self, cend: List[int]) -> Optional[int]:
        """Start of the first smallest non-singleton cell, None when discrete"""
        best = None
        best_size = self.size + 1
        p = 0
        while p < self.size:
            end = cend[p]
            width = end - p
            if 1 < width < best_size:
                best, best_size = p, width
                if width == 2:
                    break
            p = end
        return best

    def _individualize(self, lab, cstart, cend, target: int, v: int):
        lab = lab[:]
        cstart = cstart[:]
        cend = cend[:]
        end = cend[target]
        i = lab.index(v, target, end)
        lab[i], lab[target] = lab[target], v
        cend[target] = target + 1
        cend[target + 1] = end
        cstart[v] = target
        for p in range(target + 1, end):
            cstart[lab[p]] = target + 1
        self._refine(lab, cstart, cend, [target])
        return lab, cstart, cend

    # ---------- automorphisms ----------

    def _stabilizer_orbits(self, path: Sequence[int]) -> UnionFind:
        key = (tuple(path), len(self.generators))
        uf = self._orbit_cache.get(key)
        if uf is None:
            fixing = [g for g in self.generators if all(g[x] == x for x in path)]
            uf = find_orbits(fixing, self.size)
            self._orbit_cache = {key: uf}
        return uf

    def _record(self, source_lab: List[int], target_lab: List[int]) -> None:
        g = [0] * self.size
        for a, b in zip(source_lab, target_lab):
            g[a] = b
        self.generators.append(tuple(g))

    # ---------- tree ----------

    def _leaf_certificate(self, lab: List[int]) -> Tuple[int, ...]:
        pos = [0] * self.size
        for p, v in enumerate(lab):
            pos[v] = p
        adjacency = self.adjacency
        return tuple(sum(1 << pos[w] for w in adjacency[v]) for v in lab)

    def _leaf(self, lab: List[int], path: List[int]) -> Optional[int]:
        if self.first_cert is None:
            cert = self._leaf_certificate(lab)
            self.first_path, self.first_lab, self.first_cert = list(path), lab, cert
            self.best_lab, self.best_cert = lab, cert
            return None
        cert = self._leaf_certificate(lab)
        if cert == self.first_cert:
            self._record(self.first_lab, lab)
            common = 0
            for a, b in zip(path, self.first_path):
                if a != b:
                    break
                common += 1
            return common
        if cert > self.best_cert:
            self.best_lab, self.best_cert = lab, cert
        elif cert == self.best_cert:
            self._record(self.best_lab, lab)
        return None

    def _visit(self, lab, cstart, cend, path: List[int]) -> Optional[int]:
        self.node_count += 1
        target = self._target_cell(cend)
        if target is None:
            return self._leaf(lab, path)
        depth = len(path)
        explored: List[int] = []
        for v in sorted(lab[target:cend[target]]):
            if explored and self.generators:
                uf = self._stabilizer_orbits(path)
                root = uf.find(v)
                if any(uf.find(u) == root for u in explored):
                    continue
            child = self._individualize(lab, cstart, cend, target, v)
            path.append(v)
            jump = self._visit(*child, path)
            path.pop()
            explored.append(v)
            if jump is not None and jump < depth:
                return jump
        return None

    def run(self) -> None:
        lab: List[int] = []
        cstart = [0] * self.size
        cend = [0] * self.size
        starts = []
        for cell in initial_partition(self.graph):
            start = len(lab)
            lab.extend(cell)
            for v in cell:
                cstart[v] = start
            cend[start] = len(lab)
            starts.append(start)
        self._refine(lab, cstart, cend, starts)
        self._visit(lab, cstart, cend, [])

    def group_size(self) -> int:
        """Product of first-path orbit lengths under the pointwise path stabilizers"""
        order = 1
        path = self.first_path or []
        for level, v in enumerate(path):
            fixing = [g for g in self.generators if all(g[x] == x for x in path[:level])]
            if not fixing:
                continue
            uf = find_orbits(fixing, self.size)
            root = uf.find(v)
            order *= sum(1 for x in range(self.size) if uf.find(x) == root)
        return order


def encode_certificate(graph: ColoredGraph, labeling: Sequence[int]) -> bytes:
    """
    Frozen certificate format

    byte 0: format version; then big-endian uint32 number of color classes
    and each class size; then the upper-triangular adjacency matrix under the
    labeling, row by row, packed eight bits per byte.
    """
    size = graph.vertex_count
    pos = np.empty(size, dtype=np.int64)
    pos[np.asarray(labeling, dtype=np.int64)] = np.arange(size)
    matrix = np.zeros((size, size), dtype=bool)
    for v, neighbours in enumerate(graph.adjacency):
        if neighbours:
            matrix[pos[v], pos[list(neighbours)]] = True
    upper = matrix[np.triu_indices(size, k=1)]
    sizes = [len(c) for c in graph.color_classes()]
    header = np.array([len(sizes)] + sizes, dtype=">u4").tobytes()
    return bytes([CERTIFICATE_FORMAT_VERSION]) + header + np.packbits(upper).tobytes()


def canonical_form_of_graph(graph: ColoredGraph) -> CanonicalForm:
    """Canonical labeling, certificate and automorphism group of a colored graph"""
    search = _LabelingSearch(graph)
    search.run()
    labeling = tuple(search.best_lab)
    row_count = sum(1 for c in graph.colors if c == ROW)
    form = CanonicalForm(
        certificate=encode_certificate(graph, labeling),
        automorphism_generators=tuple(search.generators),
        group_size=search.group_size(),
        labeling=labeling,
        row_count=row_count,
        node_count=search.node_count,
    )
    logger.debug("Canonical form: %d vertices, %d nodes, |Aut| = %d",
                 graph.vertex_count, search.node_count, form.group_size)
    return form


def canonical_form(code: Code, inversion: bool = True) -> CanonicalForm:
    """
    Canonical form of a code's colored graph

    Args:
        code: The code
        inversion: Treat the inversion as an equivalence (shared column/symbol color)

    Returns:
        CanonicalForm whose certificate is equal for two codes iff they are isometric
    """
    return canonical_form_of_graph(build_graph(code, inversion))


def canonical_representative(code: Code, inversion: bool = True) -> Tuple[CanonicalForm, Code]:
    """Canonical form plus the code decoded from the canonically relabelled graph"""
    graph = build_graph(code, inversion)
    form = canonical_form_of_graph(graph)
    return form, reconstruct_code(graph.relabel(form.positions()))


def canonical_code(code: Code, form: CanonicalForm, inversion: bool = True) -> Code:
    """Representative decoded from the graph relabelled by an existing canonical form"""
    return reconstruct_code(build_graph(code, inversion).relabel(form.positions()))
