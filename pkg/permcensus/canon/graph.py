# coding=utf-8
"""
Colored Graph Module

The colored graph (V(C), E(C)) of a code, the complete isometry invariant.

Vertex layout for a size-s code of degree n:

    0 .. s-1                  rows, one per code element in sorted order
    s .. s+n-1                columns
    s+n .. s+2n-1             symbols
    s+2n + i*n + j            cell (i, j), all n² materialized

Cell (i, j) is adjacent to column i and symbol j; row k is adjacent to the
cells (i, φ_k(i)). Columns and symbols share a color so that a graph
isomorphism may exchange them (the inversion); without inversion they get
separate colors.
"""

from collections import deque
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Sequence, Tuple

import networkx as nx

from permcensus.core.code import Code, make_code
from permcensus.core.permutation import Permutation
from permcensus.utils.errors import GraphStructureError

ROW, COLSYM, CELL = 0, 1, 2
# color ids when columns and symbols are kept apart
ROW_NI, COLUMN_NI, SYMBOL_NI, CELL_NI = 0, 1, 2, 3


@dataclass(frozen=True)
class ColoredGraph:
    """
    Undirected vertex-colored graph of a code

    Attributes:
        degree: n
        min_distance: d of the encoded code
        colors: color id per vertex
        adjacency: neighbour set per vertex
        tags: origin per vertex, ("row", k) | ("column", i) | ("symbol", j) | ("cell", i, j)
        inversion: whether columns and symbols share a color
    """

    degree: int
    min_distance: int
    colors: Tuple[int, ...]
    adjacency: Tuple[FrozenSet[int], ...]
    tags: Tuple[tuple, ...]
    inversion: bool = True

    @property
    def vertex_count(self) -> int:
        return len(self.colors)

    @property
    def edge_count(self) -> int:
        return sum(len(nb) for nb in self.adjacency) // 2

    def color_classes(self) -> List[List[int]]:
        """Vertices per color id, in ascending color order"""
        classes: Dict[int, List[int]] = {}
        for v, color in enumerate(self.colors):
            classes.setdefault(color, []).append(v)
        return [classes[c] for c in sorted(classes)]

    def relabel(self, mapping: Sequence[int]) -> "ColoredGraph":
        """Isomorphic copy in which vertex v becomes mapping[v]"""
        size = self.vertex_count
        colors = [0] * size
        adjacency: List[FrozenSet[int]] = [frozenset()] * size
        tags: List[tuple] = [()] * size
        for v in range(size):
            w = mapping[v]
            colors[w] = self.colors[v]
            adjacency[w] = frozenset(mapping[u] for u in self.adjacency[v])
            tags[w] = self.tags[v]
        return ColoredGraph(self.degree, self.min_distance, tuple(colors),
                            tuple(adjacency), tuple(tags), self.inversion)

    def to_networkx(self) -> nx.Graph:
        """networkx view with 'color' and 'tag' node attributes"""
        graph = nx.Graph()
        for v, color in enumerate(self.colors):
            graph.add_node(v, color=color, tag=self.tags[v])
        for v, neighbours in enumerate(self.adjacency):
            graph.add_edges_from((v, u) for u in neighbours if u > v)
        return graph


def build_graph(code: Code, inversion: bool = True) -> ColoredGraph:
    """
    Build (V(C), E(C))

    Args:
        code: The code
        inversion: Share one color between columns and symbols

    Returns:
        Graph with s + n² + 2n vertices and s·n + 2n² edges
    """
    n = code.degree
    s = code.size
    col0 = s
    sym0 = s + n
    cell0 = s + 2 * n
    size = cell0 + n * n

    adjacency: List[set] = [set() for _ in range(size)]
    for i in range(n):
        for j in range(n):
            cell = cell0 + i * n + j
            adjacency[cell].update((col0 + i, sym0 + j))
            adjacency[col0 + i].add(cell)
            adjacency[sym0 + j].add(cell)
    for k, phi in enumerate(code.elements):
        for i, j in enumerate(phi.images):
            cell = cell0 + i * n + j
            adjacency[k].add(cell)
            adjacency[cell].add(k)

    if inversion:
        colors = [ROW] * s + [COLSYM] * (2 * n) + [CELL] * (n * n)
    else:
        colors = [ROW_NI] * s + [COLUMN_NI] * n + [SYMBOL_NI] * n + [CELL_NI] * (n * n)
    tags = (
        [("row", k) for k in range(s)]
        + [("column", i) for i in range(n)]
        + [("symbol", j) for j in range(n)]
        + [("cell", i, j) for i in range(n) for j in range(n)]
    )
    return ColoredGraph(n, code.min_distance, tuple(colors),
                        tuple(frozenset(a) for a in adjacency), tuple(tags), inversion)


def _split_column_symbol(graph: ColoredGraph, cells: List[int],
                         colsym: List[int]) -> Tuple[List[int], List[int]]:
    """
    Bipartition the shared column/symbol class through the cells

    Each cell joins one column and one symbol, so the cells induce a
    bipartite graph on columns ∪ symbols; the side containing the lowest
    vertex index is read as the columns.
    """
    member = set(colsym)
    links: Dict[int, List[int]] = {v: [] for v in colsym}
    for cell in cells:
        ends = [u for u in graph.adjacency[cell] if u in member]
        if len(ends) != 2:
            raise GraphStructureError(f"Cell vertex {cell} has {len(ends)} column/symbol neighbours, expected 2")
        a, b = ends
        links[a].append(b)
        links[b].append(a)

    side = {colsym[0]: 0}
    queue = deque([colsym[0]])
    while queue:
        v = queue.popleft()
        for u in links[v]:
            if u not in side:
                side[u] = 1 - side[v]
                queue.append(u)
            elif side[u] == side[v]:
                raise GraphStructureError("Column/symbol vertices do not form a bipartite structure")
    if len(side) != len(colsym):
        raise GraphStructureError("Column/symbol vertices are not connected through cells")
    columns = sorted(v for v in colsym if side[v] == 0)
    symbols = sorted(v for v in colsym if side[v] == 1)
    return columns, symbols


def reconstruct_code(graph: ColoredGraph) -> Code:
    """
    Decode a graph produced by build_graph, possibly relabelled

    Only colors and adjacency are read, never tags. Columns and symbols are
    numbered by ascending vertex index, so the result is isometric to the
    encoded code (equal to it under the original labelling).

    Raises:
        GraphStructureError: a row without exactly n cells, a cell without
            exactly one column and one symbol, or a row that is no bijection
    """
    n = graph.degree
    classes = graph.color_classes()
    if graph.inversion:
        if len(classes) != 3:
            raise GraphStructureError(f"Expected 3 color classes, found {len(classes)}")
        rows, colsym, cells = classes
        if len(colsym) != 2 * n or len(cells) != n * n:
            raise GraphStructureError("Color class sizes do not match degree n")
        columns, symbols = _split_column_symbol(graph, cells, colsym)
    else:
        if len(classes) != 4:
            raise GraphStructureError(f"Expected 4 color classes, found {len(classes)}")
        rows, columns, symbols, cells = classes
    if len(columns) != n or len(symbols) != n or len(cells) != n * n:
        raise GraphStructureError("Column and symbol classes must each hold n vertices")

    column_index = {v: i for i, v in enumerate(columns)}
    symbol_index = {v: j for j, v in enumerate(symbols)}
    cell_set = set(cells)

    perms = []
    for row in rows:
        row_cells = [u for u in graph.adjacency[row] if u in cell_set]
        if len(row_cells) != n or len(graph.adjacency[row]) != n:
            raise GraphStructureError(f"Row vertex {row} has {len(graph.adjacency[row])} neighbours, expected {n} cells")
        images = [-1] * n
        for cell in row_cells:
            cs = [column_index[u] for u in graph.adjacency[cell] if u in column_index]
            ss = [symbol_index[u] for u in graph.adjacency[cell] if u in symbol_index]
            if len(cs) != 1 or len(ss) != 1:
                raise GraphStructureError(f"Cell vertex {cell} is not attached to one column and one symbol")
            if images[cs[0]] != -1:
                raise GraphStructureError(f"Row vertex {row} uses column {cs[0] + 1} twice")
            images[cs[0]] = ss[0]
        if sorted(images) != list(range(n)):
            raise GraphStructureError(f"Row vertex {row} does not define a permutation")
        perms.append(Permutation.trusted(tuple(images)))
    return make_code(graph.min_distance, perms)
