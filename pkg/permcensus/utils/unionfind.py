# coding=utf-8
"""
Union-Find Module

Disjoint sets over 0..size-1, used to compute orbits of a group given by
generators (vertex orbits of automorphisms, Stab(C)-orbits of extensions).
"""

from typing import Dict, Iterable, List, Sequence


class UnionFind:
    """Union by rank with path compression over integer points"""

    def __init__(self, size: int):
        self.parent = list(range(size))
        self.rank = [0] * size

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> None:
        x, y = self.find(x), self.find(y)
        if x == y:
            return
        if self.rank[x] < self.rank[y]:
            x, y = y, x
        elif self.rank[x] == self.rank[y]:
            self.rank[x] += 1
        self.parent[y] = x

    def groups(self) -> List[List[int]]:
        """Disjoint sets, each sorted, ordered by smallest member"""
        buckets: Dict[int, List[int]] = {}
        for x in range(len(self.parent)):
            buckets.setdefault(self.find(x), []).append(x)
        return sorted(buckets.values())


def find_orbits(generators: Iterable[Sequence[int]], size: int) -> UnionFind:
    """Orbits of the group generated by point maps g (g[x] = image of x)"""
    uf = UnionFind(size)
    for g in generators:
        for x in range(size):
            uf.union(x, g[x])
    return uf
