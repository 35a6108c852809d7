"""Array-based union-find used for face and component counts."""

from __future__ import annotations


class UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if ra > rb:
                ra, rb = rb, ra
            self.parent[rb] = ra

    def class_count(self) -> int:
        return sum(1 for i, p in enumerate(self.parent) if self.find(i) == i)

    def classes(self) -> list[list[int]]:
        """Partition as lists of members, ordered by smallest member."""
        groups: dict[int, list[int]] = {}
        for i in range(len(self.parent)):
            groups.setdefault(self.find(i), []).append(i)
        return [groups[r] for r in sorted(groups)]

    def labels(self) -> list[int]:
        """Class label (smallest member) for every element."""
        return [self.find(i) for i in range(len(self.parent))]
