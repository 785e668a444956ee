"""union_find.py - Disjoint sets with path compression and union by size."""


class UnionFind:
    """Partition of 0..size-1, merged by union()."""

    def __init__(self, size: int):
        self.size = size
        self.parents = list(range(size))
        self._weight = [1] * size

    def find(self, elem: int) -> int:
        root = elem
        while root != self.parents[root]:
            root = self.parents[root]
        # compress the path just walked
        while elem != root:
            self.parents[elem], elem = root, self.parents[elem]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return
        if self._weight[ra] < self._weight[rb]:
            ra, rb = rb, ra
        self.parents[rb] = ra
        self._weight[ra] += self._weight[rb]

    def union_all(self, elems) -> None:
        elems = list(elems)
        for other in elems[1:]:
            self.union(elems[0], other)

    def groups(self) -> list[list[int]]:
        """Classes as sorted lists, ordered by smallest member."""
        buckets: dict[int, list[int]] = {}
        for i in range(self.size):
            buckets.setdefault(self.find(i), []).append(i)
        return sorted(buckets.values(), key=lambda grp: grp[0])
