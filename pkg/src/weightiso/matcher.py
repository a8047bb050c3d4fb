"""Candidate-correspondence bigraphs and their transversals.

A :class:`Bigraph` between the vertex sets of two graphs keeps one Python int
per left vertex as a bitset over right vertices, so intersection is a
row-wise AND.
"""

from __future__ import annotations

from collections import defaultdict, deque
from typing import Iterable, Iterator

from .weights import KMatrix

Mapping = tuple  # entry p is the right vertex matched to left vertex p


def _bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


class Bigraph:
    __slots__ = ("n", "rows")

    def __init__(self, n: int, rows: Iterable[int] | None = None):
        self.n = n
        self.rows = tuple(rows) if rows is not None else (0,) * n
        if len(self.rows) != n:
            raise ValueError("row count does not match n")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Bigraph":
        rows = [0] * n
        for p, q in edges:
            rows[p] |= 1 << q
        return cls(n, rows)

    def __contains__(self, edge) -> bool:
        p, q = edge
        return bool(self.rows[p] >> q & 1)

    def __eq__(self, other) -> bool:
        return isinstance(other, Bigraph) and self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def __len__(self) -> int:
        return sum(r.bit_count() for r in self.rows)

    def __repr__(self) -> str:
        return f"Bigraph(n={self.n}, edges={len(self)})"

    def neighbors(self, p: int) -> list[int]:
        return list(_bits(self.rows[p]))

    def edges(self) -> list[tuple[int, int]]:
        """All edges in ascending ``(p, q)`` order."""
        return [(p, q) for p in range(self.n) for q in _bits(self.rows[p])]

    def left_degree(self, p: int) -> int:
        return self.rows[p].bit_count()

    def right_degrees(self) -> list[int]:
        deg = [0] * self.n
        for r in self.rows:
            for q in _bits(r):
                deg[q] += 1
        return deg

    def without(self, p: int, q: int) -> "Bigraph":
        rows = list(self.rows)
        rows[p] &= ~(1 << q)
        return Bigraph(self.n, rows)

    def covers_all(self) -> bool:
        """Every left and right vertex has at least one edge."""
        if not all(self.rows):
            return False
        union = 0
        for r in self.rows:
            union |= r
        return union == (1 << self.n) - 1


def build_bigraph(k: KMatrix, k2: KMatrix, i: int, j: int, keys=None) -> Bigraph:
    """``H_ij``: edge ``(p, q)`` iff ``deg(p) = deg'(q)`` and ``k_ip = k'_jq``.

    ``keys`` may carry the precomputed result of ``k.comparable_rows(k2)``.
    """
    if k.n != k2.n:
        raise ValueError(f"dimension mismatch {k.n} != {k2.n}")
    left, right = keys if keys is not None else k.comparable_rows(k2)
    buckets: dict = defaultdict(int)
    for q, (key, d) in enumerate(zip(right[j], k2.degrees)):
        buckets[key, d] |= 1 << q
    return Bigraph(k.n, (buckets.get((key, d), 0) for key, d in zip(left[i], k.degrees)))


def intersect(a: Bigraph, b: Bigraph) -> Bigraph:
    if a.n != b.n:
        raise ValueError(f"dimension mismatch {a.n} != {b.n}")
    return Bigraph(a.n, (x & y for x, y in zip(a.rows, b.rows)))


def max_matching(h: Bigraph) -> list[int | None]:
    """Hopcroft-Karp maximum matching; ``result[p]`` is ``p``'s partner or None.

    Vertices and adjacency are scanned in ascending order, so the result is
    a deterministic function of the edge set.
    """
    n = h.n
    adj = [h.neighbors(p) for p in range(n)]
    match_l: list[int | None] = [None] * n
    match_r: list[int | None] = [None] * n
    inf = n + 1

    # greedy start
    for p in range(n):
        for q in adj[p]:
            if match_r[q] is None:
                match_l[p], match_r[q] = q, p
                break

    while True:
        dist = [inf] * n
        queue = deque()
        for p in range(n):
            if match_l[p] is None:
                dist[p] = 0
                queue.append(p)
        found = False
        while queue:
            p = queue.popleft()
            for q in adj[p]:
                r = match_r[q]
                if r is None:
                    found = True
                elif dist[r] == inf:
                    dist[r] = dist[p] + 1
                    queue.append(r)
        if not found:
            return match_l

        ptr = [0] * n

        def augment(root: int) -> bool:
            # iterative DFS along the BFS layering
            stack = [root]
            path_q: list[int] = []
            while stack:
                p = stack[-1]
                advanced = False
                while ptr[p] < len(adj[p]):
                    q = adj[p][ptr[p]]
                    ptr[p] += 1
                    r = match_r[q]
                    if r is None:
                        path_q.append(q)
                        for pp, qq in zip(stack, path_q):
                            match_l[pp], match_r[qq] = qq, pp
                        return True
                    if dist[r] == dist[p] + 1:
                        path_q.append(q)
                        stack.append(r)
                        advanced = True
                        break
                if not advanced:
                    dist[p] = inf
                    stack.pop()
                    if path_q:
                        path_q.pop()
            return False

        for p in range(n):
            if match_l[p] is None:
                augment(p)


def transversal(h: Bigraph) -> Mapping | None:
    """A perfect matching of ``h`` as a tuple, or None when none exists."""
    if not h.covers_all():
        return None
    m = max_matching(h)
    if any(q is None for q in m):
        return None
    return tuple(m)
