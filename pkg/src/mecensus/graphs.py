"""Undirected graphs on labeled vertices 1..n, bit-coded.

The code packs the upper triangle of the adjacency matrix into one
integer.  Bit significance is column-major: the pair (i, j), i < j,
outranks (i', j') iff j > j', or j = j' and i > i'.  So column n holds
the most significant bits, and within a column the row nearest the
diagonal ranks highest.  Pair positions do not depend on n, which lets
codes of different sizes share the same layout for their common pairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 12  # codes stay within a 66-bit budget


def pair_count(n: int) -> int:
    return n * (n - 1) // 2


def pair_index(i: int, j: int) -> int:
    """Bit position of the unordered pair (i, j), 1 <= i < j."""
    return (j - 1) * (j - 2) // 2 + (i - 1)


def iter_pairs(n: int) -> Iterator[tuple[int, int]]:
    """All pairs (i, j), i < j <= n, in ascending bit-position order."""
    for j in range(2, n + 1):
        for i in range(1, j):
            yield (i, j)


@dataclass(frozen=True)
class Graph:
    """Undirected graph as (vertex count, adjacency bit code)."""

    n: int
    code: int

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count {self.n} outside 1..{MAX_VERTICES}")
        if not 0 <= self.code < 1 << pair_count(self.n):
            raise ValueError(f"code {self.code:#x} out of range for n={self.n}")

    @property
    def edge_count(self) -> int:
        return self.code.bit_count()

    def has_edge(self, i: int, j: int) -> bool:
        if i == j:
            return False
        if i > j:
            i, j = j, i
        return bool(self.code >> pair_index(i, j) & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edge list in ascending bit-position order."""
        return [p for p in iter_pairs(self.n) if self.code >> pair_index(*p) & 1]


def empty_graph(n: int) -> Graph:
    return Graph(n, 0)


def complete_graph(n: int) -> Graph:
    return Graph(n, (1 << pair_count(n)) - 1)


def encode(edges: Iterable[tuple[int, int]], n: int) -> Graph:
    """Build a graph from vertex pairs; loops and out-of-range pairs rejected."""
    code = 0
    for i, j in edges:
        if i == j:
            raise ValueError(f"loop at vertex {i}")
        if not (1 <= i < j <= n):
            raise ValueError(f"pair ({i}, {j}) not in 1 <= i < j <= {n}")
        code |= 1 << pair_index(i, j)
    return Graph(n, code)


def complement(g: Graph) -> Graph:
    return Graph(g.n, ((1 << pair_count(g.n)) - 1) ^ g.code)


def degree_sequence(g: Graph) -> list[int]:
    """Degrees indexed by vertex - 1."""
    deg = [0] * g.n
    c = g.code
    for i, j in iter_pairs(g.n):
        if c & 1:
            deg[i - 1] += 1
            deg[j - 1] += 1
        c >>= 1
    return deg


def adjacency_masks(g: Graph) -> list[int]:
    """Per-vertex neighbor bitmask, bit v-1 set iff v adjacent; index by vertex - 1."""
    masks = [0] * g.n
    c = g.code
    for i, j in iter_pairs(g.n):
        if c & 1:
            masks[i - 1] |= 1 << (j - 1)
            masks[j - 1] |= 1 << (i - 1)
        c >>= 1
    return masks


def apply_permutation(g: Graph, perm: Sequence[int]) -> Graph:
    """Relabel: vertex v becomes perm[v-1].  perm must be a bijection on 1..n."""
    if sorted(perm) != list(range(1, g.n + 1)):
        raise ValueError(f"not a bijection on 1..{g.n}: {perm!r}")
    code = 0
    c = g.code
    for i, j in iter_pairs(g.n):
        if c & 1:
            a, b = perm[i - 1], perm[j - 1]
            if a > b:
                a, b = b, a
            code |= 1 << pair_index(a, b)
        c >>= 1
    return Graph(g.n, code)
