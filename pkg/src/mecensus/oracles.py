"""Brute-force references used only for verification.

Everything here is deliberately naive and shares nothing with the main
pipeline beyond the graph coding: digraphs are enumerated pair by pair,
canonical forms are taken over all n! permutations at once, and acyclic
orientation counts come from the chromatic polynomial.  Disagreement with
the pipeline fails the build.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .graphs import Graph, iter_pairs, pair_count, pair_index


@dataclass
class LabeledDagCensus:
    n: int
    total_dags: int
    dags_by_edges: list[int]
    # (skeleton code, frozenset of immorality triples) -> class size
    classes: dict[tuple[int, frozenset], int]


def brute_force_census(n: int) -> LabeledDagCensus:
    """All labeled DAGs on n vertices, partitioned by skeleton + immoralities.

    Walks every assignment of {absent, i->j, j->i} to every vertex pair,
    which caps the practical range at n <= 5 (3^10 states).
    """
    if not 1 <= n <= 5:
        raise ValueError("brute-force DAG census supported for 1 <= n <= 5 only")
    pairs = list(iter_pairs(n))
    classes: dict[tuple[int, frozenset], int] = {}
    by_edges = [0] * (len(pairs) + 1)
    total = 0
    for assignment in itertools.product((0, 1, 2), repeat=len(pairs)):
        parents: list[list[int]] = [[] for _ in range(n + 1)]
        skeleton = 0
        arcs = 0
        for (i, j), a in zip(pairs, assignment):
            if a == 0:
                continue
            skeleton |= 1 << pair_index(i, j)
            arcs += 1
            if a == 1:
                parents[j].append(i)  # i -> j
            else:
                parents[i].append(j)  # j -> i
        if _has_cycle(n, parents):
            continue
        total += 1
        by_edges[arcs] += 1
        immoralities = set()
        for b in range(1, n + 1):
            for a, c in itertools.combinations(sorted(parents[b]), 2):
                if not skeleton >> pair_index(a, c) & 1:
                    immoralities.add((a, b, c))
        key = (skeleton, frozenset(immoralities))
        classes[key] = classes.get(key, 0) + 1
    return LabeledDagCensus(n=n, total_dags=total, dags_by_edges=by_edges, classes=classes)


def _has_cycle(n: int, parents: list[list[int]]) -> bool:
    # Kahn peeling on the parent lists
    indeg = [len(parents[v]) for v in range(n + 1)]
    children: list[list[int]] = [[] for _ in range(n + 1)]
    for v in range(1, n + 1):
        for p in parents[v]:
            children[p].append(v)
    stack = [v for v in range(1, n + 1) if indeg[v] == 0]
    seen = 0
    while stack:
        v = stack.pop()
        seen += 1
        for c in children[v]:
            indeg[c] -= 1
            if indeg[c] == 0:
                stack.append(c)
    return seen != n


def brute_force_unlabeled(n: int) -> list[int]:
    """Canonical codes of all unlabeled graphs on n vertices, ascending.

    Vectorized over the full labeled space: every permutation is applied
    to every one of the 2^m codes and the maximum is kept.
    """
    if not 1 <= n <= 6:
        raise ValueError("brute-force unlabeled enumeration supported for 1 <= n <= 6 only")
    m = pair_count(n)
    pairs = list(iter_pairs(n))
    codes = np.arange(1 << m, dtype=np.int64)
    bits = (codes[:, None] >> np.arange(m, dtype=np.int64)) & 1
    best = np.zeros(1 << m, dtype=np.int64)
    for perm in itertools.permutations(range(1, n + 1)):
        newpos = np.empty(m, dtype=np.int64)
        for k, (i, j) in enumerate(pairs):
            a, b = perm[i - 1], perm[j - 1]
            if a > b:
                a, b = b, a
            newpos[k] = pair_index(a, b)
        np.maximum(best, bits @ (np.int64(1) << newpos), out=best)
    return [int(c) for c in np.unique(best)]


def chromatic_polynomial_at(g: Graph, x: int) -> int:
    """Evaluate the chromatic polynomial by deletion-contraction.

    |value at -1| equals the number of acyclic orientations, which is the
    cross-check the orientation enumerator is held to.
    """
    return _chromatic(g.n, frozenset(g.edges()), x)


def _chromatic(nv: int, edges: frozenset, x: int) -> int:
    if not edges:
        return x ** nv
    u, v = next(iter(edges))
    deleted = edges - {(u, v)}
    # contract v into u; simple-graph collapse of any parallel edges
    contracted = set()
    for a, b in deleted:
        a = u if a == v else a
        b = u if b == v else b
        if a != b:
            contracted.add((min(a, b), max(a, b)))
    return _chromatic(nv, deleted, x) - _chromatic(nv - 1, frozenset(contracted), x)
