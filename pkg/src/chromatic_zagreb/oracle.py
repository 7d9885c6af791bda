"""Naive brute-force oracle, deliberately independent of the engine.

Everything here works by filtering the full assignment space
{1..k}^order with itertools.product -- no pruning, no shared search
code -- so it can serve as the reference the engine is checked against.
Only practical for small orders.
"""

from __future__ import annotations

import itertools

from .graph import Graph


def oracle_chromatic_number(g: Graph) -> int:
    """Smallest k admitting a proper assignment, by exhaustive scan."""
    n = g.order
    if n < 1:
        raise ValueError("needs order >= 1")
    edges = g.edges
    for k in range(1, n + 1):
        for ass in itertools.product(range(1, k + 1), repeat=n):
            if all(ass[u] != ass[v] for u, v in edges):
                return k
    raise AssertionError("n colors always suffice")


def oracle_min_colorings(g: Graph, ell: int | None = None):
    """Every proper surjective assignment onto 1..ell, lexicographic."""
    if ell is None:
        ell = oracle_chromatic_number(g)
    n = g.order
    edges = g.edges
    full = set(range(1, ell + 1))
    for ass in itertools.product(range(1, ell + 1), repeat=n):
        if all(ass[u] != ass[v] for u, v in edges) and set(ass) == full:
            yield ass


def oracle_extrema(g: Graph) -> dict[int, tuple[int, int]]:
    """(min, max) of each chromatic index over all minimum colorings."""
    edges = g.edges
    lo = {1: None, 2: None, 3: None}
    hi = {1: None, 2: None, 3: None}
    for ass in oracle_min_colorings(g):
        v1 = sum(s * s for s in ass)
        v2 = sum(ass[u] * ass[v] for u, v in edges)
        v3 = sum(abs(ass[u] - ass[v]) for u, v in edges)
        for k, val in ((1, v1), (2, v2), (3, v3)):
            if lo[k] is None or val < lo[k]:
                lo[k] = val
            if hi[k] is None or val > hi[k]:
                hi[k] = val
    if lo[1] is None:
        raise AssertionError("a graph always has a minimum coloring")
    return {k: (lo[k], hi[k]) for k in (1, 2, 3)}
