"""Shared helpers: tiny graph builders and an inline naive-filter oracle.

The naive functions here re-derive everything from itertools.product so
the engine under test shares no code path with its checks.
"""

from __future__ import annotations

import itertools

import pytest

from chromatic_zagreb.graph import Graph


def path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star(n: int) -> Graph:
    return Graph(n, [(0, i) for i in range(1, n)])


def naive_chi(g: Graph) -> int:
    for k in range(1, g.order + 1):
        for ass in itertools.product(range(1, k + 1), repeat=g.order):
            if all(ass[u] != ass[v] for u, v in g.edges):
                return k
    raise AssertionError


def naive_min_colorings(g: Graph, ell: int | None = None) -> list[tuple[int, ...]]:
    if ell is None:
        ell = naive_chi(g)
    full = set(range(1, ell + 1))
    out = []
    for ass in itertools.product(range(1, ell + 1), repeat=g.order):
        if all(ass[u] != ass[v] for u, v in g.edges) and set(ass) == full:
            out.append(ass)
    return out


def naive_extrema(g: Graph) -> dict[int, tuple[int, int]]:
    edges = g.edges
    values = {1: [], 2: [], 3: []}
    for ass in naive_min_colorings(g):
        values[1].append(sum(c * c for c in ass))
        values[2].append(sum(ass[u] * ass[v] for u, v in edges))
        values[3].append(sum(abs(ass[u] - ass[v]) for u, v in edges))
    return {k: (min(v), max(v)) for k, v in values.items()}


@pytest.fixture(scope="session")
def schema_validator():
    jsonschema = pytest.importorskip("jsonschema")

    def validate(instance, schema_name):
        import json
        from importlib import resources

        schema = json.loads(
            resources.files("chromatic_zagreb.schemas")
            .joinpath(schema_name)
            .read_text()
        )
        jsonschema.validate(instance=instance, schema=schema)

    return validate
