"""Exact chromatic number and exhaustive enumeration of minimum colorings.

Colors are 1-based integers; a minimum coloring of G uses exactly
chi(G) colors and every color at least once. Two enumeration semantics
are provided:

* ``all``: every proper surjective assignment V -> {1..chi}, each exactly
  once, in lexicographic order of the assignment sequence.
* ``permutation``: one canonical chi-partition (lexicographically least
  sorted vertex-set representation over all proper chi-partitions)
  crossed with all chi! color label permutations.

For connected bipartite graphs the proper 2-partition is unique, so the
two semantics emit the same set.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Literal

from .graph import Graph

Semantics = Literal["all", "permutation"]


class EnumerationBudgetExceeded(Exception):
    """Raised internally when an enumeration pass exceeds its work cap."""


@dataclass(frozen=True)
class Coloring:
    """Proper-coloring value object: vertex -> 1-based color index.

    Invariants enforced at construction: every color lies in 1..palette_size
    and every color index in that range is used at least once (surjectivity).
    Properness is relative to a graph and checked by :func:`is_proper`.
    """

    assignment: tuple[int, ...]
    palette_size: int

    def __post_init__(self) -> None:
        if len(self.assignment) == 0:
            raise ValueError("coloring must cover at least one vertex")
        used = set(self.assignment)
        if min(used) < 1 or max(used) > self.palette_size:
            raise ValueError(
                f"colors must lie in 1..{self.palette_size}, got {sorted(used)}"
            )
        if len(used) != self.palette_size:
            missing = set(range(1, self.palette_size + 1)) - used
            raise ValueError(f"colors {sorted(missing)} unused; coloring must be surjective")

    @classmethod
    def from_assignment(cls, assignment: tuple[int, ...] | list[int]) -> "Coloring":
        seq = tuple(assignment)
        return cls(seq, max(seq) if seq else 0)

    def color(self, v: int) -> int:
        return self.assignment[v]


@dataclass(frozen=True)
class StrengthVector:
    """theta[j-1] = number of vertices wearing color j."""

    theta: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(t < 1 for t in self.theta):
            raise ValueError("every color class must be non-empty")


def strengths(c: Coloring) -> StrengthVector:
    counts = [0] * c.palette_size
    for col in c.assignment:
        counts[col - 1] += 1
    return StrengthVector(tuple(counts))


def is_proper(g: Graph, c: Coloring) -> bool:
    """True iff no edge of g is monochromatic under c."""
    if len(c.assignment) != g.order:
        raise ValueError(
            f"coloring covers {len(c.assignment)} vertices, graph has {g.order}"
        )
    a = c.assignment
    return all(a[u] != a[v] for u, v in g.edges)


# ---------------------------------------------------------------------------
# chromatic number


def _bipartition(masks: tuple[int, ...], n: int) -> tuple[list[int], list[int]] | None:
    """Two-color each component; return the (side0, side1) lists or None."""
    color = [-1] * n
    sides: tuple[list[int], list[int]] = ([], [])
    for start in range(n):
        if color[start] != -1:
            continue
        color[start] = 0
        sides[0].append(start)
        stack = [start]
        while stack:
            u = stack.pop()
            m = masks[u]
            while m:
                low = m & -m
                w = low.bit_length() - 1
                m ^= low
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    sides[color[w]].append(w)
                    stack.append(w)
                elif color[w] == color[u]:
                    return None
    return sides


def _greedy_clique(masks: tuple[int, ...], n: int) -> int:
    """Greedy clique size, used as a lower bound on chi."""
    if n == 0:
        return 0
    order = sorted(range(n), key=lambda v: -bin(masks[v]).count("1"))
    best = 1
    for start in order[: min(n, 8)]:
        clique_mask = 1 << start
        size = 1
        candidates = masks[start]
        while candidates:
            pick = -1
            pick_deg = -1
            m = candidates
            while m:
                low = m & -m
                v = low.bit_length() - 1
                m ^= low
                d = bin(masks[v] & candidates).count("1")
                if d > pick_deg:
                    pick, pick_deg = v, d
            clique_mask |= 1 << pick
            size += 1
            candidates &= masks[pick]
        best = max(best, size)
    return best


def _greedy_coloring(masks: tuple[int, ...], n: int) -> int:
    """DSATUR-style greedy upper bound on chi."""
    colors = [0] * n
    forbidden = [0] * n  # bitmask of colors used by colored neighbours (bit c-1)
    uncolored = set(range(n))
    used = 0
    while uncolored:
        v = max(
            uncolored,
            key=lambda u: (bin(forbidden[u]).count("1"), bin(masks[u]).count("1"), -u),
        )
        c = 1
        while forbidden[v] >> (c - 1) & 1:
            c += 1
        colors[v] = c
        used = max(used, c)
        uncolored.remove(v)
        m = masks[v]
        while m:
            low = m & -m
            w = low.bit_length() - 1
            m ^= low
            forbidden[w] |= 1 << (c - 1)
    return used


def _search_k_coloring(masks: tuple[int, ...], n: int, k: int) -> list[int] | None:
    """Backtracking: find a proper coloring with at most k colors, else None.

    Vertices are tried in descending-degree order; the first vertex is
    pinned to color 1 and each vertex may open at most one new color,
    which breaks color-label symmetry without losing completeness.
    """
    if n == 0:
        return []
    if k < 1:
        return None
    order = sorted(range(n), key=lambda v: (-bin(masks[v]).count("1"), v))
    colors = [0] * n
    max_used = [0]

    def extend(idx: int) -> bool:
        if idx == n:
            return True
        v = order[idx]
        banned = 0
        m = masks[v]
        while m:
            low = m & -m
            w = low.bit_length() - 1
            m ^= low
            if colors[w]:
                banned |= 1 << (colors[w] - 1)
        limit = min(k, max_used[0] + 1)
        for c in range(1, limit + 1):
            if banned >> (c - 1) & 1:
                continue
            colors[v] = c
            prev = max_used[0]
            if c > prev:
                max_used[0] = c
            if extend(idx + 1):
                return True
            colors[v] = 0
            max_used[0] = prev
        return False

    return colors[:] if extend(0) else None


def find_coloring(g: Graph, k: int) -> Coloring | None:
    """A proper coloring of g using at most k colors, or None if impossible.

    The returned coloring is renumbered so the colors actually used form
    1..l for some l <= k.
    """
    raw = _search_k_coloring(g.adjacency_masks, g.order, k)
    if raw is None:
        return None
    remap: dict[int, int] = {}
    out = []
    for c in raw:
        if c not in remap:
            remap[c] = len(remap) + 1
        out.append(remap[c])
    return Coloring.from_assignment(out)


def chromatic_number(g: Graph) -> int:
    """Exact chi(g), for any simple graph of order >= 1.

    Bounded below by a greedily grown clique and above by a DSATUR greedy
    coloring; the gap is closed by exhaustive backtracking. Bipartite
    inputs short-circuit through a two-coloring sweep.
    """
    n = g.order
    if n < 1:
        raise ValueError("chromatic number needs order >= 1")
    if g.size == 0:
        return 1
    masks = g.adjacency_masks
    if _bipartition(masks, n) is not None:
        return 2
    lower = max(3, _greedy_clique(masks, n))
    upper = _greedy_coloring(masks, n)
    if upper < lower:  # greedy bounds never cross; guard stays for safety
        upper = lower
    for k in range(lower, upper):
        if _search_k_coloring(masks, n, k) is not None:
            return k
    return upper


# ---------------------------------------------------------------------------
# enumeration


def _iter_all_min_colorings(
    g: Graph, ell: int, max_emitted: int | None = None
) -> Iterator[tuple[int, ...]]:
    """Yield every proper surjective assignment V -> 1..ell, lexicographic.

    Properness is pruned against already-assigned neighbours and a
    surjectivity-feasibility bound (unused colors cannot exceed remaining
    vertices) keeps the search from wandering.
    """
    n = g.order
    masks = g.adjacency_masks
    assignment = [0] * n
    used_counts = [0] * (ell + 1)
    emitted = 0

    def extend(v: int, unused: int) -> Iterator[tuple[int, ...]]:
        nonlocal emitted
        if v == n:
            if unused == 0:
                emitted += 1
                if max_emitted is not None and emitted > max_emitted:
                    raise EnumerationBudgetExceeded()
                yield tuple(assignment)
            return
        banned = 0
        m = masks[v] & ((1 << v) - 1)  # only earlier vertices are assigned
        while m:
            low = m & -m
            banned |= 1 << (assignment[low.bit_length() - 1] - 1)
            m ^= low
        remaining = n - v - 1
        for c in range(1, ell + 1):
            if banned >> (c - 1) & 1:
                continue
            opens = 1 if used_counts[c] == 0 else 0
            if unused - opens > remaining:
                continue
            assignment[v] = c
            used_counts[c] += 1
            yield from extend(v + 1, unused - opens)
            used_counts[c] -= 1
            assignment[v] = 0

    return extend(0, ell)


def _iter_chi_partitions(
    g: Graph, ell: int, max_partitions: int | None = None
) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Yield every partition of V into exactly ell independent classes.

    Classes are discovered in first-vertex order (restricted-growth
    search), so each set partition appears exactly once.
    """
    n = g.order
    masks = g.adjacency_masks
    class_masks: list[int] = []
    count = 0

    def extend(v: int) -> Iterator[tuple[tuple[int, ...], ...]]:
        nonlocal count
        if v == n:
            if len(class_masks) == ell:
                count += 1
                if max_partitions is not None and count > max_partitions:
                    raise EnumerationBudgetExceeded()
                classes = []
                for cm in class_masks:
                    members = []
                    m = cm
                    while m:
                        low = m & -m
                        members.append(low.bit_length() - 1)
                        m ^= low
                    classes.append(tuple(members))
                yield tuple(sorted(classes))
            return
        remaining = n - v - 1
        # joining an existing class leaves at most `remaining` chances to
        # open the classes still missing
        if len(class_masks) + remaining >= ell:
            for idx in range(len(class_masks)):
                if masks[v] & class_masks[idx]:
                    continue
                class_masks[idx] |= 1 << v
                yield from extend(v + 1)
                class_masks[idx] &= ~(1 << v)
        if len(class_masks) < ell:
            class_masks.append(1 << v)
            yield from extend(v + 1)
            class_masks.pop()

    return extend(0)


def canonical_partition(
    g: Graph, ell: int | None = None, max_partitions: int | None = None
) -> tuple[tuple[int, ...], ...]:
    """The lexicographically least proper chi-partition (sorted representation).

    With ``max_partitions`` set, enumeration past the cap aborts with
    EnumerationBudgetExceeded rather than returning a possibly wrong pick.
    """
    if ell is None:
        ell = chromatic_number(g)
    best: tuple[tuple[int, ...], ...] | None = None
    for partition in _iter_chi_partitions(g, ell, max_partitions):
        if best is None or partition < best:
            best = partition
    if best is None:
        raise ValueError(f"graph admits no proper partition into {ell} classes")
    return best


def first_chi_partition(g: Graph, ell: int) -> tuple[tuple[int, ...], ...]:
    """First chi-partition in restricted-growth search order (cheap fallback)."""
    return next(iter(_iter_chi_partitions(g, ell)))


def colorings_of_partition(
    partition: tuple[tuple[int, ...], ...], n: int
) -> list[Coloring]:
    """All ell! labelings of one partition, sorted by assignment sequence."""
    ell = len(partition)
    out = []
    for perm in itertools.permutations(range(1, ell + 1)):
        assignment = [0] * n
        for idx, members in enumerate(partition):
            for v in members:
                assignment[v] = perm[idx]
        out.append(tuple(assignment))
    out.sort()
    return [Coloring(a, ell) for a in out]


def enumerate_min_colorings(
    g: Graph,
    semantics: Semantics = "all",
    max_emitted: int | None = None,
) -> Iterator[Coloring]:
    """Stream the minimum colorings of g under the chosen semantics.

    Emission is lazy and deterministic (lexicographic by assignment
    sequence). ``max_emitted`` aborts long streams with
    EnumerationBudgetExceeded part-way; callers that set it must be
    prepared to fall back.
    """
    if g.order < 1:
        raise ValueError("enumeration needs order >= 1")
    ell = chromatic_number(g)
    if semantics == "all":
        for assignment in _iter_all_min_colorings(g, ell, max_emitted):
            yield Coloring(assignment, ell)
    elif semantics == "permutation":
        partition = canonical_partition(g, ell, max_partitions=max_emitted)
        yield from colorings_of_partition(partition, g.order)
    else:
        raise ValueError(f"unknown semantics {semantics!r}")
