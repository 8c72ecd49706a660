"""Extremal numbers for matchings in bipartite graphs.

A bipartite graph with parts of sizes m >= n and more than m(k-1) edges
always contains k disjoint edges, and K_{m,k-1} is the only graph meeting
the bound with equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from rainbow_lab.bipartite import BipartiteGraph, Matching, matching_number, max_matching
from rainbow_lab.errors import MatchingDoesNotFitError, OrientationError

__all__ = [
    "ExtremalReport",
    "ExhaustiveExtremal",
    "check_parameters",
    "ext_value",
    "build_extremal_graph",
    "find_kK2",
    "is_canonical_extremal",
    "certify_uniqueness",
    "inspect_graph",
    "enumerate_graphs",
    "exhaustive_extremal",
]


def check_parameters(m: int, n: int, k: int) -> None:
    """Validate m >= n >= k >= 1, raising the matching domain error."""
    if m < 1 or n < 1:
        raise MatchingDoesNotFitError(f"part sizes must be positive, got ({m}, {n})")
    if m < n:
        raise OrientationError(f"expected m >= n, got m={m} < n={n}; normalize orientation first")
    if k < 1:
        raise MatchingDoesNotFitError(f"k must be at least 1, got {k}")
    if k > n:
        raise MatchingDoesNotFitError(f"no {k}K2 fits in K_{{{m},{n}}}: k exceeds n={n}")


def ext_value(m: int, n: int, k: int) -> int:
    """Maximum edge count of a bipartite graph on parts (m, n) without k disjoint edges."""
    check_parameters(m, n, k)
    return m * (k - 1)


def build_extremal_graph(m: int, n: int, k: int) -> BipartiteGraph:
    """K_{m,k-1}: every A-vertex joined to the first k-1 B-vertices, other B-vertices isolated."""
    check_parameters(m, n, k)
    return BipartiteGraph(m, n, ((1 << (k - 1)) - 1,) * m)


def find_kK2(g: BipartiteGraph, k: int) -> Optional[Matching]:
    """A matching of exactly k edges if the graph has one, else None."""
    if k < 1:
        raise MatchingDoesNotFitError(f"k must be at least 1, got {k}")
    best = max_matching(g)
    if len(best) < k:
        return None
    return Matching(best.pairs[:k])


def _is_complete_core(rows: tuple[int, ...], other_size: int, k: int) -> bool:
    # k-1 columns of full degree, everything else empty, every row hitting exactly those columns.
    if not rows:
        return False
    core = rows[0]
    return core.bit_count() == k - 1 and core < (1 << other_size) and all(r == core for r in rows)


def is_canonical_extremal(g: BipartiteGraph, k: int) -> bool:
    """Part-preserving isomorphism to K_{m,k-1} (plus the part-swapped twin when m == n).

    The target is complete bipartite plus isolated vertices, so isomorphism
    reduces to: all A-rows equal to one (k-1)-subset of B.
    """
    if _is_complete_core(g.adjacency, g.n, k):
        return True
    if g.m == g.n:
        return _is_complete_core(g.b_adjacency(), g.m, k)
    return False


def certify_uniqueness(g: BipartiteGraph, k: int) -> bool:
    """True iff g is extremal for kK2 (m(k-1) edges, no kK2) and is a copy of K_{m,k-1}."""
    bound = ext_value(g.m, g.n, k)
    if g.edge_count != bound:
        return False
    if matching_number(g.adjacency, g.n) >= k:
        return False
    return is_canonical_extremal(g, k)


@dataclass(frozen=True)
class ExtremalReport:
    ext_value: int
    is_extremal: bool
    isomorphic_to_canonical: bool
    witness: Optional[Matching]


def inspect_graph(g: BipartiteGraph, k: int) -> ExtremalReport:
    bound = ext_value(g.m, g.n, k)
    witness = find_kK2(g, k)
    return ExtremalReport(
        ext_value=bound,
        is_extremal=witness is None and g.edge_count == bound,
        isomorphic_to_canonical=is_canonical_extremal(g, k),
        witness=witness,
    )


def enumerate_graphs(m: int, n: int) -> Iterator[tuple[int, ...]]:
    """All 2^(mn) adjacency tuples on parts (m, n); bit a*n+b of the index is edge ab."""
    row_mask = (1 << n) - 1
    for code in range(1 << (m * n)):
        yield tuple((code >> (a * n)) & row_mask for a in range(m))


@dataclass
class ExhaustiveExtremal:
    m: int
    n: int
    max_edges: dict[int, int]                  # k -> max |E| over kK2-free graphs
    extremal_counts: dict[int, int]            # k -> number of kK2-free graphs with m(k-1) edges
    non_canonical: dict[int, list[tuple[int, ...]]]
    graphs_scanned: int


def exhaustive_extremal(m: int, n: int) -> ExhaustiveExtremal:
    """Scan every graph on parts (m, n), m >= n, recording extremal data for each 1 <= k <= n."""
    check_parameters(m, n, 1)
    max_edges = {k: 0 for k in range(1, n + 1)}
    counts = {k: 0 for k in range(1, n + 1)}
    bad: dict[int, list[tuple[int, ...]]] = {k: [] for k in range(1, n + 1)}
    scanned = 0
    for rows in enumerate_graphs(m, n):
        scanned += 1
        edges = sum(r.bit_count() for r in rows)
        nu = matching_number(rows, n)
        for k in range(nu + 1, n + 1):
            if edges > max_edges[k]:
                max_edges[k] = edges
            if edges == m * (k - 1):
                counts[k] += 1
                if not is_canonical_extremal(BipartiteGraph(m, n, rows), k):
                    bad[k].append(rows)
    return ExhaustiveExtremal(m, n, max_edges, counts, bad, scanned)
