"""Bipartite graphs with bitset adjacency, maximum matchings and deficiency witnesses.

Vertices are 0-indexed. Part A has ``m`` vertices, part B has ``n``; the
adjacency of A-vertex ``a`` is an int whose bit ``b`` is set iff ``ab`` is an edge.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from rainbow_lab.errors import FormatError

__all__ = [
    "BipartiteGraph",
    "Matching",
    "DeficiencyWitness",
    "DefectCheck",
    "max_matching",
    "matching_number",
    "deficiency_witness",
    "verify_defect_formula",
    "has_augmenting_path",
    "graph_from_json",
    "graph_to_json",
]


@dataclass(frozen=True)
class BipartiteGraph:
    m: int
    n: int
    adjacency: tuple[int, ...]

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise ValueError(f"part sizes must be positive, got m={self.m}, n={self.n}")
        if len(self.adjacency) != self.m:
            raise ValueError(f"expected {self.m} adjacency rows, got {len(self.adjacency)}")
        limit = 1 << self.n
        for a, row in enumerate(self.adjacency):
            if row < 0 or row >= limit:
                raise ValueError(f"adjacency of A-vertex {a} has bits outside 0..{self.n - 1}")

    @classmethod
    def from_edges(cls, m: int, n: int, edges: Iterable[tuple[int, int]]) -> BipartiteGraph:
        """Build a graph from ``(a, b)`` pairs; duplicate or out-of-range edges raise ValueError."""
        rows = [0] * m
        for a, b in edges:
            if not (0 <= a < m and 0 <= b < n):
                raise ValueError(f"edge ({a}, {b}) out of range for parts ({m}, {n})")
            bit = 1 << b
            if rows[a] & bit:
                raise ValueError(f"duplicate edge ({a}, {b})")
            rows[a] |= bit
        return cls(m, n, tuple(rows))

    @classmethod
    def complete(cls, m: int, n: int) -> BipartiteGraph:
        return cls(m, n, ((1 << n) - 1,) * m)

    @classmethod
    def empty(cls, m: int, n: int) -> BipartiteGraph:
        return cls(m, n, (0,) * m)

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adjacency)

    def edges(self) -> list[tuple[int, int]]:
        return [(a, b) for a, row in enumerate(self.adjacency) for b in range(self.n) if row >> b & 1]

    def has_edge(self, a: int, b: int) -> bool:
        return bool(self.adjacency[a] >> b & 1)

    def b_adjacency(self) -> tuple[int, ...]:
        """Adjacency of the B-vertices as bitsets over A."""
        cols = [0] * self.n
        for a, row in enumerate(self.adjacency):
            for b in range(self.n):
                if row >> b & 1:
                    cols[b] |= 1 << a
        return tuple(cols)

    def a_degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adjacency]

    def b_degrees(self) -> list[int]:
        return [col.bit_count() for col in self.b_adjacency()]

    def neighborhood(self, s_set: Iterable[int]) -> int:
        """Bitset of N(S) for a set S of A-vertices."""
        mask = 0
        for a in s_set:
            mask |= self.adjacency[a]
        return mask

    def transpose(self) -> BipartiteGraph:
        """The same graph with the roles of A and B exchanged."""
        return BipartiteGraph(self.n, self.m, self.b_adjacency())

    def with_edge_toggled(self, a: int, b: int) -> BipartiteGraph:
        rows = list(self.adjacency)
        rows[a] ^= 1 << b
        return BipartiteGraph(self.m, self.n, tuple(rows))


@dataclass(frozen=True)
class Matching:
    pairs: tuple[tuple[int, int], ...]

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def is_valid_in(self, g: BipartiteGraph) -> bool:
        a_seen = set()
        b_seen = set()
        for a, b in self.pairs:
            if a in a_seen or b in b_seen:
                return False
            if not (0 <= a < g.m and 0 <= b < g.n) or not g.has_edge(a, b):
                return False
            a_seen.add(a)
            b_seen.add(b)
        return True


@dataclass(frozen=True)
class DeficiencyWitness:
    s_set: frozenset[int]
    neighborhood: frozenset[int]
    deficiency: int


class DefectCheck(NamedTuple):
    matching_size: int
    deficiency: int
    consistent: bool


def _kuhn(adjacency: tuple[int, ...] | list[int], n: int) -> list[int]:
    """Augmenting-path matching; returns mate_of_b (-1 when unmatched)."""
    mate_b = [-1] * n

    def augment(a: int, visited: list[bool]) -> bool:
        row = adjacency[a]
        while row:
            low = row & -row
            b = low.bit_length() - 1
            row ^= low
            if visited[b]:
                continue
            visited[b] = True
            if mate_b[b] < 0 or augment(mate_b[b], visited):
                mate_b[b] = a
                return True
        return False

    for a in range(len(adjacency)):
        if adjacency[a]:
            augment(a, [False] * n)
    return mate_b


def matching_number(adjacency: tuple[int, ...] | list[int], n: int) -> int:
    """Size of a maximum matching of raw bitset rows; used by the exhaustive sweeps."""
    return sum(1 for a in _kuhn(adjacency, n) if a >= 0)


def max_matching(g: BipartiteGraph) -> Matching:
    """Maximum-cardinality matching, scanning A-vertices and B-neighbours in ascending order."""
    mate_b = _kuhn(g.adjacency, g.n)
    return Matching(tuple(sorted((a, b) for b, a in enumerate(mate_b) if a >= 0)))


def _alternating_reach(g: BipartiteGraph, matching: Matching) -> tuple[set[int], set[int], bool]:
    """Vertices reachable from unmatched A-vertices by alternating paths.

    The flag is True when an unmatched B-vertex is reached, i.e. an
    augmenting path exists.
    """
    mate_a = {a: b for a, b in matching.pairs}
    mate_b = {b: a for a, b in matching.pairs}
    reach_a = {a for a in range(g.m) if a not in mate_a}
    reach_b: set[int] = set()
    queue = deque(sorted(reach_a))
    augmentable = False
    while queue:
        a = queue.popleft()
        row = g.adjacency[a]
        for b in range(g.n):
            if not row >> b & 1 or b in reach_b:
                continue
            reach_b.add(b)
            partner = mate_b.get(b)
            if partner is None:
                augmentable = True
            elif partner not in reach_a:
                reach_a.add(partner)
                queue.append(partner)
    return reach_a, reach_b, augmentable


def has_augmenting_path(g: BipartiteGraph, matching: Matching) -> bool:
    return _alternating_reach(g, matching)[2]


def deficiency_witness(g: BipartiteGraph) -> DeficiencyWitness:
    """Return the inclusion-minimal S maximizing |S| - |N(S)|.

    S is the set of unmatched A-vertices together with every A-vertex reachable
    from them along alternating paths of a maximum matching. Every B-vertex
    reached is matched (otherwise the matching would augment), and its mate is
    in S, so N(S) is matched into S and the deficiency equals the number of
    unmatched A-vertices.
    """
    s_set, reached_b, _ = _alternating_reach(g, max_matching(g))
    nbhd = g.neighborhood(s_set)
    neighborhood = frozenset(b for b in range(g.n) if nbhd >> b & 1)
    assert neighborhood == reached_b
    return DeficiencyWitness(frozenset(s_set), neighborhood, len(s_set) - len(neighborhood))


def verify_defect_formula(g: BipartiteGraph) -> DefectCheck:
    size = len(max_matching(g))
    d = deficiency_witness(g).deficiency
    return DefectCheck(size, d, size == g.m - d)


def graph_from_json(doc: object) -> BipartiteGraph:
    """Parse ``{"m": int, "n": int, "edges": [[a, b], ...]}``."""
    if not isinstance(doc, dict):
        raise FormatError("graph document must be a JSON object")
    try:
        m, n, edges = doc["m"], doc["n"], doc["edges"]
    except KeyError as exc:
        raise FormatError(f"graph document is missing key {exc}") from None
    if not all(isinstance(x, int) and not isinstance(x, bool) for x in (m, n)):
        raise FormatError("m and n must be integers")
    if not isinstance(edges, list):
        raise FormatError("edges must be a list")
    pairs = []
    for item in edges:
        if (
            not isinstance(item, list)
            or len(item) != 2
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in item)
        ):
            raise FormatError(f"bad edge entry {item!r}")
        pairs.append((item[0], item[1]))
    try:
        return BipartiteGraph.from_edges(m, n, pairs)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def graph_to_json(g: BipartiteGraph) -> dict:
    return {"m": g.m, "n": g.n, "edges": [[a, b] for a, b in g.edges()]}
