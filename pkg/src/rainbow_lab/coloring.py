"""Edge-colorings of K_{m,n}, bipartite rainbow numbers for matchings, and rainbow search.

Closed forms (with m >= n >= k):

    k = 1             rb = 1
    k = 2, m = n = 2  rb = 3
    k = 2, m >= 3     rb = 2
    k >= 3            rb = m(k-2) + 2
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional, Sequence

from rainbow_lab.bipartite import BipartiteGraph, Matching, matching_number
from rainbow_lab.errors import FormatError, MatchingDoesNotFitError
from rainbow_lab.extremal import check_parameters, ext_value

__all__ = [
    "Regime",
    "RbRegime",
    "ColoredCompleteBipartite",
    "RainbowCertificate",
    "SG1Match",
    "SG2Match",
    "normalize_orientation",
    "rb_value",
    "bounds",
    "build_extremal_coloring",
    "find_rainbow",
    "rainbow_matching",
    "recognize_sg1",
    "recognize_sg2",
    "build_sg1",
    "build_sg2",
    "coloring_from_json",
    "coloring_to_json",
]


def normalize_orientation(m: int, n: int) -> tuple[int, int, bool]:
    """Return (max, min, swapped)."""
    if m >= n:
        return m, n, False
    return n, m, True


class Regime(str, enum.Enum):
    K1 = "K1"
    K2_SMALL = "K2_SMALL"
    K2_GENERAL = "K2_GENERAL"
    MAIN = "MAIN"


class RbRegime(NamedTuple):
    regime: Regime
    value: int


def rb_value(m: int, n: int, k: int) -> RbRegime:
    """Bipartite rainbow number rb(K_{m,n}, kK2); m and n may be given in either order."""
    m, n, _ = normalize_orientation(m, n)
    check_parameters(m, n, k)
    if k == 1:
        return RbRegime(Regime.K1, 1)
    if k == 2:
        if m == 2:
            return RbRegime(Regime.K2_SMALL, 3)
        return RbRegime(Regime.K2_GENERAL, 2)
    return RbRegime(Regime.MAIN, m * (k - 2) + 2)


def bounds(m: int, n: int, k: int) -> tuple[int, int]:
    """(ext(m,n,(k-1)K2) + 2, ext(m,n,kK2) + 1) for k >= 2."""
    m, n, _ = normalize_orientation(m, n)
    check_parameters(m, n, k)
    if k < 2:
        raise MatchingDoesNotFitError("the rb bounds need k >= 2")
    return ext_value(m, n, k - 1) + 2, ext_value(m, n, k) + 1


@dataclass(frozen=True)
class ColoredCompleteBipartite:
    """A total coloring of K_{m,n}; ``colors[a * n + b]`` is the color of edge ab.

    Color ids are dense, 0..color_count-1, numbered by first appearance in
    edge order. Use :meth:`from_labels` to build one from arbitrary labels.
    """

    m: int
    n: int
    colors: tuple[int, ...]

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise ValueError(f"part sizes must be positive, got ({self.m}, {self.n})")
        if len(self.colors) != self.m * self.n:
            raise ValueError(f"need {self.m * self.n} edge colors, got {len(self.colors)}")
        seen = -1
        for c in self.colors:
            if c > seen + 1 or c < 0:
                raise ValueError("color ids must be dense and numbered by first appearance")
            seen = max(seen, c)

    @classmethod
    def from_labels(cls, m: int, n: int, labels: Sequence) -> ColoredCompleteBipartite:
        """Relabel arbitrary hashable color labels (edge order a*n+b) to dense ids."""
        ids: dict = {}
        dense = tuple(ids.setdefault(lab, len(ids)) for lab in labels)
        return cls(m, n, dense)

    @classmethod
    def monochromatic(cls, m: int, n: int) -> ColoredCompleteBipartite:
        return cls(m, n, (0,) * (m * n))

    @property
    def color_count(self) -> int:
        return max(self.colors) + 1

    def color(self, a: int, b: int) -> int:
        return self.colors[a * self.n + b]

    def rows(self) -> list[list[tuple[int, int]]]:
        return [[(b, self.colors[a * self.n + b]) for b in range(self.n)] for a in range(self.m)]


@dataclass(frozen=True)
class RainbowCertificate:
    matching: Matching
    colors_used: tuple[int, ...]

    def is_valid_for(self, c: ColoredCompleteBipartite, k: int) -> bool:
        if len(self.matching) != k or len(self.colors_used) != k:
            return False
        if len(set(self.colors_used)) != k:
            return False
        if not self.matching.is_valid_in(BipartiteGraph.complete(c.m, c.n)):
            return False
        return all(c.color(a, b) == col for (a, b), col in zip(self.matching.pairs, self.colors_used))


def _residual_reaches(rows, start: int, used_b: int, used_c: int, need: int) -> bool:
    """Bounds on what rows[start:] can still contribute: distinct colors and a matching."""
    colors = 0
    masks = []
    for row in rows[start:]:
        mask = 0
        for b, c in row:
            if not (used_b >> b & 1 or used_c >> c & 1):
                mask |= 1 << b
                colors |= 1 << c
        if mask:
            masks.append(mask)
    if len(masks) < need or colors.bit_count() < need:
        return False
    width = max(masks).bit_length()
    return matching_number(masks, width) >= need


def rainbow_matching(rows: Sequence[Sequence[tuple[int, int]]], k: int) -> Optional[list[tuple[int, int, int]]]:
    """Exact search for k disjoint edges with distinct colors.

    ``rows[a]`` lists the ``(b, color)`` edges at A-vertex ``a``; missing edges
    are simply absent, so partial colorings work too. Returns ``(a, b, color)``
    triples or None. Branches on A-vertices in ascending order, pruning on the
    number of rows left, distinct colors left, and the maximum matching of the
    residual graph.
    """
    if k <= 0:
        return []
    m = len(rows)
    chosen: list[tuple[int, int, int]] = []

    def search(i: int, used_b: int, used_c: int) -> bool:
        need = k - len(chosen)
        if need == 0:
            return True
        if m - i < need:
            return False
        if need > 1 and not _residual_reaches(rows, i, used_b, used_c, need):
            return False
        for b, c in rows[i]:
            if used_b >> b & 1 or used_c >> c & 1:
                continue
            chosen.append((i, b, c))
            if search(i + 1, used_b | 1 << b, used_c | 1 << c):
                return True
            chosen.pop()
        return search(i + 1, used_b, used_c)

    return chosen if search(0, 0, 0) else None


def find_rainbow(c: ColoredCompleteBipartite, k: int) -> Optional[RainbowCertificate]:
    """A rainbow kK2 in the coloring, or None if there is none."""
    if not 1 <= k <= min(c.m, c.n):
        raise MatchingDoesNotFitError(f"k must be in 1..{min(c.m, c.n)}, got {k}")
    found = rainbow_matching(c.rows(), k)
    if found is None:
        return None
    return RainbowCertificate(Matching(tuple((a, b) for a, b, _ in found)), tuple(col for _, _, col in found))


def build_extremal_coloring(m: int, n: int, k: int) -> ColoredCompleteBipartite:
    """Rainbow K_{m,k-2} on the first k-2 B-vertices, one extra color everywhere else.

    Uses m(k-2)+1 colors and has no rainbow kK2: such a matching could use at
    most k-2 edges of the rainbow part and one edge of the extra color.
    """
    check_parameters(m, n, k)
    if k < 2:
        raise MatchingDoesNotFitError("the extremal coloring needs k >= 2")
    core = k - 2
    extra = m * core
    labels = [a * core + b if b < core else extra for a in range(m) for b in range(n)]
    return ColoredCompleteBipartite.from_labels(m, n, labels)


# Special shapes: a complete core plus pendant edges and isolated vertices.


@dataclass(frozen=True)
class SG1Match:
    """K_{m,k-2} core plus two pendant edges sharing a hub on the full side.

    ``transposed`` is True when the full side is B (only possible when m == n);
    vertex indices in ``core_full``/``core_other``/``hub``/``pendants`` are then
    B-, A-, B- and A-indices respectively, and ``pendant_edges`` are still
    reported as (a, b) pairs.
    """

    k: int
    transposed: bool
    core_full: frozenset[int]
    core_other: frozenset[int]
    hub: int
    pendant_edges: tuple[tuple[int, int], tuple[int, int]]
    isolated: frozenset[int]


@dataclass(frozen=True)
class SG2Match:
    """K_{m-1,m-1} core, one pendant edge pv with deg(v) = 1, one isolated vertex u."""

    transposed: bool
    core_a: frozenset[int]
    core_b: frozenset[int]
    pendant_edge: tuple[int, int]
    isolated_vertex: tuple[str, int]


def _match_sg1(rows: tuple[int, ...], other_size: int, total_edges: int) -> Optional[tuple]:
    full = len(rows)
    all_full = (1 << full) - 1
    cols = [0] * other_size
    for x, row in enumerate(rows):
        for y in range(other_size):
            if row >> y & 1:
                cols[y] |= 1 << x
    core = [y for y in range(other_size) if cols[y] == all_full]
    pendants = [y for y in range(other_size) if cols[y] != all_full and cols[y].bit_count() == 1]
    rest = [y for y in range(other_size) if y not in core and y not in pendants]
    if not core or len(pendants) != 2 or any(cols[y] for y in rest):
        return None
    if cols[pendants[0]] != cols[pendants[1]]:
        return None
    if total_edges != full * len(core) + 2:
        return None
    hub = cols[pendants[0]].bit_length() - 1
    return len(core) + 2, frozenset(core), hub, pendants, frozenset(rest)


def recognize_sg1(g: BipartiteGraph) -> Optional[SG1Match]:
    """Recognize K_{m,k-2} plus two adjacent pendant edges plus isolated vertices; k is inferred.

    The core spans the whole larger part; when m == n either part may play that role.
    """
    big = max(g.m, g.n)
    edges = g.edge_count
    if g.m == big:
        hit = _match_sg1(g.adjacency, g.n, edges)
        if hit is not None:
            k, core, hub, (p, q), rest = hit
            return SG1Match(k, False, frozenset(range(g.m)), core, hub, ((hub, p), (hub, q)), rest)
    if g.n == big:
        hit = _match_sg1(g.b_adjacency(), g.m, edges)
        if hit is not None:
            k, core, hub, (p, q), rest = hit
            return SG1Match(k, True, frozenset(range(g.n)), core, hub, ((p, hub), (q, hub)), rest)
    return None


def _match_sg2(rows: tuple[int, ...], size: int) -> Optional[tuple]:
    # rows are over the side holding the isolated vertex u; v lives on the other side.
    isolated = [x for x, r in enumerate(rows) if r == 0]
    if len(isolated) != 1:
        return None
    u = isolated[0]
    everything = (1 << size) - 1
    cols = [0] * size
    for x, row in enumerate(rows):
        for y in range(size):
            if row >> y & 1:
                cols[y] |= 1 << x
    core_x = everything & ~(1 << u)
    for v in range(size):
        if cols[v].bit_count() != 1:
            continue
        p = cols[v].bit_length() - 1
        core_y = everything & ~(1 << v)
        if all(cols[y] == core_x for y in range(size) if y != v):
            return u, v, p, core_x, core_y
    return None


def _bits(mask: int) -> frozenset[int]:
    return frozenset(i for i in range(mask.bit_length()) if mask >> i & 1)


def recognize_sg2(g: BipartiteGraph) -> Optional[SG2Match]:
    """Recognize K_{m-1,m-1} plus a pendant edge plus one isolated vertex (needs m == n)."""
    if g.m != g.n or g.m < 2:
        return None
    size = g.m
    if g.edge_count != (size - 1) ** 2 + 1:
        return None
    hit = _match_sg2(g.adjacency, size)
    if hit is not None:
        u, v, p, core_a, core_b = hit
        return SG2Match(False, _bits(core_a), _bits(core_b), (p, v), ("A", u))
    hit = _match_sg2(g.b_adjacency(), size)
    if hit is not None:
        u, v, p, core_b, core_a = hit
        return SG2Match(True, _bits(core_a), _bits(core_b), (v, p), ("B", u))
    return None


def build_sg1(m: int, n: int, k: int) -> BipartiteGraph:
    """Canonical SG1: A x {0..k-3}, plus pendants a0-b(k-2) and a0-b(k-1)."""
    check_parameters(m, n, k)
    if k < 3:
        raise MatchingDoesNotFitError("SG1 needs k >= 3")
    rows = [(1 << (k - 2)) - 1] * m
    rows[0] |= (1 << (k - 2)) | (1 << (k - 1))
    return BipartiteGraph(m, n, tuple(rows))


def build_sg2(m: int) -> BipartiteGraph:
    """Canonical SG2 on K_{m,m}: core {a0..a(m-2)} x {b0..b(m-2)}, pendant a0-b(m-1), u = a(m-1)."""
    if m < 2:
        raise MatchingDoesNotFitError("SG2 needs m >= 2")
    core = (1 << (m - 1)) - 1
    rows = [core] * (m - 1) + [0]
    rows[0] |= 1 << (m - 1)
    return BipartiteGraph(m, m, tuple(rows))


def coloring_from_json(doc: object) -> tuple[ColoredCompleteBipartite, list]:
    """Parse ``{"m", "n", "colors": [[a, b, color], ...]}``.

    Returns the normalized coloring and the original labels indexed by dense id.
    Partial colorings and repeated edges are rejected.
    """
    if not isinstance(doc, dict):
        raise FormatError("coloring document must be a JSON object")
    try:
        m, n, entries = doc["m"], doc["n"], doc["colors"]
    except KeyError as exc:
        raise FormatError(f"coloring document is missing key {exc}") from None
    if not all(isinstance(x, int) and not isinstance(x, bool) for x in (m, n)) or m < 1 or n < 1:
        raise FormatError("m and n must be positive integers")
    if not isinstance(entries, list):
        raise FormatError("colors must be a list")
    labels: list = [None] * (m * n)
    filled = [False] * (m * n)
    for item in entries:
        if not isinstance(item, list) or len(item) != 3:
            raise FormatError(f"bad color entry {item!r}")
        a, b, label = item
        if not all(isinstance(x, int) and not isinstance(x, bool) for x in (a, b)):
            raise FormatError(f"bad edge in color entry {item!r}")
        if not (0 <= a < m and 0 <= b < n):
            raise FormatError(f"edge ({a}, {b}) out of range")
        if isinstance(label, (list, dict)):
            raise FormatError(f"color label must be a scalar, got {label!r}")
        if filled[a * n + b]:
            raise FormatError(f"duplicate edge ({a}, {b})")
        filled[a * n + b] = True
        labels[a * n + b] = label
    if not all(filled):
        missing = filled.index(False)
        raise FormatError(f"partial coloring: edge ({missing // n}, {missing % n}) has no color")
    coloring = ColoredCompleteBipartite.from_labels(m, n, labels)
    originals: list = [None] * coloring.color_count
    for dense, label in zip(coloring.colors, labels):
        originals[dense] = label
    return coloring, originals


def coloring_to_json(c: ColoredCompleteBipartite, labels: Optional[Iterable] = None) -> dict:
    names = list(labels) if labels is not None else list(range(c.color_count))
    return {
        "m": c.m,
        "n": c.n,
        "colors": [[a, b, names[c.color(a, b)]] for a in range(c.m) for b in range(c.n)],
    }
