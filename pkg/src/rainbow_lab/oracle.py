"""Brute-force anti-Ramsey numbers f(K_{m,n}, kK2) by scanning edge-set partitions.

Colorings are enumerated up to relabeling as restricted-growth strings over
the edges in order ``a * n + b``. A prefix is abandoned as soon as it already
contains a rainbow kK2: such a matching stays rainbow whatever the remaining
edges receive. Every rainbow kK2 contains a latest-assigned edge, so it is
enough to test, at each assignment, for a rainbow (k-1)K2 among earlier edges
that avoids the new edge's endpoints and color.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Optional

from rainbow_lab.coloring import ColoredCompleteBipartite, find_rainbow, rainbow_matching, rb_value
from rainbow_lab.errors import OracleLimitError
from rainbow_lab.extremal import check_parameters

__all__ = [
    "DEFAULT_LIMIT",
    "PartitionEnumerator",
    "OracleResult",
    "SweepRow",
    "default_limit",
    "brute_force_f",
    "count_rainbow_free_partitions",
    "sweep_verify",
    "is_rainbow_free",
    "rgs_prefixes",
    "sweep_parameters",
]

DEFAULT_LIMIT = 12
LIMIT_ENV = "RAINBOW_LAB_LIMIT"


def default_limit() -> int:
    value = os.environ.get(LIMIT_ENV)
    return int(value) if value else DEFAULT_LIMIT


class PartitionEnumerator:
    """Restricted-growth strings of a given length, in lexicographic order.

    ``current[i] <= 1 + max(current[:i])`` with ``current[0] == 0``; each set
    partition of ``range(element_count)`` appears exactly once. A fixed
    ``prefix`` restricts the scan to strings starting with it.
    """

    def __init__(self, element_count: int, prefix: tuple[int, ...] = ()):
        if element_count < 0:
            raise ValueError("element_count must be non-negative")
        if not _is_rgs(prefix) or len(prefix) > element_count:
            raise ValueError(f"invalid restricted-growth prefix {prefix!r}")
        self.element_count = element_count
        self.prefix = tuple(prefix)
        self.current: Optional[list[int]] = None

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        size = self.element_count
        fixed = len(self.prefix)
        cur = list(self.prefix) + [0] * (size - fixed)
        # running maxima: peak[i] = max(cur[:i + 1])
        peak = [0] * size
        run = -1
        for i in range(size):
            run = max(run, cur[i])
            peak[i] = run
        while True:
            self.current = cur
            yield tuple(cur)
            i = size - 1
            while i >= max(fixed, 1) and cur[i] > peak[i - 1]:
                i -= 1
            if i < max(fixed, 1):
                return
            cur[i] += 1
            peak[i] = max(peak[i - 1], cur[i])
            for j in range(i + 1, size):
                cur[j] = 0
                peak[j] = peak[i]


def _is_rgs(seq) -> bool:
    top = -1
    for x in seq:
        if x < 0 or x > top + 1:
            return False
        top = max(top, x)
    return True


def rgs_prefixes(length: int) -> list[tuple[int, ...]]:
    """All restricted-growth strings of the given length (shard keys)."""
    return list(PartitionEnumerator(length)) if length else [()]


def is_rainbow_free(m: int, n: int, classes: tuple[int, ...], k: int) -> bool:
    return find_rainbow(ColoredCompleteBipartite(m, n, classes), k) is None


@dataclass(frozen=True)
class OracleResult:
    m: int
    n: int
    k: int
    f_exact: int
    rb_exact: int
    witness_partition: Optional[tuple[int, ...]]
    partitions_scanned: int

    def as_json(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "k": self.k,
            "f": self.f_exact,
            "rb": self.rb_exact,
            "partitions": self.partitions_scanned,
        }


class _Search:
    """Depth-first walk over restricted-growth strings with rainbow pruning.

    mode "max" keeps the first partition (in lexicographic order) with the most
    classes, skipping prefixes that cannot beat the best so far; mode "count"
    counts complete rainbow-free strings with exactly ``target`` classes.
    """

    def __init__(self, m: int, n: int, k: int, mode: str, target: int = 0):
        self.m, self.n, self.k = m, n, k
        self.size = m * n
        self.mode = mode
        self.target = target
        self.labels = [0] * self.size
        self.best = 0
        self.witness: Optional[tuple[int, ...]] = None
        self.leaves = 0
        self.count = 0

    def closes_rainbow(self, e: int) -> bool:
        """Does edge e (already labelled) complete a rainbow kK2 with earlier edges?"""
        k = self.k
        if k == 1:
            return True
        n = self.n
        a0, b0 = divmod(e, n)
        x = self.labels[e]
        rows = []
        for a in range(a0):
            base = a * n
            row = [
                (b, self.labels[base + b])
                for b in range(n)
                if b != b0 and self.labels[base + b] != x
            ]
            rows.append(row)
        # Same-row edges share a0; later rows are unassigned.
        return rainbow_matching(rows, k - 1) is not None

    def run(self, prefix: tuple[int, ...] = ()) -> None:
        top = -1
        for i, x in enumerate(prefix):
            self.labels[i] = x
            if self.closes_rainbow(i):
                return
            top = max(top, x)
        self._descend(len(prefix), top + 1)

    def _descend(self, i: int, used: int) -> None:
        remaining = self.size - i
        if self.mode == "max":
            if used + remaining <= self.best:
                return
        elif used > self.target or used + remaining < self.target:
            return
        if remaining == 0:
            self.leaves += 1
            if self.mode == "max":
                self.best = used
                self.witness = tuple(self.labels)
            else:
                self.count += 1
            return
        labels = self.labels
        for x in range(used + 1):
            labels[i] = x
            if self.closes_rainbow(i):
                continue
            self._descend(i + 1, used + 1 if x == used else used)


def _check_oracle_args(m: int, n: int, k: int, limit: Optional[int]) -> int:
    check_parameters(m, n, k)
    cap = default_limit() if limit is None else limit
    if m * n > cap:
        raise OracleLimitError(
            f"K_{{{m},{n}}} has {m * n} edges, over the oracle limit {cap}; raise the limit explicitly"
        )
    return cap


def _shard_prefixes(size: int, jobs: int) -> list[tuple[int, ...]]:
    length = 0
    while length < size and len(rgs_prefixes(length)) < 8 * jobs:
        length += 1
    return rgs_prefixes(length)


def _run_max_shard(args) -> tuple[int, Optional[tuple[int, ...]], int]:
    m, n, k, prefix = args
    search = _Search(m, n, k, "max")
    search.run(prefix)
    return search.best, search.witness, search.leaves


def _run_count_shard(args) -> tuple[int, int]:
    m, n, k, target, prefix = args
    search = _Search(m, n, k, "count", target)
    search.run(prefix)
    return search.count, search.leaves


def _full_scan(m: int, n: int, k: int) -> tuple[int, Optional[tuple[int, ...]], int]:
    best, witness, scanned = 0, None, 0
    for classes in PartitionEnumerator(m * n):
        scanned += 1
        count = max(classes) + 1
        if count > best and is_rainbow_free(m, n, classes, k):
            best, witness = count, classes
    return best, witness, scanned


def brute_force_f(
    m: int,
    n: int,
    k: int,
    max_elements: Optional[int] = None,
    jobs: int = 1,
    prune: bool = True,
) -> OracleResult:
    """Exact f(K_{m,n}, kK2): the most classes in a partition of the edges with no rainbow kK2.

    ``f_exact`` is 0 (with no witness) when every coloring has a rainbow kK2,
    which happens exactly for k = 1. ``partitions_scanned`` counts the complete
    partitions reached after pruning. With ``jobs > 1`` the scan is split by
    restricted-growth prefix across processes; the result is the same.

    ``prune=False`` walks every one of the Bell(mn) partitions and tests each
    with :func:`find_rainbow`; it is the slow, literal definition and exists to
    cross-check the pruned search.
    """
    _check_oracle_args(m, n, k, max_elements)
    size = m * n
    if not prune:
        best, witness, leaves = _full_scan(m, n, k)
    elif jobs <= 1:
        search = _Search(m, n, k, "max")
        search.run()
        best, witness, leaves = search.best, search.witness, search.leaves
    else:
        tasks = [(m, n, k, p) for p in _shard_prefixes(size, jobs)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_run_max_shard, tasks))
        best, witness, leaves = 0, None, 0
        for shard_best, shard_witness, shard_leaves in parts:
            leaves += shard_leaves
            # shards are in enumeration order, so strict > keeps the first maximizer
            if shard_best > best:
                best, witness = shard_best, shard_witness
    return OracleResult(m, n, k, best, best + 1, witness, leaves)


def count_rainbow_free_partitions(
    m: int, n: int, k: int, class_count: int, max_elements: Optional[int] = None, jobs: int = 1
) -> int:
    """Number of partitions of the edges into exactly ``class_count`` classes with no rainbow kK2."""
    _check_oracle_args(m, n, k, max_elements)
    if class_count < 1 or class_count > m * n:
        return 0
    if jobs <= 1:
        search = _Search(m, n, k, "count", class_count)
        search.run()
        return search.count
    tasks = [(m, n, k, class_count, p) for p in _shard_prefixes(m * n, jobs)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return sum(count for count, _ in pool.map(_run_count_shard, tasks))


@dataclass(frozen=True)
class SweepRow:
    m: int
    n: int
    k: int
    formula_rb: int
    oracle_rb: int
    partitions: int

    @property
    def agree(self) -> bool:
        return self.formula_rb == self.oracle_rb

    def as_json(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "k": self.k,
            "formula_rb": self.formula_rb,
            "oracle_rb": self.oracle_rb,
            "agree": self.agree,
            "partitions": self.partitions,
        }


def sweep_parameters(limit: int) -> Iterator[tuple[int, int, int]]:
    """All (m, n, k) with 1 <= k <= n <= m and m * n <= limit."""
    for m in range(1, limit + 1):
        for n in range(1, m + 1):
            if m * n > limit:
                break
            for k in range(1, n + 1):
                yield m, n, k


def sweep_verify(limit: Optional[int] = None, jobs: int = 1) -> list[SweepRow]:
    cap = default_limit() if limit is None else limit
    rows = []
    for m, n, k in sweep_parameters(cap):
        oracle = brute_force_f(m, n, k, max_elements=cap, jobs=jobs)
        rows.append(SweepRow(m, n, k, rb_value(m, n, k).value, oracle.rb_exact, oracle.partitions_scanned))
    return rows

