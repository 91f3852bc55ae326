"""Set partitions as restricted-growth strings and the k-distant noncrossing predicate."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

__all__ = [
    "SetPartition",
    "Arc",
    "ResourceBoundError",
    "DEFAULT_MAX_PARTITION_N",
    "enumerate_partitions",
    "arcs",
    "is_k_distant_noncrossing",
    "count_nc",
    "count_nc_filter",
    "bell",
]

DEFAULT_MAX_PARTITION_N = 13


class ResourceBoundError(ValueError):
    """A request exceeds a configured size bound."""


Arc = tuple[int, int]


@dataclass(frozen=True)
class SetPartition:
    """Partition of ``{1..n}`` stored as its restricted-growth string (0-based block labels)."""

    rgs: tuple[int, ...]

    def __post_init__(self) -> None:
        top = -1
        for i, a in enumerate(self.rgs):
            if a < 0 or a > top + 1:
                raise ValueError(f"not a restricted-growth string at position {i}: {self.rgs}")
            top = max(top, a)

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[int]]) -> SetPartition:
        blocks = [sorted(b) for b in blocks if b]
        elems = sorted(e for b in blocks for e in b)
        n = len(elems)
        if elems != list(range(1, n + 1)):
            raise ValueError(f"blocks do not partition 1..{n}: {blocks}")
        owner = {e: j for j, b in enumerate(sorted(blocks)) for e in b}
        relabel: dict[int, int] = {}
        rgs = []
        for e in range(1, n + 1):
            rgs.append(relabel.setdefault(owner[e], len(relabel)))
        return cls(tuple(rgs))

    @property
    def n(self) -> int:
        return len(self.rgs)

    def blocks(self) -> list[list[int]]:
        out: list[list[int]] = []
        for e, a in enumerate(self.rgs, start=1):
            if a == len(out):
                out.append([])
            out[a].append(e)
        return out

    def __str__(self) -> str:
        return "{" + ",".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks()) + "}"


def enumerate_partitions(n: int) -> Iterator[SetPartition]:
    """All partitions of ``[n]`` in lexicographic restricted-growth order."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n == 0:
        yield SetPartition(())
        return
    a = [0] * n
    mx = [0] * n  # mx[i] = max(a[0..i])
    while True:
        yield SetPartition(tuple(a))
        i = n - 1
        while i > 0 and a[i] > mx[i - 1]:
            i -= 1
        if i == 0:
            return
        a[i] += 1
        mx[i] = max(mx[i - 1], a[i])
        for j in range(i + 1, n):
            a[j] = 0
            mx[j] = mx[i]


def arcs(p: SetPartition) -> list[Arc]:
    """Consecutive pairs within each block, block by block."""
    return [(b[j], b[j + 1]) for b in p.blocks() for j in range(len(b) - 1)]


def is_k_distant_noncrossing(p: SetPartition, k: int) -> bool:
    """No arcs ``(a, c)``, ``(b, d)`` with ``a < b <= c < d`` and ``c - b >= k``."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    arc_list = arcs(p)
    for a, c in arc_list:
        for b, d in arc_list:
            if a < b <= c < d and c - b >= k:
                return False
    return True


def bell(n: int) -> int:
    """Bell number via the Bell triangle."""
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for v in row:
            nxt.append(nxt[-1] + v)
        row = nxt
    return row[0]


def _bound(max_n: int | None) -> int:
    return DEFAULT_MAX_PARTITION_N if max_n is None else max_n


def count_nc_filter(k: int, n: int, max_n: int | None = None) -> int:
    """``#NC_k(n)`` by testing every partition from :func:`enumerate_partitions`."""
    if n < 0 or k < 0:
        raise ValueError(f"need n >= 0 and k >= 0, got n={n}, k={k}")
    if n > _bound(max_n):
        raise ResourceBoundError(f"partition size {n} exceeds bound {_bound(max_n)} (Bell({n}) = {bell(n)})")
    return sum(1 for p in enumerate_partitions(n) if is_k_distant_noncrossing(p, k))


def count_nc(k: int, n: int, max_n: int | None = None) -> int:
    """``#NC_k(n)``, the number of k-distant noncrossing partitions of ``[n]``.

    Walks the restricted-growth tree and drops a prefix as soon as its newest
    arc completes a forbidden pair; arcs never change once formed, so every
    rejected prefix has only rejected extensions.
    """
    if n < 0 or k < 0:
        raise ValueError(f"need n >= 0 and k >= 0, got n={n}, k={k}")
    bound = _bound(max_n)
    if n > bound:
        raise ResourceBoundError(f"partition size {n} exceeds bound {bound} (Bell({n}) = {bell(n)})")
    return _count_nc(k, n)


@lru_cache(maxsize=None)
def _count_nc(k: int, n: int) -> int:
    if n == 0:
        return 1
    last: list[int] = []  # last element of each open block
    arc_list: list[Arc] = []

    def crosses(b: int, d: int) -> bool:
        # new arc (b, d) has the largest right end so far: it can only be the (b, d) of a pattern
        for a, c in arc_list:
            if a < b <= c < d and c - b >= k:
                return True
        return False

    def rec(e: int) -> int:
        if e > n:
            return 1
        total = 0
        for j in range(len(last)):
            b = last[j]
            if crosses(b, e):
                continue
            arc_list.append((b, e))
            last[j] = e
            total += rec(e + 1)
            last[j] = b
            arc_list.pop()
        last.append(e)
        total += rec(e + 1)
        last.pop()
        return total

    return rec(1)
