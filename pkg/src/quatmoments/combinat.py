"""Small combinatorial helpers used across the package."""

from __future__ import annotations

from typing import Iterator


def double_factorial(n: int) -> int:
    """(n)!! for odd n >= -1; number of pair partitions of n+1 points."""
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out


def partitions(total: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Integer partitions of ``total`` in weakly decreasing order."""
    if total == 0:
        yield ()
        return
    if max_part is None or max_part > total:
        max_part = total
    for first in range(max_part, 0, -1):
        for rest in partitions(total - first, first):
            yield (first,) + rest


def restricted_growth_strings(length: int, max_classes: int) -> Iterator[tuple[int, ...]]:
    """Set partitions of ``range(length)`` into at most ``max_classes`` blocks,
    encoded as restricted growth strings (class of each position, classes
    numbered 0.. in order of first appearance)."""
    if length == 0:
        yield ()
        return

    def rec(prefix: list[int], used: int) -> Iterator[tuple[int, ...]]:
        if len(prefix) == length:
            yield tuple(prefix)
            return
        top = min(used + 1, max_classes)
        for c in range(top):
            prefix.append(c)
            yield from rec(prefix, max(used, c + 1))
            prefix.pop()

    yield from rec([], 0)
