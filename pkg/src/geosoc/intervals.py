"""Maximal stabbing groups of closed 1-D intervals.

This is the primitive behind both the angular sweep (after unrolling the
circle onto a doubled line) and the vertical square sweep: given closed
intervals, find every inclusion-maximal group of intervals that share a
common point.
"""

from __future__ import annotations

import heapq
from typing import Sequence


def maximal_stabbing_groups(intervals: Sequence[tuple[float, float]]) -> list[tuple[int, ...]]:
    """Indices of every maximal group of intervals with a common point.

    Events are processed in ascending start order (ties broken by end,
    then index).  The active set always shares its minimum end; a start
    strictly past that minimum closes the current group.  Groups are
    emitted before eviction, so each emitted group is exactly the set of
    intervals containing its minimum end, which on a line are precisely
    the inclusion-maximal groups.
    """
    for s, e in intervals:
        if s > e:
            raise ValueError(f"interval start {s} exceeds end {e}")
    order = sorted(range(len(intervals)), key=lambda i: (intervals[i][0], intervals[i][1], i))
    active: dict[int, float] = {}
    heap: list[tuple[float, int]] = []
    groups: list[tuple[int, ...]] = []
    for i in order:
        start, end = intervals[i]
        if heap and start > heap[0][0]:
            groups.append(tuple(active))
            while heap and heap[0][0] < start:
                _, j = heapq.heappop(heap)
                del active[j]
        active[i] = end
        heapq.heappush(heap, (end, i))
    if active:
        groups.append(tuple(active))
    return groups
