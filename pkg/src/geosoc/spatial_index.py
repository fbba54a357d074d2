"""Uniform-grid index over points with disk and rectangle range queries."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

from .model import DEFAULT_EPS, DuplicateId, GeoPoint, GeoSocError


class NonPositiveCellSize(GeoSocError):
    """Grid cells must have a positive side length."""


class EmptyRange(GeoSocError):
    """Rectangle query with inverted bounds."""


@dataclass(frozen=True)
class GridIndex:
    """Points bucketed by cell (floor(x/cell), floor(y/cell)); immutable."""

    cell_size: float
    buckets: dict[tuple[int, int], tuple[int, ...]]
    point_map: dict[int, GeoPoint]
    bounds: tuple[float, float, float, float] | None  # min_x, min_y, max_x, max_y

    @property
    def n_points(self) -> int:
        return len(self.point_map)


def build_grid(points: Iterable[GeoPoint], cell_size: float) -> GridIndex:
    if not (math.isfinite(cell_size) and cell_size > 0):
        raise NonPositiveCellSize(f"cell size must be positive, got {cell_size}")
    buckets: dict[tuple[int, int], list[int]] = {}
    pmap: dict[int, GeoPoint] = {}
    for p in points:
        if p.id in pmap:
            raise DuplicateId(f"point id {p.id} appears twice")
        pmap[p.id] = p
        key = (math.floor(p.x / cell_size), math.floor(p.y / cell_size))
        buckets.setdefault(key, []).append(p.id)
    bounds = None
    if pmap:
        xs = [p.x for p in pmap.values()]
        ys = [p.y for p in pmap.values()]
        bounds = (min(xs), min(ys), max(xs), max(ys))
    frozen = {key: tuple(ids) for key, ids in buckets.items()}
    return GridIndex(cell_size, frozen, pmap, bounds)


def _cells(idx: GridIndex, x_lo: float, x_hi: float, y_lo: float, y_hi: float):
    min_x, min_y, max_x, max_y = idx.bounds
    x_lo, x_hi = max(x_lo, min_x), min(x_hi, max_x)
    y_lo, y_hi = max(y_lo, min_y), min(y_hi, max_y)
    if x_lo > x_hi or y_lo > y_hi:
        return
    cs = idx.cell_size
    for cx in range(math.floor(x_lo / cs), math.floor(x_hi / cs) + 1):
        for cy in range(math.floor(y_lo / cs), math.floor(y_hi / cs) + 1):
            bucket = idx.buckets.get((cx, cy))
            if bucket:
                yield bucket


def range_query_disk(
    idx: GridIndex, center: GeoPoint, radius: float, eps: float = DEFAULT_EPS
) -> list[int]:
    """Ids of indexed points within radius (closed, eps slack), ascending."""
    if radius < 0:
        raise ValueError("radius must be >= 0")
    if not idx.point_map:
        return []
    reach = radius + eps
    out: list[int] = []
    pmap = idx.point_map
    for bucket in _cells(idx, center.x - reach, center.x + reach, center.y - reach, center.y + reach):
        for pid in bucket:
            p = pmap[pid]
            if math.hypot(p.x - center.x, p.y - center.y) <= reach:
                out.append(pid)
    out.sort()
    return out


def range_query_rect(
    idx: GridIndex,
    x_lo: float,
    x_hi: float,
    y_lo: float,
    y_hi: float,
    eps: float = DEFAULT_EPS,
) -> list[int]:
    """Ids inside the closed rectangle (eps slack), ascending."""
    if x_lo > x_hi or y_lo > y_hi:
        raise EmptyRange(f"inverted bounds: [{x_lo}, {x_hi}] x [{y_lo}, {y_hi}]")
    if not idx.point_map:
        return []
    out: list[int] = []
    pmap = idx.point_map
    for bucket in _cells(idx, x_lo - eps, x_hi + eps, y_lo - eps, y_hi + eps):
        for pid in bucket:
            p = pmap[pid]
            if x_lo - eps <= p.x <= x_hi + eps and y_lo - eps <= p.y <= y_hi + eps:
                out.append(pid)
    out.sort()
    return out
