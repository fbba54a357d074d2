"""Square-sweep approximation: maximal point sets coverable by an
axis-aligned square of side d.

Every covering square can be slid so its left edge touches the leftmost
covered point, so processing points by ascending x and sweeping a height-d
window over each point's right-hand slab finds every candidate.  A label
registry over already-emitted clusters answers containment by looking at
just three extreme members, which keeps the global filter near-linear.
Output clusters have diameter at most sqrt(2) * d.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .intervals import maximal_stabbing_groups
from .model import DEFAULT_EPS, ClusterKind, GeoPoint, SpatialCluster
from .spatial_index import build_grid, range_query_rect

_NO_LABELS: frozenset[int] = frozenset()


@dataclass
class GascRegistry:
    """Labels of emitted clusters, indexed by member point id."""

    points: dict[int, GeoPoint]
    node_gasc: dict[int, set[int]] = field(default_factory=dict)
    next_label: int = 0

    def register(self, cs: SpatialCluster) -> int:
        return self.register_members(cs.members)

    def register_members(self, members: Iterable[int]) -> int:
        label = self.next_label
        self.next_label += 1
        node_gasc = self.node_gasc
        for m in members:
            bucket = node_gasc.get(m)
            if bucket is None:
                node_gasc[m] = {label}
            else:
                bucket.add(label)
        return label

    def labels(self, pid: int):
        return self.node_gasc.get(pid, _NO_LABELS)


def _window_groups(p: GeoPoint, slab: Sequence[GeoPoint], d: float, eps: float):
    """Stabbing groups of top-edge windows, as tuples of slab indices.

    Point q is covered by the square with top edge t while t is in
    [q.y, q.y + d], clipped to [p.y, p.y + d] so p stays on the left edge.
    """
    py = p.y
    spans: list[tuple[float, float]] = []
    keep: list[GeoPoint] = []
    for q in slab:
        qy = q.y
        lo = (qy if qy > py else py) - eps
        hi = (qy if qy < py else py) + d + eps
        if lo <= hi:
            spans.append((lo, hi))
            keep.append(q)
    return maximal_stabbing_groups(spans), keep


def local_approx_clusters(
    p: GeoPoint,
    slab: Iterable[GeoPoint],
    d: float,
    eps: float = DEFAULT_EPS,
) -> list[SpatialCluster]:
    """Maximal subsets of the slab coverable by a side-d square whose left
    edge passes through p.

    The square's horizontal extent is fixed at [p.x, p.x + d], so only the
    top edge remains free; the maximal stabbing groups of the per-point
    top-edge windows are exactly the answer, and every group contains p.
    """
    pts = list(slab)
    if all(q.id != p.id for q in pts):
        pts.append(p)
    groups, keep = _window_groups(p, pts, d, eps)
    clusters = [
        SpatialCluster.from_members(
            (keep[i].id for i in group), p.id, ClusterKind.APPROX_SQUARE
        )
        for group in groups
    ]
    clusters.sort(key=lambda c: c.members)
    return clusters


def _extreme_ids(points: Sequence[GeoPoint]) -> tuple[int, int, int]:
    """Ids of the lowest, highest, and rightmost points (ties: smallest id)."""
    min_y = max_y = max_x = points[0]
    for q in points[1:]:
        if q.y < min_y.y or (q.y == min_y.y and q.id < min_y.id):
            min_y = q
        if q.y > max_y.y or (q.y == max_y.y and q.id < max_y.id):
            max_y = q
        if q.x > max_x.x or (q.x == max_x.x and q.id < max_x.id):
            max_x = q
    return min_y.id, max_y.id, max_x.id


def check_global(reg: GascRegistry, cs: SpatialCluster) -> bool:
    """False when cs is contained in an already-registered cluster.

    With points processed by ascending x, any square covering cs has its
    left edge at or before min-x(cs), so every potential container is
    already registered, and cs is contained in one exactly when its
    lowest, highest, and rightmost members all carry a common label.
    """
    return _check_extremes(reg, _extreme_ids([reg.points[m] for m in cs.members]))


def _check_extremes(reg: GascRegistry, extremes: tuple[int, int, int]) -> bool:
    min_y, max_y, max_x = extremes
    first = reg.labels(min_y)
    if not first:
        return True
    common = first & reg.labels(max_y)
    if not common:
        return True
    return not (common & reg.labels(max_x))


def iter_gasc(
    points: Sequence[GeoPoint],
    d: float,
    k: int = 1,
    eps: float = DEFAULT_EPS,
) -> Iterator[SpatialCluster]:
    """Stream all maximal square-coverable sets of size >= k.

    Clusters are yielded as soon as they are known to be global, in
    processing order (ascending x of the reference point).
    """
    if d <= 0:
        raise ValueError("distance threshold d must be positive")
    pts = sorted(points, key=lambda p: (p.x, p.y, p.id))
    if not pts:
        return
    grid = build_grid(pts, d)
    pmap = grid.point_map
    reg = GascRegistry(pmap)
    epoch_x: float | None = None
    same_x_sets: list[frozenset[int]] = []
    for p in pts:
        if epoch_x != p.x:
            epoch_x, same_x_sets = p.x, []
        slab_ids = range_query_rect(grid, p.x, p.x + d, p.y - d, p.y + d, eps)
        slab = [pmap[i] for i in slab_ids]
        groups, keep = _window_groups(p, slab, d, eps)
        for group in groups:
            if len(group) < k:
                continue
            member_points = [keep[i] for i in group]
            if not _check_extremes(reg, _extreme_ids(member_points)):
                continue
            members = tuple(sorted(q.id for q in member_points))
            # references sharing one x lack the strict left-to-right order;
            # fall back to direct comparison within the current x epoch
            mset = frozenset(members)
            if any(mset <= other for other in same_x_sets):
                continue
            same_x_sets.append(mset)
            reg.register_members(members)
            yield SpatialCluster(members, p.id, ClusterKind.APPROX_SQUARE)


def find_gasc(
    points: Sequence[GeoPoint],
    d: float,
    k: int = 1,
    eps: float = DEFAULT_EPS,
) -> list[SpatialCluster]:
    """All maximal square-coverable sets of size >= k (materialised)."""
    return list(iter_gasc(points, d, k, eps))
