"""Angular sweep: all maximal point sets coverable by a circle of radius r
whose boundary passes through a fixed reference point.

Rotating the covering circle's center around the reference point v, a
candidate u at distance d_u <= 2r from v is enclosed exactly while the
rotation angle stays within arccos(d_u / 2r) of u's bearing from v.  Each
candidate therefore contributes one closed angular window, and the
coverable sets are the stabbing groups of those windows on the circle.
The circle is unrolled onto a doubled line (every window duplicated one
full turn later) so groups straddling the seam are still found; candidate
groups are then deduplicated and reduced to the inclusion-maximal ones.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .intervals import maximal_stabbing_groups
from .model import (
    DEFAULT_EPS,
    ClusterKind,
    GeoPoint,
    GeoSocError,
    SpatialCluster,
    euclidean_distance,
    maximal_distinct,
)

TAU = 2.0 * math.pi


class TooFar(GeoSocError):
    """Candidate point cannot be covered together with the reference."""


@dataclass(frozen=True)
class AngularInterval:
    """Closed rotation-angle window during which one point stays enclosed."""

    node: int
    start: float
    end: float
    full_circle: bool = False


def angular_interval(
    v: GeoPoint, u: GeoPoint, r: float, eps: float = DEFAULT_EPS
) -> AngularInterval:
    """Window of center angles for which the circle through v encloses u."""
    dist = euclidean_distance(v, u)
    if dist > 2 * r + eps:
        raise TooFar(f"point {u.id} is {dist:.6g} away from {v.id}, beyond 2r = {2 * r:.6g}")
    if dist <= eps:
        return AngularInterval(u.id, 0.0, TAU, full_circle=True)
    alpha = math.atan2(u.y - v.y, u.x - v.x)
    width = math.acos(min(1.0, max(0.0, dist / (2 * r))))
    return AngularInterval(u.id, alpha - width, alpha + width)


def local_member_families(
    v: GeoPoint,
    candidates: Iterable[GeoPoint],
    r: float,
    eps: float = DEFAULT_EPS,
) -> list[tuple[int, ...]]:
    """Member-id tuples of all maximal sets coverable by a radius-r circle
    through v, in canonical order.  Backs local_spatial_clusters."""
    base = [v.id]
    windows: list[AngularInterval] = []
    for u in candidates:
        if u.id == v.id:
            continue
        w = angular_interval(v, u, r, eps)
        if w.full_circle:
            base.append(u.id)
        else:
            windows.append(w)
    if not windows:
        return [tuple(sorted(base))]
    spans = [(w.start, w.end) for w in windows]
    spans += [(w.start + TAU, w.end + TAU) for w in windows]
    families: set[frozenset[int]] = set()
    for group in maximal_stabbing_groups(spans):
        ids = {windows[i % len(windows)].node for i in group}
        ids.update(base)
        families.add(frozenset(ids))
    return sorted(tuple(sorted(f)) for f in maximal_distinct(families))


def local_spatial_clusters(
    v: GeoPoint,
    candidates: Iterable[GeoPoint],
    r: float,
    eps: float = DEFAULT_EPS,
) -> list[SpatialCluster]:
    """All maximal sets coverable by a radius-r circle through v.

    Every returned cluster contains v; no cluster is a subset of another.
    Candidates coincident with v are enclosed by every such circle and so
    join every cluster.
    """
    return [
        SpatialCluster(members, v.id, ClusterKind.EXACT_CIRCLE)
        for members in local_member_families(v, candidates, r, eps)
    ]


def circle_center(v: GeoPoint, r: float, theta: float) -> tuple[float, float]:
    """Center of the covering circle through v at rotation angle theta."""
    return (v.x + r * math.cos(theta), v.y + r * math.sin(theta))


def window_contains(w: AngularInterval, theta: float, tol: float = 1e-12) -> bool:
    """Closed membership of an angle in a window, modulo full turns."""
    if w.full_circle:
        return True
    for t in (theta - TAU, theta, theta + TAU):
        if w.start - tol <= t <= w.end + tol:
            return True
    return False


def witness_angle(
    v: GeoPoint, members: Sequence[GeoPoint], r: float, eps: float = DEFAULT_EPS
) -> float | None:
    """Some rotation angle whose circle covers all members, if one exists.

    If a common angle exists, the boundary of the common arc is a window
    endpoint, so checking endpoints only is sufficient.
    """
    windows = [angular_interval(v, u, r, eps) for u in members if u.id != v.id]
    windows = [w for w in windows if not w.full_circle]
    if not windows:
        return 0.0
    for w in windows:
        for theta in (w.start, w.end):
            if all(window_contains(x, theta) for x in windows):
                return theta
    return None
