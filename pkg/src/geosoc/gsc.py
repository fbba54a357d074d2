"""Global spatial clusters: sweep every reference point, then keep the
inclusion-maximal member sets.

Subset filtering is the quadratic bottleneck, so two prunes cut the number
of element-wise set comparisons without changing the result:

* reference-distance prune: clusters whose reference points are more than
  d apart can never contain one another (both references would have to sit
  inside one circle of diameter d);
* center-rectangle prune: a cluster's covering-circle centers live in a
  small rectangle, and containment forces the two rectangles to intersect.
"""

from __future__ import annotations

import enum
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .model import (
    DEFAULT_EPS,
    CenterRect,
    ClusterKind,
    GeoPoint,
    GeoSocError,
    SpatialCluster,
)
from .spatial_index import build_grid, range_query_disk
from .sweep_exact import local_member_families


class PruneLevel(enum.Enum):
    NONE = "none"
    RULE1 = "rule1"
    RULE1_2 = "rule1_2"


class MissingCenterRect(GeoSocError):
    """Rectangle pruning requested but a cluster carries no rectangle."""


class EmptyCluster(GeoSocError):
    """A cluster operation received no members."""


@dataclass
class ComparisonStats:
    """Number of element-wise subset comparisons actually executed."""

    comparisons: int = 0


def center_rect(members: Sequence[GeoPoint], r: float) -> CenterRect:
    """Feasible covering-circle centers for the given member points."""
    if not members:
        raise EmptyCluster("cannot build a center rectangle from zero points")
    xs = [p.x for p in members]
    ys = [p.y for p in members]
    return CenterRect(max(xs) - r, min(xs) + r, max(ys) - r, min(ys) + r)


def rects_intersect(a: CenterRect, b: CenterRect, eps: float = DEFAULT_EPS) -> bool:
    """Closed rectangle overlap with eps slack."""
    return (
        a.x_lo <= b.x_hi + eps
        and b.x_lo <= a.x_hi + eps
        and a.y_lo <= b.y_hi + eps
        and b.y_lo <= a.y_hi + eps
    )


def find_gsc(
    lscs: Iterable[SpatialCluster],
    k: int = 1,
    prune_level: PruneLevel = PruneLevel.NONE,
    d: float | None = None,
    points: Iterable[GeoPoint] | Mapping[int, GeoPoint] | None = None,
    eps: float = DEFAULT_EPS,
    neighbor_cache: Mapping[int, Sequence[int]] | None = None,
) -> tuple[list[SpatialCluster], ComparisonStats]:
    """Keep clusters of size >= k that are not contained in any other.

    The output is identical for every prune level; only the comparison
    count changes.  Reference-distance pruning needs d and the reference
    point coordinates; rectangle pruning additionally needs every cluster
    to carry its center rectangle.  neighbor_cache may map a reference id
    to the ids within d of it (eps-closed) to skip repeated range queries.
    """
    stats = ComparisonStats()
    distinct: dict[tuple[int, ...], SpatialCluster] = {}
    for c in lscs:
        if len(c.members) < k:
            continue
        distinct.setdefault(c.members, c)
    clusters = sorted(distinct.values(), key=lambda c: (-len(c.members), c.members))

    use_ref = prune_level in (PruneLevel.RULE1, PruneLevel.RULE1_2)
    use_rect = prune_level is PruneLevel.RULE1_2
    if use_rect:
        for c in clusters:
            if c.center_rect is None:
                raise MissingCenterRect(
                    f"cluster {c.members} has no center rectangle but "
                    f"prune level {prune_level.value} was requested"
                )
    near_refs: dict[int, Sequence[int]] = dict(neighbor_cache) if neighbor_cache else {}
    ref_grid = None
    pmap: dict[int, GeoPoint] = {}
    if use_ref:
        if d is None or points is None:
            raise ValueError("reference pruning needs d and reference point coordinates")
        pmap = dict(points) if isinstance(points, Mapping) else {p.id: p for p in points}
        refs = {c.reference for c in clusters}
        if refs - near_refs.keys():
            # queries must see every reference, so index them all
            ref_grid = build_grid([pmap[rid] for rid in sorted(refs)], d)

    accepted_sets: list[frozenset[int]] = []
    accepted_clusters: list[SpatialCluster] = []
    accepted_rects: list[CenterRect | None] = []
    by_ref: dict[int, list[int]] = {}
    comparisons = 0
    for c in clusters:
        mset = frozenset(c.members)
        if use_ref:
            near = near_refs.get(c.reference)
            if near is None:
                near = range_query_disk(ref_grid, pmap[c.reference], d, eps)
                near_refs[c.reference] = near
            candidate_idx: list[int] = []
            for rid in near:
                hit = by_ref.get(rid)
                if hit:
                    candidate_idx.extend(hit)
            candidate_idx.sort()
        else:
            candidate_idx = range(len(accepted_sets))
        contained = False
        if use_rect:
            rect = c.center_rect
            x_lo, x_hi, y_lo, y_hi = rect.x_lo, rect.x_hi, rect.y_lo, rect.y_hi
            for i in candidate_idx:
                other = accepted_rects[i]
                if (
                    x_lo > other.x_hi + eps
                    or other.x_lo > x_hi + eps
                    or y_lo > other.y_hi + eps
                    or other.y_lo > y_hi + eps
                ):
                    continue
                comparisons += 1
                if mset <= accepted_sets[i]:
                    contained = True
                    break
        else:
            for i in candidate_idx:
                comparisons += 1
                if mset <= accepted_sets[i]:
                    contained = True
                    break
        if not contained:
            by_ref.setdefault(c.reference, []).append(len(accepted_sets))
            accepted_sets.append(mset)
            accepted_clusters.append(c)
            accepted_rects.append(c.center_rect)

    stats.comparisons = comparisons
    out = sorted(accepted_clusters, key=lambda c: c.members)
    return out, stats


def global_spatial_clusters(
    points: Sequence[GeoPoint],
    d: float,
    k: int = 1,
    prune_level: PruneLevel = PruneLevel.RULE1_2,
    eps: float = DEFAULT_EPS,
    threads: int = 1,
    stats_out: ComparisonStats | None = None,
) -> list[SpatialCluster]:
    """Every maximal set coverable by a circle of diameter d, size >= k.

    For each point, candidates within d are swept for local clusters; the
    union of local families is then subset-filtered.  Skipping points with
    fewer than k candidates in reach is safe because a size-k cluster puts
    at least k points within d of each of its members.
    """
    if d <= 0:
        raise ValueError("distance threshold d must be positive")
    pts = list(points)
    if not pts:
        return []
    grid = build_grid(pts, d)
    pmap = grid.point_map
    r = d / 2
    attach_rects = prune_level is PruneLevel.RULE1_2

    def local_family(v: GeoPoint) -> tuple[list[int], list[SpatialCluster]]:
        in_reach = range_query_disk(grid, v, d, eps)
        if len(in_reach) < k:
            return in_reach, []
        cands = [pmap[i] for i in in_reach if i != v.id]
        clusters = []
        for members in local_member_families(v, cands, r, eps):
            rect = center_rect([pmap[i] for i in members], r) if attach_rects else None
            clusters.append(SpatialCluster(members, v.id, ClusterKind.EXACT_CIRCLE, rect))
        return in_reach, clusters

    all_lscs: list[SpatialCluster] = []
    neighbor_cache: dict[int, list[int]] = {}
    if threads > 1:
        chunk = max(1, len(pts) // (threads * 8))
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = pool.map(local_family, pts, chunksize=chunk)
            for v, (in_reach, family) in zip(pts, results):
                neighbor_cache[v.id] = in_reach
                all_lscs.extend(family)
    else:
        for v in pts:
            in_reach, family = local_family(v)
            neighbor_cache[v.id] = in_reach
            all_lscs.extend(family)

    out, stats = find_gsc(
        all_lscs,
        k=k,
        prune_level=prune_level,
        d=d,
        points=pmap,
        eps=eps,
        neighbor_cache=neighbor_cache,
    )
    if stats_out is not None:
        stats_out.comparisons = stats.comparisons
    return out
