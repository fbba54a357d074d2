"""Decoupled detection pipeline: spatial clustering, per-cluster social
communities, then a global maximality filter.  A search variant restricts
to a query user's neighborhood first.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

from .approx import find_gasc
from .baseline import clique_clusters
from .gsc import PruneLevel, global_spatial_clusters
from .model import (
    Community,
    GeoPoint,
    GeoSocialNetwork,
    Params,
    SocialKind,
    SpatialCluster,
)
from .social import induced_subgraph, k_core_communities, k_truss_communities
from .spatial_index import build_grid, range_query_disk


class SpatialAlgo(enum.Enum):
    EXACT = "exact"
    EXACT_RULE1 = "exact-r1"
    EXACT_RULE12 = "exact-r12"
    APPROX = "approx"
    CLIQUE_BASELINE = "clique"


_PRUNE_OF = {
    SpatialAlgo.EXACT: PruneLevel.NONE,
    SpatialAlgo.EXACT_RULE1: PruneLevel.RULE1,
    SpatialAlgo.EXACT_RULE12: PruneLevel.RULE1_2,
}

#: distance guarantee carried by each spatial mode's output
BOUND_OF = {
    SpatialAlgo.EXACT: "exact",
    SpatialAlgo.EXACT_RULE1: "exact",
    SpatialAlgo.EXACT_RULE12: "exact",
    SpatialAlgo.APPROX: "sqrt2",
    SpatialAlgo.CLIQUE_BASELINE: "all_pair",
}


@dataclass(frozen=True)
class DetectionConfig:
    params: Params
    spatial_algo: SpatialAlgo = SpatialAlgo.EXACT_RULE12
    precluster_by_core: bool = False
    clique_budget: int | None = None


def spatial_clusters(
    points: Sequence[GeoPoint], cfg: DetectionConfig, threads: int = 1
) -> list[SpatialCluster]:
    """Stage-1 dispatch: spatial clusters per the configured algorithm."""
    p = cfg.params
    if cfg.spatial_algo in _PRUNE_OF:
        return global_spatial_clusters(
            points,
            p.d,
            k=p.k,
            prune_level=_PRUNE_OF[cfg.spatial_algo],
            eps=p.eps,
            threads=threads,
        )
    if cfg.spatial_algo is SpatialAlgo.APPROX:
        return find_gasc(points, p.d, k=p.k, eps=p.eps)
    return clique_clusters(points, p.d, eps=p.eps, max_cliques=cfg.clique_budget)


def _communities_of(sub, params: Params) -> list[Community]:
    if params.social_kind is SocialKind.CORE:
        return k_core_communities(sub, params.k)
    return k_truss_communities(sub, params.k)


def _local_communities(
    g: GeoSocialNetwork, cfg: DetectionConfig, threads: int
) -> list[Community]:
    locals_: list[Community] = []
    for cluster in spatial_clusters(g.points, cfg, threads=threads):
        sub = induced_subgraph(g, cluster.members)
        locals_.extend(_communities_of(sub, cfg.params))
    return locals_


def detect_mccs(
    g: GeoSocialNetwork, cfg: DetectionConfig, threads: int = 1
) -> list[Community]:
    """All maximal communities satisfying both constraints.

    With precluster_by_core on, the pipeline first splits the network into
    core components (a valid community always lies inside one) and runs
    per component; the result is identical either way.
    """
    params = cfg.params
    if cfg.precluster_by_core:
        # a k-truss needs minimum degree k-1, so the (k-1)-core suffices
        pre_k = params.k if params.social_kind is SocialKind.CORE else max(params.k - 1, 1)
        locals_: list[Community] = []
        for comp in k_core_communities(g, pre_k):
            sub = g.subnetwork(comp.members)
            locals_.extend(_local_communities(sub, cfg, threads))
        return find_global_mcc(locals_)
    return find_global_mcc(_local_communities(g, cfg, threads))


def find_global_mcc(local: Iterable[Community]) -> list[Community]:
    """Drop every community contained in (or equal to) another."""
    distinct: dict[tuple[int, ...], Community] = {}
    for c in local:
        distinct.setdefault(c.members, c)
    ordered = sorted(distinct.values(), key=lambda c: (-len(c.members), c.members))
    kept: list[Community] = []
    kept_sets: list[frozenset[int]] = []
    for c in ordered:
        mset = frozenset(c.members)
        if any(mset <= other for other in kept_sets):
            continue
        kept.append(c)
        kept_sets.append(mset)
    return sorted(kept, key=lambda c: c.members)


def search_mccs(
    g: GeoSocialNetwork, q: int, cfg: DetectionConfig, threads: int = 1
) -> list[Community]:
    """Communities containing the query user, within distance d of them."""
    params = cfg.params
    qp = g.point(q)
    grid = build_grid(g.points, params.d)
    ball = range_query_disk(grid, qp, params.d, params.eps)
    sub = g.subnetwork(ball)
    mccs = detect_mccs(sub, cfg, threads=threads)
    return find_global_mcc(c for c in mccs if q in c.members)
