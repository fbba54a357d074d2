"""Core value types shared across the package.

Coordinates live in an abstract planar unit system (meters once a
geographic input has been projected).  Everything here is immutable after
construction and safe to share between threads.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

DEFAULT_EPS = 1e-9


class GeoSocError(Exception):
    """Base class for all errors raised by this package."""


class DuplicateId(GeoSocError):
    """Two inputs claim the same vertex id."""


class UnknownVertex(GeoSocError):
    """An id does not belong to the network at hand."""


class SocialKind(enum.Enum):
    """Which social-cohesiveness engine a community was checked against."""

    CORE = "core"
    TRUSS = "truss"


class ClusterKind(enum.Enum):
    """Provenance of a spatial cluster."""

    EXACT_CIRCLE = "exact_circle"
    APPROX_SQUARE = "approx_square"
    ALL_PAIR = "all_pair"  # clique baseline: pairwise distances, no covering shape


@dataclass(frozen=True)
class GeoPoint:
    id: int
    x: float
    y: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"point {self.id}: coordinates must be finite")


def euclidean_distance(a: GeoPoint, b: GeoPoint) -> float:
    """Planar Euclidean distance between two points."""
    return math.hypot(a.x - b.x, a.y - b.y)


@dataclass(frozen=True)
class CenterRect:
    """Axis-aligned rectangle of feasible covering-circle centers.

    For members with coordinate extremes (x_min, x_max, y_min, y_max) and
    radius r the rectangle is [x_max-r, x_min+r] x [y_max-r, y_min+r]; it
    is non-empty (up to tolerance) exactly when a radius-r circle can
    cover all members.
    """

    x_lo: float
    x_hi: float
    y_lo: float
    y_hi: float


@dataclass(frozen=True)
class Params:
    """Detection parameters; the covering radius r is always d/2."""

    d: float
    k: int = 1
    social_kind: SocialKind = SocialKind.CORE
    eps: float = DEFAULT_EPS

    def __post_init__(self) -> None:
        if not (math.isfinite(self.d) and self.d > 0):
            raise ValueError("distance threshold d must be positive and finite")
        if self.k < 1:
            raise ValueError("social constraint parameter k must be >= 1")
        if self.eps < 0:
            raise ValueError("eps must be >= 0")

    @property
    def r(self) -> float:
        return self.d / 2


def _check_members(members: tuple[int, ...]) -> None:
    if not members:
        raise ValueError("member set must be non-empty")
    for a, b in zip(members, members[1:]):
        if a >= b:
            raise ValueError("members must be strictly increasing")


@dataclass(frozen=True)
class SpatialCluster:
    """A canonical (sorted, duplicate-free) set of co-located point ids."""

    members: tuple[int, ...]
    reference: int
    kind: ClusterKind
    center_rect: CenterRect | None = None

    def __post_init__(self) -> None:
        _check_members(self.members)
        if self.reference not in self.members:
            raise ValueError("reference point must be a member")

    @classmethod
    def from_members(
        cls,
        members: Iterable[int],
        reference: int,
        kind: ClusterKind,
        center_rect: CenterRect | None = None,
    ) -> "SpatialCluster":
        return cls(tuple(sorted(set(members))), reference, kind, center_rect)


@dataclass(frozen=True)
class Community:
    """A vertex set satisfying a social constraint, in canonical order."""

    members: tuple[int, ...]
    k: int
    social_kind: SocialKind

    def __post_init__(self) -> None:
        _check_members(self.members)
        low = self.k + 1 if self.social_kind is SocialKind.CORE else self.k
        if len(self.members) < low:
            raise ValueError(
                f"{self.social_kind.value} community with k={self.k} "
                f"needs at least {low} members"
            )

    @classmethod
    def from_members(cls, members: Iterable[int], k: int, social_kind: SocialKind) -> "Community":
        return cls(tuple(sorted(set(members))), k, social_kind)


@dataclass(frozen=True)
class GeoSocialNetwork:
    """Points plus a symmetric, loop-free adjacency over their ids."""

    points: tuple[GeoPoint, ...]
    adjacency: dict[int, tuple[int, ...]]

    @cached_property
    def point_map(self) -> dict[int, GeoPoint]:
        return {p.id: p for p in self.points}

    @property
    def ids(self) -> tuple[int, ...]:
        return tuple(p.id for p in self.points)

    @property
    def n_vertices(self) -> int:
        return len(self.points)

    @property
    def n_edges(self) -> int:
        return sum(len(ns) for ns in self.adjacency.values()) // 2

    def point(self, pid: int) -> GeoPoint:
        try:
            return self.point_map[pid]
        except KeyError:
            raise UnknownVertex(f"vertex {pid} is not in the network") from None

    def neighbors(self, pid: int) -> tuple[int, ...]:
        try:
            return self.adjacency[pid]
        except KeyError:
            raise UnknownVertex(f"vertex {pid} is not in the network") from None

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, ns in sorted(self.adjacency.items()) for v in ns if u < v]

    def subnetwork(self, ids: Iterable[int]) -> "GeoSocialNetwork":
        keep = set(ids)
        for pid in keep:
            self.point(pid)
        pts = tuple(p for p in self.points if p.id in keep)
        adj = {p.id: tuple(v for v in self.adjacency[p.id] if v in keep) for p in pts}
        return GeoSocialNetwork(pts, adj)


def build_network(
    points: Sequence[GeoPoint], edges: Iterable[tuple[int, int]]
) -> GeoSocialNetwork:
    """Validate and canonicalise a network.

    Self-loops and duplicate edges are dropped, adjacency is symmetrised,
    and edges naming unknown vertices are rejected.
    """
    pts = tuple(points)
    seen: set[int] = set()
    for p in pts:
        if p.id in seen:
            raise DuplicateId(f"point id {p.id} appears twice")
        seen.add(p.id)
    adj: dict[int, set[int]] = {p.id: set() for p in pts}
    for u, v in edges:
        if u not in adj or v not in adj:
            missing = u if u not in adj else v
            raise UnknownVertex(f"edge ({u}, {v}) references unknown vertex {missing}")
        if u == v:
            continue
        adj[u].add(v)
        adj[v].add(u)
    return GeoSocialNetwork(pts, {i: tuple(sorted(ns)) for i, ns in adj.items()})


def maximal_distinct(sets: Iterable[frozenset]) -> list[frozenset]:
    """Deduplicate and drop sets contained in another; larger sets first."""
    ordered = sorted(set(sets), key=lambda s: (-len(s), tuple(sorted(s))))
    kept: list[frozenset] = []
    for s in ordered:
        if not any(s <= t for t in kept):
            kept.append(s)
    return kept
