import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from geosoc.model import (
    ClusterKind,
    Community,
    DuplicateId,
    GeoPoint,
    Params,
    SocialKind,
    SpatialCluster,
    UnknownVertex,
    build_network,
    euclidean_distance,
    maximal_distinct,
)


def test_build_network_drops_self_loops_and_duplicates():
    pts = [GeoPoint(1, 0, 0), GeoPoint(2, 1, 0), GeoPoint(3, 2, 0)]
    net = build_network(pts, [(1, 2), (2, 1), (2, 2)])
    assert net.edges() == [(1, 2)]
    assert net.neighbors(1) == (2,)
    assert net.neighbors(2) == (1,)
    assert net.neighbors(3) == ()


def test_build_network_empty():
    net = build_network([], [])
    assert net.points == ()
    assert net.edges() == []


def test_build_network_unknown_vertex():
    with pytest.raises(UnknownVertex):
        build_network([GeoPoint(1, 0, 0)], [(1, 9)])


def test_build_network_duplicate_id():
    with pytest.raises(DuplicateId):
        build_network([GeoPoint(1, 0, 0), GeoPoint(1, 1, 1)], [])


def test_adjacency_is_symmetric():
    net = build_network([GeoPoint(i, i, 0) for i in range(4)], [(0, 1), (1, 2), (3, 1)])
    for u in net.ids:
        for v in net.neighbors(u):
            assert u in net.neighbors(v)


def test_point_requires_finite_coordinates():
    with pytest.raises(ValueError):
        GeoPoint(0, float("nan"), 0.0)
    with pytest.raises(ValueError):
        GeoPoint(0, 0.0, float("inf"))


def test_euclidean_distance_examples():
    assert euclidean_distance(GeoPoint(0, 0, 0), GeoPoint(1, 3, 4)) == 5
    p = GeoPoint(7, 2.5, -1.5)
    assert euclidean_distance(p, p) == 0
    assert euclidean_distance(GeoPoint(0, 0, 0), GeoPoint(1, 1, 1)) == pytest.approx(
        math.sqrt(2), abs=0
    )


def test_params_derived_radius():
    p = Params(d=7.0, k=3)
    assert p.r == 3.5
    with pytest.raises(ValueError):
        Params(d=0.0)
    with pytest.raises(ValueError):
        Params(d=1.0, k=0)
    with pytest.raises(ValueError):
        Params(d=1.0, eps=-1e-3)


def test_cluster_canonical_order_is_insertion_independent():
    a = SpatialCluster.from_members([3, 1, 2], 1, ClusterKind.EXACT_CIRCLE)
    b = SpatialCluster.from_members([2, 3, 1], 1, ClusterKind.EXACT_CIRCLE)
    assert a == b
    assert a.members == (1, 2, 3)


def test_cluster_reference_must_be_member():
    with pytest.raises(ValueError):
        SpatialCluster((1, 2), 9, ClusterKind.EXACT_CIRCLE)
    with pytest.raises(ValueError):
        SpatialCluster((), 0, ClusterKind.EXACT_CIRCLE)
    with pytest.raises(ValueError):
        SpatialCluster((2, 1), 1, ClusterKind.EXACT_CIRCLE)


def test_community_size_bounds():
    Community.from_members([1, 2, 3], 2, SocialKind.CORE)
    with pytest.raises(ValueError):
        Community.from_members([1, 2], 2, SocialKind.CORE)
    Community.from_members([1, 2], 2, SocialKind.TRUSS)
    with pytest.raises(ValueError):
        Community.from_members([1], 2, SocialKind.TRUSS)


def test_maximal_distinct():
    sets = [frozenset({1, 2, 3}), frozenset({2, 3}), frozenset({4, 5}), frozenset({2, 3})]
    assert set(maximal_distinct(sets)) == {frozenset({1, 2, 3}), frozenset({4, 5})}


coords = st.floats(min_value=-1e6, max_value=1e6, allow_nan=False)


@st.composite
def networks(draw):
    n = draw(st.integers(min_value=0, max_value=12))
    pts = [GeoPoint(i, draw(coords), draw(coords)) for i in range(n)]
    edges = []
    if n >= 2:
        m = draw(st.integers(min_value=0, max_value=20))
        for _ in range(m):
            u = draw(st.integers(min_value=0, max_value=n - 1))
            v = draw(st.integers(min_value=0, max_value=n - 1))
            edges.append((u, v))
    return pts, edges


@given(networks())
def test_build_network_idempotent(data):
    pts, edges = data
    net = build_network(pts, edges)
    again = build_network(net.points, net.edges())
    assert again == net
