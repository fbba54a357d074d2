import math
from types import GeneratorType

import pytest

from geosoc.approx import (
    GascRegistry,
    check_global,
    find_gasc,
    iter_gasc,
    local_approx_clusters,
)
from geosoc.baseline import oracle_gasc, oracle_gsc
from geosoc.model import ClusterKind, GeoPoint, SpatialCluster, euclidean_distance
from helpers import families, random_points

SQRT2 = math.sqrt(2)


def pt(i, x, y):
    return GeoPoint(i, x, y)


def test_local_tall_slab_splits():
    p = pt(0, 0, 0)
    slab = [p, pt(1, 0.5, 0.9), pt(2, 0.5, -0.9)]
    got = families(local_approx_clusters(p, slab, 1.0))
    assert got == {(0, 1), (0, 2)}


def test_local_extremal_corner_pair():
    p = pt(0, 0, 0)
    got = families(local_approx_clusters(p, [p, pt(1, 1, 1)], 1.0))
    assert got == {(0, 1)}


def test_local_alone():
    p = pt(0, 0, 0)
    assert families(local_approx_clusters(p, [p], 1.0)) == {(0,)}


def test_local_every_cluster_contains_reference():
    pts = random_points(3, 50, density=0.02)
    p = pts[7]
    slab = [q for q in pts if p.x <= q.x <= p.x + 10 and p.y - 10 <= q.y <= p.y + 10]
    for c in local_approx_clusters(p, slab, 10.0):
        assert p.id in c.members


def test_check_global_contained_singleton():
    a, b = pt(1, 0, 0), pt(2, 0.5, 0.5)
    reg = GascRegistry({1: a, 2: b})
    reg.register(SpatialCluster.from_members([1, 2], 1, ClusterKind.APPROX_SQUARE))
    cs = SpatialCluster.from_members([2], 2, ClusterKind.APPROX_SQUARE)
    assert check_global(reg, cs) is False


def test_check_global_empty_registry():
    reg = GascRegistry({1: pt(1, 0, 0)})
    cs = SpatialCluster.from_members([1], 1, ClusterKind.APPROX_SQUARE)
    assert check_global(reg, cs) is True


def test_check_global_two_disjoint_containers_is_not_containment():
    # b is shared by two registered clusters, but no single cluster holds
    # all three extremes, so the candidate is genuinely new
    a, b, c = pt(1, 0, 0), pt(2, 0.4, 0.6), pt(3, 0.8, 1.2)
    reg = GascRegistry({1: a, 2: b, 3: c})
    reg.register(SpatialCluster.from_members([1, 2], 1, ClusterKind.APPROX_SQUARE))
    reg.register(SpatialCluster.from_members([2, 3], 2, ClusterKind.APPROX_SQUARE))
    cs = SpatialCluster.from_members([1, 2, 3], 1, ClusterKind.APPROX_SQUARE)
    assert check_global(reg, cs) is True
    assert not {1, 2, 3} <= {1, 2}
    assert not {1, 2, 3} <= {2, 3}


def test_find_gasc_diagonal_pair():
    got = find_gasc([pt(0, 0, 0), pt(1, 1, 1)], 1.0)
    assert families(got) == {(0, 1)}
    diam = euclidean_distance(pt(0, 0, 0), pt(1, 1, 1))
    assert diam == pytest.approx(SQRT2, abs=1e-12)


def test_find_gasc_two_groups():
    got = find_gasc([pt(0, 0, 0), pt(1, 0.5, 0.5), pt(2, 2, 2)], 1.0)
    assert families(got) == {(0, 1), (2,)}


def test_find_gasc_just_out_of_reach():
    got = oracle_gasc([pt(0, 0, 0), pt(1, 1.01, 1.01)], 1.0)
    assert families(got) == {(0,), (1,)}


def test_iter_gasc_streams():
    pts = random_points(5, 40)
    stream = iter_gasc(pts, 20.0)
    assert isinstance(stream, GeneratorType)
    first = next(stream)
    rest = list(stream)
    assert families([first] + rest) == families(find_gasc(pts, 20.0))


def test_matches_oracle_random():
    for seed, d in [(0, 5.0), (1, 15.0), (2, 30.0), (3, 30.0), (4, 15.0), (5, 5.0)]:
        pts = random_points(seed + 60, 120, gaussian=bool(seed % 2))
        assert families(find_gasc(pts, d)) == families(oracle_gasc(pts, d))


def test_square_fit_and_diameter_bound():
    for seed in range(5):
        pts = random_points(seed, 150, gaussian=bool(seed % 2))
        pmap = {p.id: p for p in pts}
        d = 30.0
        for c in find_gasc(pts, d):
            members = [pmap[i] for i in c.members]
            xs = [q.x for q in members]
            ys = [q.y for q in members]
            assert max(xs) - min(xs) <= d + 1e-9
            assert max(ys) - min(ys) <= d + 1e-9
            diam = max(
                (euclidean_distance(a, b) for a in members for b in members),
                default=0.0,
            )
            assert diam <= SQRT2 * d + 1e-9


def test_every_circle_cluster_inside_some_square_cluster():
    for seed in range(5):
        pts = random_points(seed + 10, 120)
        d = 20.0
        squares = [frozenset(c.members) for c in find_gasc(pts, d)]
        for c in oracle_gsc(pts, d):
            assert any(frozenset(c.members) <= s for s in squares)


def test_every_square_cluster_inside_scaled_circle_cluster():
    for seed in range(5):
        pts = random_points(seed + 15, 120)
        d = 20.0
        wide = [frozenset(c.members) for c in oracle_gsc(pts, SQRT2 * d)]
        for c in find_gasc(pts, d):
            assert any(frozenset(c.members) <= w for w in wide)


def test_every_global_square_cluster_is_some_local_one():
    d = 25.0
    for seed in range(5):
        pts = random_points(seed + 20, 100)
        pmap = {p.id: p for p in pts}
        locals_: set[tuple[int, ...]] = set()
        for p in pts:
            slab = [
                q
                for q in pts
                if p.x - 1e-9 <= q.x <= p.x + d + 1e-9
                and p.y - d - 1e-9 <= q.y <= p.y + d + 1e-9
            ]
            locals_ |= families(local_approx_clusters(p, slab, d))
        for members in families(oracle_gasc(pts, d)):
            assert members in locals_


def test_label_filter_agrees_with_brute_force_subset_filter():
    d = 25.0
    for seed in range(6):
        pts = random_points(seed + 30, 100, gaussian=bool(seed % 2))
        all_local: list[frozenset] = []
        for p in pts:
            slab = [
                q
                for q in pts
                if p.x - 1e-9 <= q.x <= p.x + d + 1e-9
                and p.y - d - 1e-9 <= q.y <= p.y + d + 1e-9
            ]
            all_local.extend(frozenset(c.members) for c in local_approx_clusters(p, slab, d))
        brute = {
            tuple(sorted(s))
            for s in all_local
            if not any(s < other for other in all_local)
        }
        assert families(find_gasc(pts, d)) == brute


def test_mutual_non_containment():
    pts = random_points(44, 150)
    out = [set(c.members) for c in find_gasc(pts, 30.0)]
    for i, a in enumerate(out):
        for j, b in enumerate(out):
            assert i == j or not a <= b


def test_equal_x_references():
    # vertical stacks exercise the same-x tie handling
    pts = [
        pt(0, 0.0, 0.0),
        pt(1, 0.0, 1.0),
        pt(2, 0.0, 2.0),
        pt(3, 0.0, 3.5),
        pt(4, 1.0, 0.5),
    ]
    for d in (1.0, 1.5, 2.0, 3.6):
        assert families(find_gasc(pts, d)) == families(oracle_gasc(pts, d))


def test_size_filter():
    pts = [pt(0, 0, 0), pt(1, 0.5, 0.5), pt(2, 10, 10)]
    assert families(find_gasc(pts, 1.0, k=2)) == {(0, 1)}


def test_integer_grids_with_exact_ties():
    import itertools

    for w, h, d in [(3, 3, 1.0), (4, 2, 1.0), (3, 3, 2.0), (5, 1, 2.0), (2, 6, 1.0)]:
        pts = [
            pt(i, float(x), float(y))
            for i, (x, y) in enumerate(itertools.product(range(w), range(h)))
        ]
        assert families(find_gasc(pts, d)) == families(oracle_gasc(pts, d)), (w, h, d)


def test_coincident_points():
    pts = [pt(0, 0, 0), pt(1, 0, 0), pt(2, 1, 1), pt(3, 3, 3)]
    assert families(find_gasc(pts, 1.0)) == families(oracle_gasc(pts, 1.0))
