import pytest

from geosoc.baseline import min_enclosing_circle, oracle_gsc
from geosoc.gsc import (
    ComparisonStats,
    EmptyCluster,
    MissingCenterRect,
    PruneLevel,
    center_rect,
    find_gsc,
    global_spatial_clusters,
    rects_intersect,
)
from geosoc.model import CenterRect, ClusterKind, GeoPoint, SpatialCluster
from geosoc.spatial_index import build_grid, range_query_disk
from geosoc.sweep_exact import local_spatial_clusters
from helpers import families, random_points


def cl(members, rect=None):
    return SpatialCluster.from_members(members, min(members), ClusterKind.EXACT_CIRCLE, rect)


def test_center_rect_single_point():
    got = center_rect([GeoPoint(0, 2.0, 3.0)], 1.0)
    assert got == CenterRect(1.0, 3.0, 2.0, 4.0)


def test_center_rect_diameter_pair_degenerates():
    got = center_rect([GeoPoint(0, 0, 0), GeoPoint(1, 2, 0)], 1.0)
    assert got == CenterRect(1.0, 1.0, -1.0, 1.0)


def test_center_rect_three_points():
    got = center_rect([GeoPoint(0, 0, 0), GeoPoint(1, 1, 0), GeoPoint(2, 0, 1)], 1.0)
    assert got == CenterRect(0.0, 1.0, 0.0, 1.0)


def test_center_rect_empty():
    with pytest.raises(EmptyCluster):
        center_rect([], 1.0)


def test_center_rect_nonempty_for_coverable_clusters():
    pts = random_points(4, 80)
    for c in oracle_gsc(pts, 20.0):
        members = [pts[i] for i in c.members]
        rect = center_rect(members, 10.0)
        assert rect.x_lo <= rect.x_hi + 1e-9
        assert rect.y_lo <= rect.y_hi + 1e-9


def test_rects_intersect_cases():
    unit = CenterRect(0, 1, 0, 1)
    assert rects_intersect(unit, CenterRect(1, 2, 1, 2))  # shared corner
    assert not rects_intersect(unit, CenterRect(1 + 2e-9, 2, 0, 1))
    assert rects_intersect(CenterRect(0, 3, 0, 3), CenterRect(1, 2, 1, 2))  # containment


def test_find_gsc_subset_removal():
    out, _ = find_gsc([cl([1, 2, 3]), cl([2, 3]), cl([4, 5])], k=1)
    assert families(out) == {(1, 2, 3), (4, 5)}


def test_find_gsc_dedupes_identical_sets():
    out, _ = find_gsc([cl([1, 2]), cl([1, 2])], k=1)
    assert families(out) == {(1, 2)}


def test_find_gsc_size_filter():
    out, _ = find_gsc([cl([1, 2, 3]), cl([4, 5]), cl([6])], k=2)
    assert families(out) == {(1, 2, 3), (4, 5)}


def test_find_gsc_missing_rect_raises():
    points = [GeoPoint(i, float(i), 0.0) for i in range(3)]
    with pytest.raises(MissingCenterRect):
        find_gsc([cl([0, 1])], k=1, prune_level=PruneLevel.RULE1_2, d=2.0, points=points)


def test_find_gsc_rule1_needs_coordinates():
    with pytest.raises(ValueError):
        find_gsc([cl([0, 1])], k=1, prune_level=PruneLevel.RULE1)


def _lsc_families(pts, d):
    grid = build_grid(pts, d)
    out = []
    for v in pts:
        near = range_query_disk(grid, v, d)
        cands = [grid.point_map[i] for i in near if i != v.id]
        out.extend(local_spatial_clusters(v, cands, d / 2))
    return out


def test_prune_levels_agree_on_random_lsc_families():
    d = 30.0
    for seed in range(50):
        pts = random_points(seed, 60 + seed, gaussian=bool(seed % 2))
        lscs = _lsc_families(pts, d)
        pmap = {p.id: p for p in pts}
        with_rects = [
            SpatialCluster(
                c.members, c.reference, c.kind,
                center_rect([pmap[i] for i in c.members], d / 2),
            )
            for c in lscs
        ]
        results = []
        counts = []
        for level in PruneLevel:
            out, stats = find_gsc(with_rects, k=1, prune_level=level, d=d, points=pts)
            results.append(families(out))
            counts.append(stats.comparisons)
        assert results[0] == results[1] == results[2]
        assert counts[2] <= counts[1] <= counts[0]


def test_global_spatial_clusters_two_groups():
    pts = [GeoPoint(0, 0, 0), GeoPoint(1, 1, 0), GeoPoint(2, 5, 5)]
    got = families(global_spatial_clusters(pts, 2.0, k=1))
    assert got == {(0, 1), (2,)}


def test_global_spatial_clusters_single_point():
    assert families(global_spatial_clusters([GeoPoint(3, 1, 1)], 5.0)) == {(3,)}


def test_global_spatial_clusters_empty():
    assert global_spatial_clusters([], 5.0) == []


def test_global_matches_oracle_random():
    for seed, d in [(0, 5.0), (1, 15.0), (2, 30.0), (3, 15.0), (4, 30.0), (5, 5.0)]:
        pts = random_points(seed, 120, gaussian=bool(seed % 2))
        assert families(global_spatial_clusters(pts, d)) == families(oracle_gsc(pts, d))


def test_every_global_cluster_is_some_local_cluster():
    # union of per-reference local families covers the global family
    d = 20.0
    for seed in range(6):
        pts = random_points(seed + 50, 100)
        locals_ = families(_lsc_families(pts, d))
        for members in families(oracle_gsc(pts, d)):
            assert members in locals_


def test_outputs_fit_covering_circle():
    d = 25.0
    for seed in range(5):
        pts = random_points(seed + 20, 100, gaussian=True)
        pmap = {p.id: p for p in pts}
        for c in global_spatial_clusters(pts, d):
            _, radius = min_enclosing_circle([pmap[i] for i in c.members])
            assert radius <= d / 2 + 1e-9


def test_outputs_are_maximal_against_oracle():
    d = 18.0
    for seed in range(5):
        pts = random_points(seed + 30, 80)
        got = families(global_spatial_clusters(pts, d))
        ref = families(oracle_gsc(pts, d))
        # equality implies maximality: no output is a strict subset of any
        # coverable maximal set other than itself
        assert got == ref


def test_threads_do_not_change_output():
    pts = random_points(9, 150)
    single = global_spatial_clusters(pts, 30.0, threads=1)
    multi = global_spatial_clusters(pts, 30.0, threads=4)
    assert single == multi


def test_stats_out_is_filled():
    pts = random_points(10, 80)
    stats = ComparisonStats()
    global_spatial_clusters(pts, 30.0, stats_out=stats)
    assert stats.comparisons > 0


def test_size_prefilter_keeps_oracle_equivalence_for_k1():
    # k=1 disables the prefilter entirely: every point has itself in reach
    pts = random_points(40, 60)
    assert families(global_spatial_clusters(pts, 15.0, k=1)) == families(
        oracle_gsc(pts, 15.0)
    )


def test_k_filter_drops_small_clusters():
    pts = [GeoPoint(0, 0, 0), GeoPoint(1, 1, 0), GeoPoint(2, 50, 50)]
    got = families(global_spatial_clusters(pts, 2.0, k=2))
    assert got == {(0, 1)}
