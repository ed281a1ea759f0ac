import networkx as nx
import pytest

from nichegraph.config import Limits
from nichegraph.errors import Disconnected, SizeLimit
from nichegraph.generators import complete_graph, disjoint_union
from nichegraph.graphs import adjacency_masks, canonical_code
from nichegraph.niche import niche_graph
from nichegraph.oracle import (OrientationIndex, atlas_graphs, brute_force_x_set, census, census_frame, cross_check,
                               enumerate_orientations, fuzz_plan, fuzz_soundness, niche_masks, random_index,
                               random_tournament, side_labels)
from nichegraph.structure import expansion_profile


def test_side_labels_sort_in_index_order():
    left, right = side_labels(2, 12)
    assert left == ['u1', 'u2']
    assert right[:3] == ['v01', 'v02', 'v03'] and right[-1] == 'v12'
    assert sorted(right) == right
    with pytest.raises(ValueError):
        side_labels(0, 3)


@pytest.mark.parametrize('m, n, count', [(1, 1, 2), (2, 2, 16), (3, 4, 4096)])
def test_enumerate_orientations(m, n, count):
    indexes = [d.index for d in enumerate_orientations(m, n)]
    assert indexes == list(range(count))


def test_enumerate_orientations_size_limit():
    with pytest.raises(SizeLimit):
        next(enumerate_orientations(5, 5))
    assert next(enumerate_orientations(5, 5, Limits(orientations=25))).index == 0


def test_orientation_index():
    d = OrientationIndex(2, 2, 0b0101).tournament()
    assert d.index == 5
    with pytest.raises(ValueError):
        OrientationIndex(2, 2, 16)


@pytest.mark.parametrize('m, n', [(1, 3), (2, 3), (3, 3), (4, 2)])
def test_niche_masks_agree_with_niche_graph(m, n):
    for index in range(0, 1 << (m * n), 7):
        d = OrientationIndex(m, n, index).tournament()
        _, masks = adjacency_masks(niche_graph(d), order=d.left + d.right)
        assert niche_masks(m, n, index) == tuple(masks)


def test_census_one_by_one():
    result = census(1, 1)
    assert result.total == 2
    assert list(result.counts.values()) == [2]


def test_census_one_by_three():
    result = census(1, 3)
    k1_k3 = canonical_code(disjoint_union(complete_graph(1, 'a'), complete_graph(3, 'b')))
    k1_k1_k2 = canonical_code(disjoint_union(complete_graph(1, 'a'), complete_graph(1, 'b'), complete_graph(2, 'c')))
    assert dict(result.counts) == {k1_k3: 2, k1_k1_k2: 6}


def test_census_totals_and_edgeless_four_cycle():
    result = census(2, 2)
    assert result.total == 16
    edgeless = canonical_code(nx.empty_graph(['a', 'b', 'c', 'd']))
    assert edgeless in result.codes


def test_census_does_not_depend_on_jobs():
    assert census(2, 3, jobs=1).counts == census(2, 3, jobs=2).counts


def test_census_size_limit():
    with pytest.raises(SizeLimit):
        census(4, 6)
    with pytest.raises(ValueError):
        census(0, 2)


def test_census_frame():
    frame = census_frame([census(1, 1), census(1, 2)])
    assert list(frame.columns) == ['code_hex', 'count', 'm', 'n']
    assert frame['count'].sum() == 2 + 4
    assert set(frame['m']) == {1}
    assert census_frame([]).empty


def test_atlas_graphs():
    assert sum(1 for _ in atlas_graphs(4)) == 1 + 1 + 2 + 4 + 11
    with pytest.raises(SizeLimit):
        next(atlas_graphs(8))


def test_cross_check_small():
    report = cross_check(3)
    assert (report.graphs, report.realizable) == (8, 3)
    assert report.passed
    assert report.lines() == ['graphs: 8', 'realizable: 3', 'mismatches: 0']


def test_cross_check_four():
    assert cross_check(4).passed


def test_cross_check_limit():
    with pytest.raises(SizeLimit):
        cross_check(5, limits=Limits(cross_check=4))


@pytest.mark.slow
def test_cross_check_six():
    report = cross_check(6, jobs=2)
    assert report.graphs == 1 + 1 + 2 + 4 + 11 + 34 + 156
    assert report.passed


def test_random_tournaments_are_reproducible():
    assert random_tournament(8, 8, seed=3) == random_tournament(8, 8, seed=3)
    assert random_tournament(8, 8, seed=3) != random_tournament(8, 8, seed=4)
    assert random_index(1, 1, 0) in (0, 1)
    # 100 bits need two 64-bit words
    assert random_index(10, 10, 7) < 1 << 100


def test_random_indexes_spread_over_seeds():
    indexes = {random_index(8, 8, seed) for seed in range(1000)}
    assert len(indexes) > 990
    assert random_tournament(2, 2, seed=0).index == random_index(2, 2, 0)


def test_brute_force_x_set_examples():
    assert brute_force_x_set(complete_graph(3)) == {(0, 1), (0, 2), (0, 3)}
    assert brute_force_x_set(nx.relabel_nodes(nx.cycle_graph(4), str)) == {(2, 0)}
    with pytest.raises(Disconnected):
        brute_force_x_set(disjoint_union(complete_graph(1, 'a'), complete_graph(1, 'b')))
    with pytest.raises(SizeLimit):
        brute_force_x_set(complete_graph(8))


def _x_sets_agree(n_max):
    for g in atlas_graphs(n_max):
        if g.number_of_nodes() == 0 or not nx.is_connected(g):
            continue
        profile = expansion_profile(g)
        expected = set() if profile is None else set(profile.x_set())
        assert brute_force_x_set(g) == expected


def test_expansion_profile_matches_brute_force():
    _x_sets_agree(6)


@pytest.mark.slow
def test_expansion_profile_matches_brute_force_on_seven_vertices():
    _x_sets_agree(7)


def test_fuzz_plan_is_seeded():
    plan = fuzz_plan(20, 5, seed=1)
    assert plan == fuzz_plan(20, 5, seed=1)
    assert all(1 <= m <= 5 and 1 <= n <= 5 for m, n, _ in plan)


def test_fuzz_soundness_small():
    report = fuzz_soundness(trials=40, max_side=5, seed=0)
    assert report.trials == 40
    assert report.passed
    assert report.lines()[:3] == ['trials: 40', f'skipped laws: {report.skipped_laws}', 'failures: 0']


def test_fuzz_soundness_with_workers():
    assert fuzz_soundness(trials=12, max_side=4, seed=2, jobs=2).trials == 12


@pytest.mark.slow
def test_fuzz_soundness_many():
    assert fuzz_soundness(trials=10000, max_side=8, seed=0, jobs=4).passed
