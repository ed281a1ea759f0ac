import itertools
import random

import pytest

from helpers import graph, is_hamiltonian_walk, matching_by_edge_subsets
from nichegraph.errors import (ArcWithinSide, InvalidTournament, InvalidVertex, MissingArc, NotAComponent, SizeLimit,
                               VertexOnBothSides)
from nichegraph.generators import complete_graph, cycle_graph, disjoint_union, path_graph
from nichegraph.graphs import (BipartiteTournament, canonical_code, clique_number, complement, component_diameter,
                               components, contains_claw, contains_induced_p4, edge_set, find_hole, find_odd_hole,
                               hamiltonian_cycle, hamiltonian_path, has_asteroidal_triple, has_independent_triple,
                               induced, is_chordal, is_interval, is_planar, is_two_connected, make_graph,
                               max_matching_size, same_graph, shortest_long_hole, validate_vertex_id)
from nichegraph.structure import expand


def c4_doubled():
    c4 = graph('a-b b-c c-d d-a')
    return expand(c4, {v: 2 for v in c4.nodes})


def relabel(g, rng):
    nodes = sorted(g.nodes)
    shuffled = nodes[:]
    rng.shuffle(shuffled)
    mapping = dict(zip(nodes, [f'r{v}' for v in shuffled]))
    return make_graph(mapping.values(), ((mapping[u], mapping[v]) for u, v in g.edges))


@pytest.mark.parametrize('name', ['a b', 'a-b', 'a>b', '#a', '', 'x\t'])
def test_invalid_vertex_ids(name):
    with pytest.raises(InvalidVertex):
        validate_vertex_id(name)


def test_valid_vertex_ids():
    assert validate_vertex_id('a.1') == 'a.1'
    assert validate_vertex_id('u01') == 'u01'


def test_make_graph_rejects_loops_and_unknown_endpoints():
    with pytest.raises(InvalidVertex):
        make_graph(['a'], [('a', 'a')])
    with pytest.raises(InvalidVertex):
        make_graph(['a'], [('a', 'b')])


def test_components():
    assert components(make_graph()) == []
    g = graph('a-b b-c a-c d-e')
    assert components(g) == [frozenset('abc'), frozenset('de')]
    assert components(graph('a-b b-c')) == [frozenset('abc')]


def test_components_partition_vertices():
    g = graph('a-b c-d e-f f-g', 'h')
    parts = components(g)
    assert set().union(*parts) == set(g.nodes)
    assert sum(len(p) for p in parts) == g.number_of_nodes()


def test_induced():
    c4 = graph('a-b b-c c-d d-a')
    assert edge_set(induced(c4, {'a', 'b'})) == {frozenset('ab')}
    assert induced(c4, set()).number_of_nodes() == 0
    h = induced(graph('a-b b-c c-d'), {'a', 'c', 'd'})
    assert set(h.nodes) == {'a', 'c', 'd'}
    assert edge_set(h) == {frozenset('cd')}
    with pytest.raises(InvalidVertex):
        induced(c4, {'z'})


def test_complement():
    assert complement(complete_graph(3)).number_of_edges() == 0
    p4 = graph('a-b b-c c-d')
    assert edge_set(complement(p4)) == {frozenset('ac'), frozenset('ad'), frozenset('bd')}
    rng = random.Random(1)
    for _ in range(20):
        pairs = [(u, v) for u, v in itertools.combinations('abcdef', 2) if rng.random() < 0.5]
        g = make_graph('abcdef', pairs)
        assert same_graph(complement(complement(g)), g)


def test_canonical_code_isomorphic_relabelings():
    assert canonical_code(graph('a-b b-c c-d d-a')) == canonical_code(graph('x-z z-y y-w w-x'))
    assert canonical_code(graph('a-b b-c')) != canonical_code(graph('a-b b-c a-c'))


def _all_graphs(n):
    vertices = [f'x{i}' for i in range(n)]
    pairs = list(itertools.combinations(vertices, 2))
    for bits in range(1 << len(pairs)):
        yield make_graph(vertices, [pair for k, pair in enumerate(pairs) if bits >> k & 1])


def test_canonical_code_four_vertex_classes():
    assert len({canonical_code(g) for g in _all_graphs(4)}) == 11


def test_canonical_code_is_exact_on_five_vertices():
    rng = random.Random(5)
    codes = set()
    for g in _all_graphs(5):
        code = canonical_code(g)
        assert canonical_code(relabel(g, rng)) == code
        codes.add(code)
    # 34 isomorphism classes of graphs on five vertices
    assert len(codes) == 34


@pytest.mark.slow
def test_canonical_code_is_exact_on_six_vertices():
    assert len({canonical_code(g) for g in _all_graphs(6)}) == 156


def test_canonical_code_handles_large_twin_classes():
    g = disjoint_union(complete_graph(9, prefix='a'), complete_graph(1, prefix='b'))
    assert canonical_code(g) == canonical_code(disjoint_union(complete_graph(1, prefix='a'),
                                                              complete_graph(9, prefix='b')))


def test_canonical_code_size_limit():
    with pytest.raises(SizeLimit):
        canonical_code(complete_graph(11))
    assert canonical_code(complete_graph(11), limit=11).order == 11


def test_clique_number():
    assert clique_number(complete_graph(5)) == 5
    assert clique_number(cycle_graph(4)) == 2
    assert clique_number(c4_doubled()) == 4
    assert clique_number(make_graph()) == 0


def test_max_matching_size():
    assert max_matching_size(complete_graph(4)) == 2
    assert max_matching_size(path_graph(3)) == 1
    assert max_matching_size(disjoint_union(cycle_graph(5, prefix='a'), complete_graph(2, prefix='b'))) == 3


def test_max_matching_size_agrees_with_edge_subsets():
    rng = random.Random(7)
    for _ in range(60):
        n = rng.randint(1, 12)
        vertices = [f'x{i:02d}' for i in range(n)]
        pairs = list(itertools.combinations(vertices, 2))
        g = make_graph(vertices, rng.sample(pairs, min(len(pairs), rng.randint(0, 14))))
        assert max_matching_size(g) == matching_by_edge_subsets(g)


def test_hamiltonian_path_and_cycle():
    p4 = graph('a-b b-c c-d')
    assert hamiltonian_path(p4) in (['a', 'b', 'c', 'd'], ['d', 'c', 'b', 'a'])
    assert hamiltonian_cycle(p4) is None
    k1 = make_graph(['a'])
    assert hamiltonian_path(k1) == ['a']
    assert hamiltonian_cycle(k1) is None
    assert hamiltonian_cycle(complete_graph(2)) is None

    g = c4_doubled()
    cycle = hamiltonian_cycle(g)
    assert cycle is not None and is_hamiltonian_walk(g, cycle, closed=True)
    assert is_hamiltonian_walk(g, hamiltonian_path(g), closed=False)


def test_hamiltonian_cycle_implies_path():
    rng = random.Random(3)
    for _ in range(40):
        vertices = [f'x{i}' for i in range(rng.randint(1, 8))]
        g = make_graph(vertices, [p for p in itertools.combinations(vertices, 2) if rng.random() < 0.5])
        cycle = hamiltonian_cycle(g)
        path = hamiltonian_path(g)
        if cycle is not None:
            assert is_hamiltonian_walk(g, cycle, closed=True)
            assert path is not None
        if path is not None:
            assert is_hamiltonian_walk(g, path, closed=False)


def test_hamiltonian_size_limit():
    with pytest.raises(SizeLimit):
        hamiltonian_path(path_graph(23))


def test_holes():
    c5 = cycle_graph(5)
    hole = find_hole(c5, 5)
    assert sorted(hole) == sorted(c5.nodes)
    assert find_hole(complete_graph(4), 4) is None
    g = disjoint_union(cycle_graph(4, prefix='a'), cycle_graph(6, prefix='b'))
    hole = shortest_long_hole(g, 5)
    assert len(hole) == 6 and all(v.startswith('b') for v in hole)
    assert sorted(find_hole(g, 4)) == ['a1', 'a2', 'a3', 'a4']


def test_odd_hole():
    assert find_odd_hole(cycle_graph(6)) is None
    assert len(find_odd_hole(cycle_graph(7))) == 7
    with pytest.raises(SizeLimit):
        find_odd_hole(cycle_graph(17))


def test_chordal_interval_and_asteroidal_triples():
    assert not is_chordal(cycle_graph(4))
    spider = graph('c-x1 x1-y1 c-x2 x2-y2 c-x3 x3-y3')
    assert has_asteroidal_triple(spider)
    assert is_chordal(spider) and not is_interval(spider)
    assert is_interval(path_graph(5))


def test_forbidden_subgraph_scans():
    assert has_independent_triple(cycle_graph(6))
    assert not has_independent_triple(cycle_graph(5))
    assert contains_induced_p4(path_graph(4))
    assert not contains_induced_p4(cycle_graph(4))
    assert contains_claw(graph('z-a z-b z-c'))
    assert not contains_claw(graph('z-a z-b z-c a-b'))


def test_component_diameter_and_connectivity():
    k5 = complete_graph(5)
    assert component_diameter(k5, k5.nodes) == 1
    p3 = graph('a-b b-c')
    assert component_diameter(p3, {'a', 'b', 'c'}) == 2
    with pytest.raises(NotAComponent):
        component_diameter(p3, {'a', 'b'})
    assert is_two_connected(cycle_graph(4))
    assert not is_two_connected(p3)
    assert not is_two_connected(complete_graph(2))
    assert is_two_connected(complete_graph(3))


def test_is_planar():
    assert is_planar(complete_graph(4))
    assert not is_planar(complete_graph(5))
    with pytest.raises(SizeLimit):
        is_planar(path_graph(13))


def test_tournament_from_index_and_back():
    d = BipartiteTournament.from_index(['u1', 'u2'], ['v1', 'v2'], 0b0101)
    assert d.arcs == {('u1', 'v1'), ('v2', 'u1'), ('u2', 'v1'), ('v2', 'u2')}
    assert d.index == 5
    assert d.reversed().index == 0b1010


def test_tournament_sides_are_sorted():
    d = BipartiteTournament(('u2', 'u1'), ('v1',), frozenset({('u1', 'v1'), ('u2', 'v1')}))
    assert d.left == ('u1', 'u2')
    assert d.side_of('v1') == 'right'


def test_tournament_validation():
    with pytest.raises(MissingArc) as excinfo:
        BipartiteTournament(('u1', 'u2'), ('v1', 'v2'), frozenset({('u1', 'v1'), ('u1', 'v2'), ('v1', 'u2')}))
    assert excinfo.value.pair == ('u2', 'v2')
    with pytest.raises(ArcWithinSide):
        BipartiteTournament(('u1', 'u2'), ('v1',), frozenset({('u1', 'v1'), ('u2', 'v1'), ('u1', 'u2')}))
    with pytest.raises(VertexOnBothSides):
        BipartiteTournament(('u1',), ('u1',), frozenset())
    with pytest.raises(InvalidTournament):
        BipartiteTournament(('u1',), ('v1',), frozenset({('u1', 'v1'), ('v1', 'u1')}))
    with pytest.raises(InvalidTournament):
        BipartiteTournament((), ('v1',), frozenset())
