import random

import pytest

from nichegraph.errors import CertificateMismatch
from nichegraph.generators import complete_graph, complete_multipartite, cycle_graph, disjoint_union, path_graph
from nichegraph.graphs import BipartiteTournament, same_graph
from nichegraph.niche import niche_graph, verify_relation_laws
from nichegraph.realize import build_witness_plan, realize, realize_three_four, realize_two, witness_plan_problems
from nichegraph.recognize import recognize
from nichegraph.structure import expand


def assert_witness(g):
    d = realize(g)
    assert d is not None
    assert same_graph(niche_graph(d), g)
    assert verify_relation_laws(d).passed
    return d


@pytest.mark.parametrize('g', [
    disjoint_union(complete_graph(1, 'a'), complete_graph(1, 'b')),
    disjoint_union(cycle_graph(4, 'a'), cycle_graph(4, 'b')),
    disjoint_union(path_graph(3, 'a'), path_graph(2, 'b')),
    disjoint_union(complete_graph(4, 'a'), complete_graph(3, 'b')),
    disjoint_union(path_graph(2, 'a'), cycle_graph(4, 'b')),
    disjoint_union(complete_multipartite([['a1', 'a2'], ['a3', 'a4'], ['a5']]), complete_graph(3, 'b')),
])
def test_two_component_round_trip(g):
    d = assert_witness(g)
    cert = recognize(g)
    # The left side of the witness is the first side of the certificate
    assert set(d.left) == set(cert.sides[0][0])


@pytest.mark.parametrize('sizes', [(1, 1, 1), (2, 3, 1), (1, 1, 5), (1, 1, 1, 1), (3, 1, 2, 4), (2, 2, 2, 2)])
def test_three_and_four_complete_components(sizes):
    g = disjoint_union(*(complete_graph(size, prefix) for size, prefix in zip(sizes, 'abcd')))
    d = assert_witness(g)
    cert = recognize(g)
    assert set(d.left) == frozenset().union(*cert.sides[0])
    assert same_graph(niche_graph(realize_three_four(g, cert)), g)


def test_not_realizable_gives_none():
    assert realize(path_graph(4)) is None
    assert realize(disjoint_union(path_graph(4, 'a'), complete_graph(2, 'b'))) is None
    assert realize(disjoint_union(path_graph(3, 'a'), complete_graph(1, 'b'))) is None


def test_wrong_certificate_is_rejected():
    g = disjoint_union(cycle_graph(4, 'a'), cycle_graph(4, 'b'))
    other = disjoint_union(complete_graph(2, 'a'), complete_graph(1, 'b'), complete_graph(1, 'c'))
    with pytest.raises(CertificateMismatch):
        realize_three_four(g, recognize(g))
    with pytest.raises(CertificateMismatch):
        realize_two(other, recognize(other))
    with pytest.raises(CertificateMismatch):
        realize_two(g, recognize(disjoint_union(cycle_graph(4, 'a'), cycle_graph(4, 'c'))))
    with pytest.raises(CertificateMismatch):
        realize_two(path_graph(4), recognize(path_graph(4)))


def test_witness_plan_of_two_four_cycles():
    g = disjoint_union(cycle_graph(4, 'a'), cycle_graph(4, 'b'))
    plan = build_witness_plan(g, recognize(g))
    assert len(plan.z1) == len(plan.z2) == 2
    assert plan.chain == (frozenset(plan.z2[:1]), frozenset(plan.z2))
    assert set(plan.psi) == set(plan.z1)
    assert len(plan.partners) == 4
    assert witness_plan_problems(plan, plan.template) == []
    assert witness_plan_problems(plan, plan.template.reversed()) == []


def test_witness_plan_detects_a_flipped_arc():
    g = disjoint_union(cycle_graph(4, 'a'), cycle_graph(4, 'b'))
    plan = build_witness_plan(g, recognize(g))
    d = plan.template
    x, y = plan.z1[0], plan.z2[-1]
    arc = (x, y) if (x, y) in d.arcs else (y, x)
    flipped = BipartiteTournament(d.left, d.right, (d.arcs - {arc}) | {arc[::-1]})
    assert witness_plan_problems(plan, flipped)


def test_witness_plan_swaps_roles_when_side_two_is_larger():
    small = complete_multipartite([['a1', 'a2'], ['a3', 'a4'], ['a5']])
    large = complete_multipartite([['b1', 'b2'], ['b3', 'b4'], ['b5', 'b6'], ['b7', 'b8']])
    g = disjoint_union(small, large)
    cert = recognize(g)
    assert cert.params == (2, 1, 4, 0)
    plan = build_witness_plan(g, cert)
    assert plan.swapped
    assert (len(plan.z1), len(plan.z2)) == (4, 3)
    assert witness_plan_problems(plan, plan.template) == []
    d = assert_witness(g)
    assert set(d.left) == set(small.nodes)


def _random_template_expansion(rng, prefix, max_pairs=3, max_singles=3, max_clique=3):
    while True:
        a, b = rng.randint(0, max_pairs), rng.randint(0, max_singles)
        if a + b >= 2 or (a == 0 and b >= 1):
            break
    parts = [[f'{prefix}p{i}x', f'{prefix}p{i}y'] for i in range(a)] + [[f'{prefix}s{j}'] for j in range(b)]
    template = complete_multipartite(parts)
    return expand(template, {v: rng.randint(1, max_clique) for v in template.nodes})


def _random_round_trips(count, seed):
    rng = random.Random(seed)
    realizable = 0
    for _ in range(count):
        g = disjoint_union(_random_template_expansion(rng, 'l'), _random_template_expansion(rng, 'r'))
        cert = recognize(g)
        d = realize(g)
        assert (d is not None) == cert.is_yes
        if d is not None:
            realizable += 1
            assert same_graph(niche_graph(d), g)
            left = set(d.left)
            assert all((u in left) == (v in left) for u, v in g.edges)
    return realizable


def test_random_template_expansions():
    assert _random_round_trips(60, seed=0) > 0


@pytest.mark.slow
def test_random_template_expansions_many():
    assert _random_round_trips(500, seed=1) > 0


def _random_component(rng, prefix):
    size = rng.randint(1, 4)
    if size >= 3 and rng.random() < 0.4:
        return path_graph(size, prefix)
    return complete_graph(size, prefix)


def test_three_and_four_components_are_yes_iff_all_complete():
    rng = random.Random(4)
    for _ in range(200):
        parts = [_random_component(rng, prefix) for prefix in 'abcd'[:rng.choice((3, 4))]]
        g = disjoint_union(*parts)
        all_complete = all(part.number_of_edges() == part.number_of_nodes() * (part.number_of_nodes() - 1) // 2
                           for part in parts)
        assert recognize(g).is_yes == all_complete
        d = realize(g)
        assert (d is not None) == all_complete
        if d is not None:
            assert same_graph(niche_graph(d), g)
