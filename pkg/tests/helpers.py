"""
Small builders and brute-force oracles shared by the tests.
"""

import itertools

import networkx as nx

from nichegraph.graphs import make_graph


def graph(edges, vertices=''):
    """graph('a-b b-c', 'd') is the path a-b-c plus the isolated vertex d."""
    pairs = [tuple(edge.split('-')) for edge in edges.split()]
    return make_graph(set(vertices.split()) | {v for pair in pairs for v in pair}, pairs)


def niche_by_definition(d):
    """Niche graph straight from the definition: common prey or common predator."""
    g = make_graph(d.vertices)
    arcs = set(d.arcs)
    for x, y in itertools.combinations(d.vertices, 2):
        for w in d.vertices:
            if ((x, w) in arcs and (y, w) in arcs) or ((w, x) in arcs and (w, y) in arcs):
                g.add_edge(x, y)
                break
    return g


def matching_by_edge_subsets(g):
    """Maximum matching size: the largest edge subset whose edges are pairwise disjoint."""
    edges = list(g.edges)
    for k in range(g.number_of_nodes() // 2, 0, -1):
        for subset in itertools.combinations(edges, k):
            if len({v for edge in subset for v in edge}) == 2 * k:
                return k
    return 0


def isomorphic(g, h):
    return nx.is_isomorphic(g, h)


def is_hamiltonian_walk(g, walk, closed):
    if sorted(walk) != sorted(g.nodes):
        return False
    steps = list(zip(walk, walk[1:])) + ([(walk[-1], walk[0])] if closed else [])
    return all(g.has_edge(u, v) for u, v in steps)
