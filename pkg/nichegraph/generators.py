"""
Labeled graph and tournament builders used by the tables, the oracle and the tests.
"""

import itertools

import networkx as nx

from nichegraph.graphs import BipartiteTournament, make_graph


def _relabeled(h, prefix):
    mapping = {i: f'{prefix}{i + 1}' for i in h.nodes}
    return make_graph(mapping.values(), ((mapping[u], mapping[v]) for u, v in h.edges))


def path_graph(m, prefix='p'):
    """Path on m vertices labeled prefix1 .. prefix<m>."""
    return _relabeled(nx.path_graph(m), prefix)


def cycle_graph(m, prefix='c'):
    if m < 3:
        raise ValueError(f'ERROR: a cycle needs at least 3 vertices, got {m}')
    return _relabeled(nx.cycle_graph(m), prefix)


def complete_graph(m, prefix='k'):
    return _relabeled(nx.complete_graph(m), prefix)


def complete_multipartite(parts):
    """
    Complete multipartite graph
    :param parts: iterable of vertex label lists, one per part
    :return: networkx.Graph where two vertices are adjacent iff they lie in different parts
    """
    parts = [list(part) for part in parts]
    edges = [(u, v) for p, q in itertools.combinations(parts, 2) for u in p for v in q]
    return make_graph([v for part in parts for v in part], edges)


def disjoint_union(*graphs):
    vertices = [v for g in graphs for v in g.nodes]
    if len(set(vertices)) != len(vertices):
        raise ValueError('ERROR: graphs of a disjoint union must have disjoint vertex sets')
    return make_graph(vertices, [edge for g in graphs for edge in g.edges])


def _labels(prefix, start, count):
    return [f'{prefix}{i}' for i in range(start, start + count)]


def three_clique_tournament(i, j, k):
    """
    Tournament with niche graph (K_i u K_j) u K_k: U = S | U-S with |S| = i, |U-S| = j, |V| = k and arcs
    [S, V] + [V, U-S]. Labels u1.. and v1..
    """
    s, rest = _labels('u', 1, i), _labels('u', i + 1, j)
    v = _labels('v', 1, k)
    arcs = set(itertools.product(s, v)) | set(itertools.product(v, rest))
    return BipartiteTournament(tuple(s + rest), tuple(v), frozenset(arcs))


def four_clique_tournament(i, j, k, l):
    """
    Tournament with niche graph (K_i u K_j) u (K_k u K_l): |S| = i, |U-S| = j, |T| = k, |V-T| = l and arcs
    [S, T] + [T, U-S] + [U-S, V-T] + [V-T, S]
    """
    s, rest_u = _labels('u', 1, i), _labels('u', i + 1, j)
    t, rest_v = _labels('v', 1, k), _labels('v', k + 1, l)
    arcs = (set(itertools.product(s, t)) | set(itertools.product(t, rest_u))
            | set(itertools.product(rest_u, rest_v)) | set(itertools.product(rest_v, s)))
    return BipartiteTournament(tuple(s + rest_u), tuple(t + rest_v), frozenset(arcs))
