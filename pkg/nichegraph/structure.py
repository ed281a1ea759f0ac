"""
Critical cliques, condensation, expansion and the expansion profile of a component.

Vertices with equal closed neighborhoods are homogeneous; the homogeneity classes are the critical cliques.
Identifying every critical clique yields the condensation G*, and G is recovered from G* by expanding each
representative back into its clique.

A connected niche-realizable component is an expansion of a complete multipartite graph whose parts have size
at most two. Its ExpansionProfile describes every such template at once: the number a of size-two parts is
fixed (non-adjacent critical cliques cannot be split), and the only freedom is how many size-one parts the
universal clique is cut into.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import networkx as nx

from nichegraph.errors import Disconnected, InvalidVertex
from nichegraph.graphs import complement, make_graph


# -------------------------------
# Critical cliques and condensation
# -------------------------------
@dataclass(frozen=True)
class CriticalCliquePartition:
    cliques: tuple

    def part_of(self, v):
        for clique in self.cliques:
            if v in clique:
                return clique
        raise InvalidVertex(f'ERROR: unknown vertex {v!r}')


def critical_cliques(g):
    """
    Homogeneity classes of g (equal closed neighborhoods), ordered by smallest member
    """
    groups = {}
    for v in g.nodes:
        groups.setdefault(frozenset(g[v]) | {v}, set()).add(v)
    return CriticalCliquePartition(tuple(sorted((frozenset(group) for group in groups.values()), key=min)))


@dataclass(frozen=True)
class Condensation:
    """Quotient of a graph by its critical cliques. Representatives are the smallest VertexId of each clique."""
    graph: nx.Graph
    clique_of: dict

    @property
    def sizes(self):
        return {rep: len(clique) for rep, clique in self.clique_of.items()}


def condensation(g):
    partition = critical_cliques(g)
    rep = {}
    clique_of = {}
    for clique in partition.cliques:
        clique_of[min(clique)] = clique
        for v in clique:
            rep[v] = min(clique)
    edges = {(rep[u], rep[v]) for u, v in g.edges if rep[u] != rep[v]}
    return Condensation(make_graph(clique_of, edges), clique_of)


# -------------------------------
# Expansion
# -------------------------------
def default_namer(v, i):
    """i-th member of the clique replacing v: v itself, then v.1, v.2, ..."""
    return v if i == 0 else f'{v}.{i}'


def expand_with(h, cliques):
    """
    Replace every vertex v of h with the clique cliques[v]; two cliques are fully joined iff their template
    vertices are adjacent in h
    :param h: template graph
    :param cliques: mapping template vertex -> nonempty iterable of new VertexIds (pairwise disjoint)
    :return: networkx.Graph
    """
    cliques = {v: sorted(cliques[v]) for v in h.nodes}
    for v, members in cliques.items():
        if not members:
            raise ValueError(f'ERROR: empty clique for template vertex {v}')
    edges = []
    for members in cliques.values():
        edges.extend(itertools.combinations(members, 2))
    for u, v in h.edges:
        edges.extend(itertools.product(cliques[u], cliques[v]))
    return make_graph([x for members in cliques.values() for x in members], edges)


def expand(h, sizes, namer=default_namer):
    """
    Expansion of h where vertex v becomes a clique of sizes[v] vertices labeled namer(v, 0..sizes[v]-1)
    """
    cliques = {}
    for v in h.nodes:
        size = sizes[v]
        if size < 1:
            raise ValueError(f'ERROR: clique size of {v} must be positive, got {size}')
        cliques[v] = [namer(v, i) for i in range(size)]
    return expand_with(h, cliques)


# -------------------------------
# Expansion profile
# -------------------------------
@dataclass(frozen=True)
class ExpansionProfile:
    """
    All complete multipartite templates (parts of size <= 2) a connected component expands from.

    a: number of size-two parts; each is a pair of non-adjacent critical cliques listed in pair_parts
    universal_clique: the critical clique adjacent to everything else (possibly empty)
    b_min..b_max: feasible numbers of size-one parts
    """
    a: int
    b_min: int
    b_max: int
    pair_parts: tuple
    universal_clique: frozenset

    @property
    def b_range(self):
        return range(self.b_min, self.b_max + 1)

    @property
    def size(self):
        return sum(len(x) + len(y) for x, y in self.pair_parts) + len(self.universal_clique)

    def x_set(self):
        """X(G) as an explicit sorted list of (a, b) pairs."""
        return [(self.a, b) for b in self.b_range]

    def universal_split(self, b):
        """
        Cut the universal clique into b cliques of sizes (c - b + 1, 1, ..., 1)
        """
        if b not in self.b_range:
            raise ValueError(f'ERROR: b={b} outside the feasible range {self.b_min}..{self.b_max}')
        members = sorted(self.universal_clique)
        if b == 0:
            return []
        head = len(members) - b + 1
        return [frozenset(members[:head])] + [frozenset([v]) for v in members[head:]]

    def template(self, b):
        """
        Complete multipartite template with a size-two parts and b size-one parts
        :return: (template graph, parts, clique_map) where parts lists the template vertices of every part
        (pair parts first) and clique_map sends each template vertex to the clique it expands into. A template
        vertex is labeled by the smallest VertexId of its clique.
        """
        clique_map = {}
        parts = []
        for x, y in self.pair_parts:
            parts.append(tuple(sorted((min(x), min(y)))))
            clique_map[min(x)] = x
            clique_map[min(y)] = y
        for clique in self.universal_split(b):
            parts.append((min(clique),))
            clique_map[min(clique)] = clique
        edges = [(u, v) for p, q in itertools.combinations(parts, 2) for u in p for v in q]
        return make_graph(clique_map, edges), parts, clique_map


def expansion_profile(component):
    """
    Expansion profile of a connected component, or None when its condensation is not a complete multipartite
    graph with parts of size at most two (equivalently: the complement of the condensation has a vertex of
    degree two or more)
    """
    if component.number_of_nodes() == 0 or not nx.is_connected(component):
        raise Disconnected('ERROR: expansion_profile needs a connected, nonempty graph')
    cond = condensation(component)
    co = complement(cond.graph)
    if any(degree > 1 for _, degree in co.degree()):
        return None

    pair_parts = tuple(sorted((tuple(sorted((cond.clique_of[u], cond.clique_of[v]), key=min))
                               for u, v in co.edges), key=lambda pair: min(pair[0])))
    # Representatives adjacent to every other representative are homogeneous, hence there is at most one
    universal = frozenset().union(*(cond.clique_of[v] for v, degree in co.degree() if degree == 0))
    b_min = 1 if universal else 0
    return ExpansionProfile(a=len(pair_parts), b_min=b_min, b_max=len(universal), pair_parts=pair_parts,
                            universal_clique=universal)
