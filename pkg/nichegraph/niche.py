"""
Niche graphs of bipartite tournaments and the two vertex relations that explain them.

Two vertices are adjacent in the niche graph of D when they share an out-neighbor (common prey) or an
in-neighbor (common predator). On a bipartite tournament:

    u == v  (equivalent)   iff  N+(u) = N+(v)
    u R v   (R-paired)     iff  u, v on the same side and N+(u) = N-(v)

Same-side non-adjacency in the niche graph is exactly R.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass

import networkx as nx

from nichegraph.errors import InvalidVertex
from nichegraph.graphs import LEFT, RIGHT
from nichegraph.report import LawReport

logger = logging.getLogger(__name__)


def _check_vertex(d, v):
    if v not in d.digraph:
        raise InvalidVertex(f'ERROR: unknown vertex {v!r}')


def out_neighbors(d, v):
    _check_vertex(d, v)
    return frozenset(d.digraph.successors(v))


def in_neighbors(d, v):
    _check_vertex(d, v)
    return frozenset(d.digraph.predecessors(v))


def niche_graph(d):
    """
    Niche graph of a bipartite tournament
    :param d: BipartiteTournament
    :return: networkx.Graph on the tournament's vertices; node attribute 'side' records LEFT or RIGHT
    """
    g = nx.Graph()
    g.add_nodes_from(sorted(d.left), side=LEFT)
    g.add_nodes_from(sorted(d.right), side=RIGHT)
    for w in d.vertices:
        # Predators of w compete for it, prey of w share it as predator
        for group in (d.digraph.predecessors(w), d.digraph.successors(w)):
            g.add_edges_from(itertools.combinations(sorted(group), 2))
    return g


@dataclass(frozen=True)
class EquivPartition:
    """Classes of equal out-neighborhoods, ordered by smallest member."""
    classes: tuple
    side_of_class: dict

    def class_of(self, v):
        for cls in self.classes:
            if v in cls:
                return cls
        raise InvalidVertex(f'ERROR: unknown vertex {v!r}')


def equiv_partition(d):
    groups = {}
    for v in d.vertices:
        groups.setdefault(out_neighbors(d, v), set()).add(v)
    classes = tuple(sorted((frozenset(group) for group in groups.values()), key=min))
    return EquivPartition(classes, {cls: d.side_of(min(cls)) for cls in classes})


@dataclass(frozen=True)
class RPairing:
    pairs: frozenset
    unpaired: frozenset

    def sorted_pairs(self):
        return sorted(tuple(sorted(pair)) for pair in self.pairs)


def r_related(d, u, v):
    """u R_D v: same side and N+(u) = N-(v)."""
    return d.side_of(u) == d.side_of(v) and out_neighbors(d, u) == in_neighbors(d, v)


def r_image(d, u):
    """R_D(u): every vertex R-related to u."""
    return frozenset(v for v in d.vertices if r_related(d, u, v))


def r_pairing(d):
    outs = {v: out_neighbors(d, v) for v in d.vertices}
    ins = {v: in_neighbors(d, v) for v in d.vertices}
    pairs = set()
    for side in (d.left, d.right):
        for u, v in itertools.combinations(side, 2):
            if outs[u] == ins[v]:
                pairs.add(frozenset((u, v)))
    paired = {v for pair in pairs for v in pair}
    return RPairing(frozenset(pairs), frozenset(set(d.vertices) - paired))


def verify_relation_laws(d, g=None):
    """
    Check the relation laws on the niche graph of d, collecting every violation
    :param d: BipartiteTournament
    :param g: its niche graph, computed when omitted
    :return: LawReport
    """
    if g is None:
        g = niche_graph(d)
    partition = equiv_partition(d)
    class_of = {v: partition.class_of(v) for v in d.vertices}
    side = {v: d.side_of(v) for v in d.vertices}
    outs = {v: out_neighbors(d, v) for v in d.vertices}
    ins = {v: in_neighbors(d, v) for v in d.vertices}
    images = {u: frozenset(v for v in d.vertices if side[u] == side[v] and outs[u] == ins[v])
              for u in d.vertices}
    cross, non_edge, chain, homogeneous, image = [], [], [], [], []

    for u, v in itertools.combinations(sorted(d.vertices), 2):
        if side[u] != side[v]:
            if g.has_edge(u, v):
                cross.append((u, v))
            continue
        # Same side: non-adjacent iff R-paired
        if (not g.has_edge(u, v)) != (v in images[u]):
            non_edge.append((u, v))

    for v in sorted(d.vertices):
        related = sorted(images[v])
        for u, w in itertools.combinations(related, 2):
            if not g.has_edge(u, w) or class_of[u] != class_of[w]:
                chain.append((u, v, w))
        for u in related:
            # u R v  iff  R(u) = [v]
            if images[u] != class_of[v]:
                image.append((u, v))

    closed = {v: frozenset(g[v]) | {v} for v in g.nodes}
    for cls in partition.classes:
        for u, v in itertools.combinations(sorted(cls), 2):
            if not g.has_edge(u, v) or closed[u] != closed[v]:
                homogeneous.append((u, v))

    report = LawReport()
    report.add('no_cross_side_edges', cross)
    report.add('non_edge_iff_r_pair', non_edge)
    report.add('r_chain_same_class', chain)
    report.add('r_image_is_class', image)
    report.add('equiv_class_homogeneous_clique', homogeneous)
    if not report.passed:
        logger.debug(f'Relation laws failed: {[r.name for r in report.failures]}')
    return report
