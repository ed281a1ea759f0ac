"""
Graph kernel: labeled simple graphs, bipartite tournaments and the exact small-instance algorithms every other
module builds on.

A graph is a networkx.Graph whose nodes are VertexId strings. All set-valued results are returned in ascending
VertexId order so that runs are reproducible. The exact routines refuse inputs above their hard bound (see
nichegraph.config.Limits) instead of approximating.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import cached_property

import networkx as nx

from nichegraph.config import DEFAULT_LIMITS
from nichegraph.errors import (ArcWithinSide, DuplicateVertex, InvalidTournament, InvalidVertex, MissingArc,
                               NotAComponent, SizeLimit, VertexOnBothSides)

LEFT = 'left'
RIGHT = 'right'

# Whitespace and the characters '-', '>' and '#' are reserved by the file formats
_RESERVED = re.compile(r'[\s>#-]')


# -------------------------------
# Vertices and graphs
# -------------------------------
def validate_vertex_id(name):
    """
    Raise InvalidVertex unless name is a nonempty token without whitespace, '-', '>' or '#'
    """
    if not isinstance(name, str) or not name or _RESERVED.search(name):
        raise InvalidVertex(f'ERROR: invalid vertex identifier {name!r}')
    return name


def make_graph(vertices=None, edges=()):
    """
    Build a simple undirected graph
    Args:
        vertices: iterable of VertexIds. Default: the endpoints of edges
        edges: iterable of (u, v) pairs

    Returns:
        networkx.Graph with nodes inserted in ascending order
    """
    edges = [tuple(edge) for edge in edges]
    if vertices is None:
        vertices = {v for edge in edges for v in edge}
    vertices = list(vertices)
    seen = set()
    for v in vertices:
        validate_vertex_id(v)
        if v in seen:
            raise DuplicateVertex(f'ERROR: vertex {v} declared twice')
        seen.add(v)

    g = nx.Graph()
    g.add_nodes_from(sorted(vertices))
    for u, v in edges:
        for endpoint in (u, v):
            if endpoint not in seen:
                raise InvalidVertex(f'ERROR: edge endpoint {endpoint!r} is not a vertex')
        if u == v:
            raise InvalidVertex(f'ERROR: loop at {u} (graphs are simple)')
        g.add_edge(u, v)
    return g


def edge_set(g):
    """Edges of g as a set of frozensets (labeled, order-free)."""
    return {frozenset(edge) for edge in g.edges}


def same_graph(g, h):
    """
    Labeled equality: same vertex set and same edge set. Node attributes are ignored.
    """
    return set(g.nodes) == set(h.nodes) and edge_set(g) == edge_set(h)


def is_complete(g):
    n = g.number_of_nodes()
    return g.number_of_edges() == n * (n - 1) // 2


def components(g):
    """
    Connected components of g, ordered by their smallest VertexId
    :param g: networkx.Graph
    :return: list of frozensets
    """
    return sorted((frozenset(c) for c in nx.connected_components(g)), key=min)


def induced(g, s):
    """
    Subgraph of g induced by the vertex set s (node attributes are kept)
    :param g: networkx.Graph
    :param s: iterable of VertexIds, subset of V(g)
    :return: networkx.Graph
    """
    s = set(s)
    unknown = sorted(s - set(g.nodes))
    if unknown:
        raise InvalidVertex(f'ERROR: unknown vertices {", ".join(map(str, unknown))}')
    h = nx.Graph()
    h.add_nodes_from((v, g.nodes[v]) for v in sorted(s))
    h.add_edges_from(g.subgraph(s).edges)
    return h


def complement(g):
    """Same vertices; uv is an edge iff it is not an edge of g."""
    h = nx.Graph()
    order = sorted(g.nodes)
    h.add_nodes_from(order)
    h.add_edges_from((u, v) for u, v in itertools.combinations(order, 2) if not g.has_edge(u, v))
    return h


def adjacency_masks(g, order=None):
    """
    Bitmask adjacency: bit j of masks[i] is set iff order[i] and order[j] are adjacent
    """
    order = sorted(g.nodes) if order is None else list(order)
    index = {v: i for i, v in enumerate(order)}
    masks = [0] * len(order)
    for u, v in g.edges:
        masks[index[u]] |= 1 << index[v]
        masks[index[v]] |= 1 << index[u]
    return order, masks


def _check_size(routine, g, limit):
    if g.number_of_nodes() > limit:
        raise SizeLimit(routine, g.number_of_nodes(), limit)


def iter_bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask):
    return bin(mask).count('1')


# -------------------------------
# Canonical codes
# -------------------------------
@dataclass(frozen=True, order=True)
class CanonicalCode:
    """
    Isomorphism invariant of a small graph: first byte is the vertex count, the rest the minimum upper-triangle
    adjacency bitstring over all vertex orders compatible with the refined degree partition.
    """
    bytes: bytes

    @property
    def order(self):
        return self.bytes[0]

    def hex(self):
        return self.bytes.hex()


def _refined_cells(n, masks):
    # Color refinement started from degrees; colors are ranks of sorted signatures, hence
    # invariant under relabeling
    colors = [popcount(m) for m in masks]
    while True:
        signatures = [(colors[v], tuple(sorted(colors[u] for u in iter_bits(masks[v])))) for v in range(n)]
        palette = {sig: rank for rank, sig in enumerate(sorted(set(signatures)))}
        refined = [palette[sig] for sig in signatures]
        stable = len(palette) == len(set(colors))
        colors = refined
        if stable:
            break
    cells = {}
    for v in range(n):
        cells.setdefault(colors[v], []).append(v)
    return [cells[color] for color in sorted(cells)]


def code_from_masks(n, masks):
    """
    Canonical code of the graph given by n bitmask adjacency rows (see adjacency_masks)
    """
    total = n * (n - 1) // 2
    if n == 0:
        return CanonicalCode(bytes([0]))

    # cell_at[k] lists the candidates for position k of the vertex order
    cell_at = []
    for cell in _refined_cells(n, masks):
        cell_at.extend([cell] * len(cell))

    # Twins (equal open or equal closed neighborhoods) are interchangeable, so only the first unused member of
    # a twin class is tried at each position
    twin_of = {}
    for v in range(n):
        twin_of[v] = next(u for u in range(v + 1)
                          if masks[u] & ~(1 << v) == masks[v] & ~(1 << u))

    best = None
    placed = []
    used = 0

    def place(k, code):
        nonlocal best, used
        if k == n:
            if best is None or code < best:
                best = code
            return
        # Bits contributed by position k: adjacency to positions 0..k-1
        length = k * (k + 1) // 2
        tried = set()
        for v in cell_at[k]:
            if used >> v & 1 or twin_of[v] in tried:
                continue
            tried.add(twin_of[v])
            extended = code
            for u in placed:
                extended = (extended << 1) | (masks[v] >> u & 1)
            if best is not None and extended > best >> (total - length):
                continue
            placed.append(v)
            used |= 1 << v
            place(k + 1, extended)
            used ^= 1 << v
            placed.pop()

    place(0, 0)
    return CanonicalCode(bytes([n]) + best.to_bytes((total + 7) // 8, 'big'))


def canonical_code(g, limit=None):
    """
    Canonical code of g: equal codes iff isomorphic graphs
    :param g: networkx.Graph with at most `limit` vertices
    :param limit: hard size bound. Default: Limits.canonical_code
    :return: CanonicalCode
    """
    _check_size('canonical_code', g, DEFAULT_LIMITS.canonical_code if limit is None else limit)
    order, masks = adjacency_masks(g)
    return code_from_masks(len(order), masks)


# -------------------------------
# Exact invariants
# -------------------------------
def clique_number(g, limit=None):
    """omega(g), by maximal clique enumeration."""
    _check_size('clique_number', g, DEFAULT_LIMITS.clique_number if limit is None else limit)
    if g.number_of_nodes() == 0:
        return 0
    return max(len(clique) for clique in nx.find_cliques(g))


def max_matching_size(g, limit=None):
    """Cardinality of a maximum matching (blossom algorithm, exact)."""
    _check_size('max_matching_size', g, DEFAULT_LIMITS.matching if limit is None else limit)
    return len(nx.max_weight_matching(g, maxcardinality=True))


def _hamiltonian_walk(g, closed):
    order, adj = adjacency_masks(g)
    n = len(order)
    full = (1 << n) - 1
    # ends[mask]: vertices ending a simple path that covers exactly mask (cycles start at vertex 0)
    ends = [0] * (1 << n)
    if closed:
        ends[1] = 1
    else:
        for i in range(n):
            ends[1 << i] = 1 << i
    for mask in range(1, full + 1):
        last = ends[mask]
        if not last:
            continue
        free = full & ~mask
        for v in iter_bits(last):
            for u in iter_bits(adj[v] & free):
                ends[mask | (1 << u)] |= 1 << u

    finals = ends[full] & adj[0] if closed else ends[full]
    if not finals:
        return None

    # Walk back from the lowest admissible end vertex
    v = next(iter_bits(finals))
    mask = full
    walk = [v]
    while mask & (mask - 1):
        previous = mask ^ (1 << v)
        v = next(iter_bits(ends[previous] & adj[v]))
        walk.append(v)
        mask = previous
    walk.reverse()
    return [order[i] for i in walk]


def hamiltonian_path(g, limit=None):
    """
    A Hamilton path of g as a vertex list, or None (bitmask dynamic program)
    """
    _check_size('hamiltonian_path', g, DEFAULT_LIMITS.hamiltonian if limit is None else limit)
    if g.number_of_nodes() == 0 or not nx.is_connected(g):
        return None
    return _hamiltonian_walk(g, closed=False)


def hamiltonian_cycle(g, limit=None):
    """
    A Hamilton cycle of g as a vertex list starting at the smallest vertex (the closing edge is implicit), or
    None. Graphs with fewer than three vertices have no Hamilton cycle.
    """
    _check_size('hamiltonian_cycle', g, DEFAULT_LIMITS.hamiltonian if limit is None else limit)
    if g.number_of_nodes() < 3 or not nx.is_connected(g):
        return None
    return _hamiltonian_walk(g, closed=True)


def _induced_cycles(g, min_length, max_length):
    """
    Yield induced cycles with min_length <= length <= max_length. Each cycle starts at its smallest vertex and
    only vertices ranked above the start are used, so the search is exhaustive without restarting.
    """
    order = sorted(g.nodes)
    rank = {v: i for i, v in enumerate(order)}
    min_length = max(min_length, 4)

    def extend(path):
        start, last = path[0], path[-1]
        interior = path[1:-1]
        for x in sorted(g[last], key=rank.get):
            if rank[x] <= rank[start] or x in path:
                continue
            if any(g.has_edge(x, y) for y in interior):
                continue
            if g.has_edge(x, start):
                if min_length <= len(path) + 1 <= max_length:
                    yield path + [x]
            elif len(path) + 1 < max_length:
                yield from extend(path + [x])

    for s in order:
        for p in sorted(g[s], key=rank.get):
            if rank[p] > rank[s]:
                yield from extend([s, p])


def find_hole(g, k=4, limit=None):
    """
    Shortest induced cycle of length >= k (k >= 4) as a vertex list, or None
    """
    _check_size('find_hole', g, DEFAULT_LIMITS.holes if limit is None else limit)
    if k < 4:
        raise ValueError(f'ERROR: holes have length at least 4, got k={k}')
    for length in range(k, g.number_of_nodes() + 1):
        cycle = next(_induced_cycles(g, length, length), None)
        if cycle is not None:
            return cycle
    return None


shortest_long_hole = find_hole


def find_odd_hole(g, limit=None):
    """Shortest induced cycle of odd length >= 5, or None."""
    _check_size('find_odd_hole', g, DEFAULT_LIMITS.holes if limit is None else limit)
    for length in range(5, g.number_of_nodes() + 1, 2):
        cycle = next(_induced_cycles(g, length, length), None)
        if cycle is not None:
            return cycle
    return None


def is_chordal(g):
    """Chordality via maximum cardinality search (perfect elimination ordering), any size."""
    return nx.is_chordal(g)


def find_asteroidal_triple(g, limit=None):
    _check_size('find_asteroidal_triple', g, DEFAULT_LIMITS.asteroidal if limit is None else limit)
    triple = nx.find_asteroidal_triple(g)
    return None if triple is None else tuple(sorted(triple))


def has_asteroidal_triple(g, limit=None):
    return find_asteroidal_triple(g, limit=limit) is not None


def is_interval(g, limit=None):
    """
    Interval recognition by the chordal + asteroidal-triple-free characterization
    """
    return is_chordal(g) and not has_asteroidal_triple(g, limit=limit)


def find_independent_triple(g):
    order = sorted(g.nodes)
    for i, u in enumerate(order):
        for j in range(i + 1, len(order)):
            v = order[j]
            if g.has_edge(u, v):
                continue
            for w in order[j + 1:]:
                if not g.has_edge(u, w) and not g.has_edge(v, w):
                    return u, v, w
    return None


def has_independent_triple(g):
    return find_independent_triple(g) is not None


def find_induced_p4(g):
    """Induced path a-b-c-d on four vertices, or None."""
    for b in sorted(g.nodes):
        for c in sorted(g[b]):
            for a in sorted(set(g[b]) - set(g[c]) - {c}):
                for d in sorted(set(g[c]) - set(g[b]) - {b}):
                    if not g.has_edge(a, d):
                        return a, b, c, d
    return None


def contains_induced_p4(g):
    return find_induced_p4(g) is not None


def find_claw(g):
    """Induced K_{1,3} as (center, leaf, leaf, leaf), or None."""
    for center in sorted(g.nodes):
        for x, y, z in itertools.combinations(sorted(g[center]), 3):
            if not (g.has_edge(x, y) or g.has_edge(x, z) or g.has_edge(y, z)):
                return center, x, y, z
    return None


def contains_claw(g):
    return find_claw(g) is not None


def component_diameter(g, c):
    """
    Diameter of the component c of g (0 for a single vertex)
    """
    c = frozenset(c)
    if c not in components(g):
        raise NotAComponent(f'ERROR: {sorted(c)} is not a component')
    if len(c) == 1:
        return 0
    return nx.diameter(g.subgraph(c))


def is_two_connected(g):
    """
    kappa(g) >= 2, with kappa(K_n) = n - 1. Disconnected graphs and graphs on fewer than three vertices are not
    2-connected.
    """
    if g.number_of_nodes() < 3 or not nx.is_connected(g):
        return False
    if is_complete(g):
        return True
    return nx.is_biconnected(g)


def is_planar(g, limit=None):
    """Exact planarity (left-right test)."""
    _check_size('is_planar', g, DEFAULT_LIMITS.planarity if limit is None else limit)
    planar, _ = nx.check_planarity(g)
    return planar


# -------------------------------
# Bipartite tournaments
# -------------------------------
@dataclass(frozen=True)
class BipartiteTournament:
    """
    Orientation of the complete bipartite graph between `left` (U) and `right` (V). `arcs` holds (tail, head)
    pairs, exactly one per cross pair. Sides are stored sorted.
    """
    left: tuple
    right: tuple
    arcs: frozenset

    def __post_init__(self):
        left = tuple(sorted(self.left))
        right = tuple(sorted(self.right))
        for side in (left, right):
            for v in side:
                validate_vertex_id(v)
            for a, b in zip(side, side[1:]):
                if a == b:
                    raise DuplicateVertex(f'ERROR: vertex {a} declared twice')
        if not left or not right:
            raise InvalidTournament('ERROR: both sides of a bipartite tournament must be nonempty')
        both = sorted(set(left) & set(right))
        if both:
            raise VertexOnBothSides(f'ERROR: vertex {both[0]} is on both sides')

        side = {v: LEFT for v in left}
        side.update((v, RIGHT) for v in right)
        arcs = frozenset(tuple(arc) for arc in self.arcs)
        for tail, head in arcs:
            for v in (tail, head):
                if v not in side:
                    raise InvalidVertex(f'ERROR: arc endpoint {v!r} is not a vertex')
            if side[tail] == side[head]:
                raise ArcWithinSide(f'ERROR: arc {tail} -> {head} joins two vertices of the same side')
            if (head, tail) in arcs:
                raise InvalidTournament(f'ERROR: pair {tail}, {head} is oriented both ways')
        for u in left:
            for v in right:
                if (u, v) not in arcs and (v, u) not in arcs:
                    raise MissingArc(u, v)

        object.__setattr__(self, 'left', left)
        object.__setattr__(self, 'right', right)
        object.__setattr__(self, 'arcs', arcs)

    @classmethod
    def from_index(cls, left, right, index):
        """
        Orientation number `index` of K_{m,n}: bit i*n + j set means left[i] -> right[j], clear means
        right[j] -> left[i]. The bit order follows the sequences as given.
        """
        left, right = list(left), list(right)
        n = len(right)
        arcs = set()
        for i, u in enumerate(left):
            for j, v in enumerate(right):
                arcs.add((u, v) if index >> (i * n + j) & 1 else (v, u))
        return cls(tuple(left), tuple(right), frozenset(arcs))

    @property
    def index(self):
        """Inverse of from_index over the sorted sides."""
        n = len(self.right)
        return sum(1 << (i * n + j) for i, u in enumerate(self.left) for j, v in enumerate(self.right)
                   if (u, v) in self.arcs)

    @property
    def vertices(self):
        return self.left + self.right

    @cached_property
    def digraph(self):
        d = nx.DiGraph()
        d.add_nodes_from(self.left, side=LEFT)
        d.add_nodes_from(self.right, side=RIGHT)
        d.add_edges_from(sorted(self.arcs))
        return d

    def side_of(self, v):
        if v in self.left:
            return LEFT
        if v in self.right:
            return RIGHT
        raise InvalidVertex(f'ERROR: unknown vertex {v!r}')

    def reversed(self):
        """Tournament with every arc flipped; it has the same niche graph."""
        return BipartiteTournament(self.left, self.right, frozenset((h, t) for t, h in self.arcs))
