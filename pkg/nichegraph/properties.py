"""
Structural laws every niche-realizable graph obeys, as executable checks.

Each law reports PASS, FAIL with a concrete witness, or SKIPPED when an exact subroutine would exceed its size
bound (see nichegraph.config.Limits).
"""

from __future__ import annotations

import logging

from nichegraph.config import DEFAULT_LIMITS
from nichegraph.errors import CertificateMismatch, SizeLimit
from nichegraph.graphs import (LEFT, RIGHT, adjacency_masks, clique_number, complement, component_diameter,
                               components, find_asteroidal_triple, find_claw, find_hole, find_independent_triple,
                               find_induced_p4, find_odd_hole, hamiltonian_cycle, hamiltonian_path, induced,
                               is_chordal, is_interval, is_planar, is_two_connected, max_matching_size, iter_bits,
                               popcount)
from nichegraph.recognize import Reason
from nichegraph.report import LawReport
from nichegraph.structure import condensation, expansion_profile

logger = logging.getLogger(__name__)


def _sides(g):
    """Vertex sets of the recorded tournament sides, or None when g carries no side labels."""
    labels = [g.nodes[v].get('side') for v in g.nodes]
    if not labels or any(label not in (LEFT, RIGHT) for label in labels):
        return None
    return [frozenset(v for v in g.nodes if g.nodes[v]['side'] == side) for side in (LEFT, RIGHT)]


def _law(report, name, check):
    """Run check() -> list of witnesses; an oversized input turns the law into SKIPPED."""
    try:
        witnesses = check()
    except SizeLimit as e:
        report.skip(name, f'{e.routine} supports at most {e.limit} (got {e.size})')
        return
    report.add(name, witnesses)


def _some(witness):
    return [] if witness is None else [witness]


def verify_niche_properties(g, limits=DEFAULT_LIMITS):
    """
    Run every structural law on g
    :param g: networkx.Graph, optionally with a 'side' node attribute as set by niche_graph
    :param limits: Limits
    :return: LawReport
    """
    report = LawReport()
    comps = components(g)
    co = complement(g)
    # Every component lies inside one side, so without side labels alpha is checked per component
    groups = _sides(g) or comps

    def alpha():
        return [w for group in groups if (w := find_independent_triple(induced(g, group))) is not None]

    def component_count():
        return [] if 2 <= len(comps) <= 4 else [(f'{len(comps)} components',)]

    def diameters(graph):
        return [tuple(sorted(c)) for c in components(graph) if component_diameter(graph, c) > 2]

    def long_hole():
        return _some(find_hole(g, 5, limit=limits.holes)) + _some(find_hole(co, 5, limit=limits.holes))

    def perfect():
        return _some(find_odd_hole(g, limit=limits.holes)) + _some(find_odd_hole(co, limit=limits.holes))

    def chordal_iff_interval():
        chordal = is_chordal(g)
        if chordal != is_interval(g, limit=limits.asteroidal):
            return [(f'chordal={chordal}', f'interval={not chordal}')]
        return []

    def clique_bounds():
        omega = clique_number(g, limit=limits.clique_number)
        witnesses = [tuple(sorted(c)) for c in comps if len(c) > 2 * omega]
        if g.number_of_nodes() > 4 * omega:
            witnesses.append((f'|V|={g.number_of_nodes()}', f'omega={omega}'))
        return witnesses

    def matching_bound():
        size = max_matching_size(g, limit=limits.matching)
        return [(f'matching={size}', f'|V|={g.number_of_nodes()}')] if 2 * size < g.number_of_nodes() - 4 else []

    def hamilton_paths():
        return [tuple(sorted(c)) for c in comps if hamiltonian_path(induced(g, c), limit=limits.hamiltonian) is None]

    def hamilton_cycles():
        witnesses = []
        for c in comps:
            h = induced(g, c)
            if is_two_connected(h) and hamiltonian_cycle(h, limit=limits.hamiltonian) is None:
                witnesses.append(tuple(sorted(c)))
        return witnesses

    def planar_bound():
        if not is_planar(g, limit=limits.planarity):
            return []
        witnesses = [tuple(sorted(c)) for c in comps if len(c) > 8]
        if g.number_of_nodes() > 16:
            witnesses.append((f'|V|={g.number_of_nodes()}',))
        return witnesses

    _law(report, 'alpha_at_most_two', alpha)
    _law(report, 'component_count', component_count)
    _law(report, 'no_induced_p4', lambda: _some(find_induced_p4(g)))
    _law(report, 'claw_free', lambda: _some(find_claw(g)))
    _law(report, 'at_free', lambda: _some(find_asteroidal_triple(g, limit=limits.asteroidal)))
    _law(report, 'component_diameter', lambda: diameters(g))
    _law(report, 'complement_component_diameter', lambda: diameters(co))
    _law(report, 'no_long_hole', long_hole)
    _law(report, 'perfect', perfect)
    _law(report, 'chordal_iff_interval', chordal_iff_interval)
    _law(report, 'clique_bounds', clique_bounds)
    _law(report, 'matching_bound', matching_bound)
    _law(report, 'hamilton_path_per_component', hamilton_paths)
    _law(report, 'hamilton_cycle_two_connected', hamilton_cycles)
    _law(report, 'planar_bound', planar_bound)
    logger.debug(f'Property suite on {g.number_of_nodes()} vertices: '
                 f'{len(report.failures)} failure(s)')
    return report


def verify_chordal_characterization(g, cert):
    """
    Does chordality of g agree with the structure read from its certificate?
    Chordal iff three or four complete components, or two components each complete or an expansion of P3
    (at most one size-two part).
    :param g: networkx.Graph
    :param cert: YES RecognitionCertificate of g
    :return: bool
    """
    if not cert.is_yes:
        raise CertificateMismatch('ERROR: the chordal characterization applies to YES certificates only')
    if tuple(cert.components) != tuple(components(g)):
        raise CertificateMismatch('ERROR: certificate components do not match the graph')
    if cert.reason == Reason.OK_THREE_FOUR:
        condition = True
    else:
        condition = all(profile.a <= 1 for profile in cert.profiles)
    return is_chordal(g) == condition


def _connected_mask(mask, masks):
    start = mask & -mask
    seen = start
    frontier = start
    while frontier:
        low = frontier & -frontier
        frontier ^= low
        grow = masks[low.bit_length() - 1] & mask & ~seen
        seen |= grow
        frontier |= grow
    return seen == mask


def _uniform_pair_expansion(h):
    profile = expansion_profile(h)
    if profile is None or profile.universal_clique or not profile.pair_parts:
        return False
    sizes = {len(clique) for pair in profile.pair_parts for clique in pair}
    return len(sizes) == 1


def verify_regular_substructure(g, max_subset=None, limits=DEFAULT_LIMITS):
    """
    Every connected, non-complete, regular induced subgraph must be an expansion of a complete multipartite graph
    whose parts all have size two, every vertex replaced by a clique of one common size
    :param g: networkx.Graph
    :param max_subset: largest subset size scanned. Default: all sizes
    :param limits: Limits (regular_subsets bounds |V(g)|)
    :return: LawReport with the single law regular_substructure
    """
    if g.number_of_nodes() > limits.regular_subsets:
        raise SizeLimit('verify_regular_substructure', g.number_of_nodes(), limits.regular_subsets)
    witnesses = []
    checked = 0
    for c in components(g):
        order, masks = adjacency_masks(induced(g, c))
        top = len(order) if max_subset is None else min(max_subset, len(order))
        for subset in range(1, 1 << len(order)):
            size = popcount(subset)
            if size < 3 or size > top:
                continue
            degrees = {popcount(masks[i] & subset) for i in iter_bits(subset)}
            if len(degrees) != 1 or degrees.pop() == size - 1 or not _connected_mask(subset, masks):
                continue
            checked += 1
            s = [order[i] for i in iter_bits(subset)]
            if not _uniform_pair_expansion(induced(g, s)):
                witnesses.append(tuple(s))
    logger.debug(f'Regular substructure: {checked} qualifying subset(s), {len(witnesses)} violation(s)')
    report = LawReport()
    report.add('regular_substructure', witnesses)
    return report


def condensation_shape_violations(g):
    """
    Components whose condensation is not complete multipartite with parts of size <= 2 and at most one size-one
    part
    """
    bad = []
    for c in components(g):
        co = complement(condensation(induced(g, c)).graph)
        degrees = [degree for _, degree in co.degree()]
        if any(degree > 1 for degree in degrees) or degrees.count(0) > 1:
            bad.append(tuple(sorted(c)))
    return bad


def verify_condensation_shape(g):
    return not condensation_shape_violations(g)
