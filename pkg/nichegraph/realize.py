"""
Witness tournaments for realizable graphs.

Three or four complete components use fixed arc layouts:
    one side split S | U-S, other side V:          [S, V] + [V, U-S]
    both sides split S | U-S and T | V-T:           [S, T] + [T, U-S] + [U-S, V-T] + [V-T, S]

Two components G1, G2 are realized on their templates L1, L2 first:
    - Z1, Z2 hold one representative per part, s_i = |Z_i|, roles swapped so that s1 >= s2
    - Q_1 < Q_2 < ... < Q_s2 = Z2 is the chain of ascending prefixes of Z2
    - psi sends Z1 injectively to partitions {Y, Z2 - Y} of Z2, covering every {Q_i, Z2 - Q_i}
    - u in Z1 gets arcs u -> Y_u and (Z2 - Y_u) -> u, Y_u being the member containing the smallest vertex of Z2
    - the partner of a representative of L1 takes the reversed arcs of its representative against Z2
    - the partner of a representative of L2 then takes the reversed arcs of its representative against V(L1)
The template tournament is finally expanded: every arc (x, y) becomes all arcs from the clique of x to the clique of y.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass

import networkx as nx

from nichegraph.errors import CertificateMismatch, InternalRoundTripFailure
from nichegraph.graphs import BipartiteTournament, induced, same_graph
from nichegraph.niche import niche_graph, out_neighbors, in_neighbors
from nichegraph.recognize import Reason, certificate_problems, recognize
from nichegraph.structure import expansion_profile

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class WitnessPlan:
    """
    Construction data of a two-component witness. Index 1 refers to the component with the larger s = a + b,
    which is not necessarily side 1 of the certificate (see `swapped`).
    """
    l1: nx.Graph
    l2: nx.Graph
    parts1: tuple
    parts2: tuple
    z1: tuple
    z2: tuple
    chain: tuple
    psi: dict
    orientation_choice: dict
    clique_map: dict
    swapped: bool
    template: BipartiteTournament

    @property
    def partners(self):
        """Representative -> the other template vertex of its size-two part."""
        return {part[0]: part[1] for part in self.parts1 + self.parts2 if len(part) == 2}


def _check_certificate(g, cert, reason):
    if not cert.is_yes or cert.reason != reason:
        raise CertificateMismatch(f'ERROR: expected a YES certificate with reason {reason.value}, '
                                  f'got {cert.decision.value} {cert.reason.value}')
    problems = certificate_problems(g, cert)
    if problems:
        raise CertificateMismatch(f'ERROR: certificate does not fit the graph: {problems[0]}')


def _block_arcs(tails, heads):
    return set(itertools.product(sorted(tails), sorted(heads)))


def realize_three_four(g, cert):
    """
    Witness for three or four complete components
    :param g: networkx.Graph
    :param cert: YES certificate with reason OK_ThreeFour
    :return: BipartiteTournament on the vertices of g
    """
    _check_certificate(g, cert, Reason.OK_THREE_FOUR)
    side1, side2 = cert.sides
    left = frozenset().union(*side1)
    right = frozenset().union(*side2)

    if len(side1) == 2 and len(side2) == 2:
        s, rest_u = side1
        t, rest_v = side2
        arcs = _block_arcs(s, t) | _block_arcs(t, rest_u) | _block_arcs(rest_u, rest_v) | _block_arcs(rest_v, s)
    else:
        # The side holding two components plays U
        split, whole = (side1, side2) if len(side1) == 2 else (side2, side1)
        s, rest_u = split
        v = whole[0]
        arcs = _block_arcs(s, v) | _block_arcs(v, rest_u)
    return BipartiteTournament(tuple(left), tuple(right), frozenset(arcs))


# -------------------------------
# Two components
# -------------------------------
def _partition(z2, y):
    y = frozenset(y)
    return frozenset((y, frozenset(z2) - y))


def _assign_psi(z1, z2, chain):
    """
    Chain pairs go to the first |chain| representatives of Z1 in order, the remaining ones take the unused
    partitions in the lexicographic order of the characteristic bitstring of the member containing Z2[0]
    """
    psi = {}
    used = set()
    for u, q in zip(z1, chain):
        psi[u] = _partition(z2, q)
        used.add(psi[u])
    remaining = list(z1[len(chain):])
    for bits in itertools.product((0, 1), repeat=len(z2) - 1):
        if not remaining:
            break
        y = {z2[0]} | {z for z, bit in zip(z2[1:], bits) if bit}
        partition = _partition(z2, y)
        if partition in used:
            continue
        psi[remaining.pop(0)] = partition
        used.add(partition)
    if remaining:
        raise InternalRoundTripFailure(f'ERROR: {len(z1)} representatives exceed the '
                                       f'{2 ** (len(z2) - 1)} partitions of Z2')
    return psi


def _template_side(component, b):
    profile = expansion_profile(component)
    template, parts, clique_map = profile.template(b)
    return template, tuple(parts), clique_map


def build_witness_plan(g, cert):
    """
    Template tournament of a two-component certificate, with every intermediate choice recorded
    :return: WitnessPlan
    """
    comp_a, comp_b = cert.sides[0][0], cert.sides[1][0]
    a1, b1, a2, b2 = cert.params
    sides = [(induced(g, comp_a), b1, a1 + b1), (induced(g, comp_b), b2, a2 + b2)]
    swapped = sides[0][2] < sides[1][2]
    if swapped:
        sides.reverse()

    l1, parts1, map1 = _template_side(sides[0][0], sides[0][1])
    l2, parts2, map2 = _template_side(sides[1][0], sides[1][1])
    z1 = tuple(sorted(part[0] for part in parts1))
    z2 = tuple(sorted(part[0] for part in parts2))
    chain = tuple(frozenset(z2[:i]) for i in range(1, len(z2) + 1))
    psi = _assign_psi(z1, z2, chain)
    choice = {u: next(member for member in psi[u] if z2[0] in member) for u in z1}

    # forward[x, w]: x -> w for x in V(L1), w in V(L2)
    forward = {}
    for u in z1:
        for w in z2:
            forward[u, w] = w in choice[u]
    for part in parts1:
        if len(part) == 2:
            z, partner = part
            for w in z2:
                forward[partner, w] = not forward[z, w]
    for part in parts2:
        if len(part) == 2:
            w, partner = part
            for x in l1.nodes:
                forward[x, partner] = not forward[x, w]

    arcs = frozenset((x, w) if ahead else (w, x) for (x, w), ahead in forward.items())
    template = BipartiteTournament(tuple(l1.nodes), tuple(l2.nodes), arcs)
    logger.debug(f'Witness plan: Z1={list(z1)} Z2={list(z2)} swapped={swapped}')
    return WitnessPlan(l1=l1, l2=l2, parts1=parts1, parts2=parts2, z1=z1, z2=z2, chain=chain, psi=psi,
                       orientation_choice=choice, clique_map={**map1, **map2}, swapped=swapped, template=template)


def witness_plan_problems(plan, d):
    """
    Check the construction claims on the template tournament d
    :param plan: WitnessPlan
    :param d: BipartiteTournament on the template vertices (normally plan.template)
    :return: list of problems; empty when every claim holds
    """
    problems = []
    z2 = frozenset(plan.z2)
    if len(plan.z1) > 2 ** (len(plan.z2) - 1):
        problems.append(f'|Z1| = {len(plan.z1)} exceeds 2^(|Z2| - 1)')
    images = list(plan.psi.values())
    if len(set(images)) != len(images) or set(plan.psi) != set(plan.z1):
        problems.append('psi is not an injection defined on Z1')
    for q in plan.chain:
        if _partition(z2, q) not in images:
            problems.append(f'chain pair {sorted(q)} is not covered by psi')

    for u in plan.z1:
        ahead = out_neighbors(d, u) & z2
        if _partition(z2, ahead) != plan.psi.get(u):
            problems.append(f'arcs of {u} into Z2 do not follow psi')

    for parts in (plan.parts1, plan.parts2):
        pairs = {v: frozenset((out_neighbors(d, v), in_neighbors(d, v))) for part in parts for v in part}
        for p, q in itertools.combinations(parts, 2):
            for x, y in itertools.product(p, q):
                if pairs[x] == pairs[y]:
                    problems.append(f'{x} and {y} lie in different parts but share their neighborhood pair')
        for part in parts:
            if len(part) == 2 and out_neighbors(d, part[0]) != in_neighbors(d, part[1]):
                problems.append(f'partners {part[0]} and {part[1]} are not R-related')
    return problems


def realize_two(g, cert):
    """
    Witness for two components
    :param g: networkx.Graph
    :param cert: YES certificate with reason OK_Two
    :return: (BipartiteTournament on the vertices of g, WitnessPlan)
    """
    _check_certificate(g, cert, Reason.OK_TWO)
    plan = build_witness_plan(g, cert)
    problems = witness_plan_problems(plan, plan.template)
    if problems:
        raise InternalRoundTripFailure(f'ERROR: witness plan is broken: {problems[0]}')

    arcs = set()
    for tail, head in plan.template.arcs:
        arcs |= _block_arcs(plan.clique_map[tail], plan.clique_map[head])
    left, right = cert.sides[0][0], cert.sides[1][0]
    return BipartiteTournament(tuple(left), tuple(right), frozenset(arcs)), plan


def realize(g):
    """
    Witness tournament of g, or None when g is not niche-realizable
    :param g: networkx.Graph
    :return: BipartiteTournament whose niche graph equals g, or None
    """
    cert = recognize(g)
    if not cert.is_yes:
        logger.debug(f'No witness: {cert.reason.value}')
        return None
    if cert.reason == Reason.OK_THREE_FOUR:
        d = realize_three_four(g, cert)
    else:
        d, _ = realize_two(g, cert)
    if not same_graph(niche_graph(d), g):
        raise InternalRoundTripFailure('ERROR: niche graph of the witness differs from the input graph')
    return d
