"""
Decide whether a graph is the niche graph of some bipartite tournament, with a certificate.

The decision procedure:
    - fewer than two or more than four components: NO
    - three or four components: YES iff every component is complete
    - two components G1, G2: YES iff both condense to complete multipartite graphs with parts of size at most
      two and some b1, b2 in their profile ranges satisfy, with s_i = a_i + b_i,
          1 <= s1 <= 2^(s2 - 1)   and   1 <= s2 <= 2^(s1 - 1)
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum

from nichegraph.graphs import components, induced, is_complete
from nichegraph.structure import expansion_profile

logger = logging.getLogger(__name__)


class Decision(str, Enum):
    YES = 'YES'
    NO = 'NO'


class Reason(str, Enum):
    TOO_FEW_COMPONENTS = 'TooFewComponents'
    TOO_MANY_COMPONENTS = 'TooManyComponents'
    NON_COMPLETE_COMPONENT = 'NonCompleteComponent'
    BAD_CONDENSATION_SHAPE = 'BadCondensationShape'
    INEQUALITY_INFEASIBLE = 'InequalityInfeasible'
    OK_THREE_FOUR = 'OK_ThreeFour'
    OK_TWO = 'OK_Two'


@dataclass(frozen=True)
class RecognitionCertificate:
    """
    decision, reason: the verdict
    components: components of the input, ordered by smallest VertexId
    sides: (side-1 components, side-2 components) on YES
    params: (a1, b1, a2, b2) on a two-component YES, side 1 first
    profiles: ExpansionProfile (or None) per component, two-component inputs only
    culprit: the component responsible for a NonCompleteComponent or BadCondensationShape verdict
    """
    decision: Decision
    reason: Reason
    components: tuple
    sides: tuple = ()
    params: tuple = None
    profiles: tuple = ()
    culprit: frozenset = None

    @property
    def is_yes(self):
        return self.decision == Decision.YES

    def side_of(self, component):
        component = frozenset(component)
        for index, side in enumerate(self.sides, start=1):
            if component in side:
                return index
        raise KeyError(f'ERROR: {sorted(component)} is not a component on either side')


def inequalities_hold(s1, s2):
    """Both exponential bounds for s_i = a_i + b_i."""
    return 1 <= s1 and 1 <= s2 and s1 <= 2 ** (s2 - 1) and s2 <= 2 ** (s1 - 1)


def feasible_pairs(p1, p2):
    """
    Every (b1, b2) of the profile ranges satisfying both inequalities, ascending
    :param p1: ExpansionProfile of the first component
    :param p2: ExpansionProfile of the second component
    :return: list of (b1, b2)
    """
    return [(b1, b2) for b1 in p1.b_range for b2 in p2.b_range if inequalities_hold(p1.a + b1, p2.a + b2)]


def _three_four_sides(comps):
    # Four components: the two largest go to side 1. Three: the two smallest.
    if len(comps) == 4:
        ranked = sorted(comps, key=lambda c: (-len(c), min(c)))
    else:
        ranked = sorted(comps, key=lambda c: (len(c), min(c)))
    side1 = tuple(sorted(ranked[:2], key=min))
    side2 = tuple(sorted(ranked[2:], key=min))
    return side1, side2


def recognize(g):
    """
    Decide niche-realizability of g
    :param g: networkx.Graph
    :return: RecognitionCertificate
    """
    comps = tuple(components(g))
    k = len(comps)
    if k <= 1:
        return RecognitionCertificate(Decision.NO, Reason.TOO_FEW_COMPONENTS, comps)
    if k >= 5:
        return RecognitionCertificate(Decision.NO, Reason.TOO_MANY_COMPONENTS, comps)

    if k in (3, 4):
        for c in comps:
            if not is_complete(induced(g, c)):
                return RecognitionCertificate(Decision.NO, Reason.NON_COMPLETE_COMPONENT, comps, culprit=c)
        return RecognitionCertificate(Decision.YES, Reason.OK_THREE_FOUR, comps, sides=_three_four_sides(comps))

    profiles = tuple(expansion_profile(induced(g, c)) for c in comps)
    for c, profile in zip(comps, profiles):
        if profile is None:
            return RecognitionCertificate(Decision.NO, Reason.BAD_CONDENSATION_SHAPE, comps, profiles=profiles,
                                          culprit=c)
    pairs = feasible_pairs(*profiles)
    if not pairs:
        return RecognitionCertificate(Decision.NO, Reason.INEQUALITY_INFEASIBLE, comps, profiles=profiles)
    b1, b2 = pairs[0]
    params = (profiles[0].a, b1, profiles[1].a, b2)
    logger.debug(f'Two components, {len(pairs)} feasible (b1, b2); chose params {params}')
    return RecognitionCertificate(Decision.YES, Reason.OK_TWO, comps, sides=((comps[0],), (comps[1],)),
                                  params=params, profiles=profiles)


def recognize_pair(g1, g2):
    """
    Is the ordered pair (g1, g2) realizable with the bipartition (V(g1), V(g2))?
    """
    if set(g1.nodes) & set(g2.nodes):
        raise ValueError('ERROR: the two graphs of a pair must have disjoint vertex sets')
    comps1, comps2 = components(g1), components(g2)
    if not comps1 or not comps2 or len(comps1) > 2 or len(comps2) > 2:
        return False
    if len(comps1) == 2 or len(comps2) == 2:
        # A side with two components forces complete components everywhere
        return all(is_complete(induced(g1, c)) for c in comps1) and \
            all(is_complete(induced(g2, c)) for c in comps2)
    p1, p2 = expansion_profile(g1), expansion_profile(g2)
    return p1 is not None and p2 is not None and bool(feasible_pairs(p1, p2))


def certificate_problems(g, cert):
    """
    Re-check a certificate against g independently of how it was produced
    :return: list of problems; empty when the certificate is valid
    """
    problems = []
    comps = tuple(components(g))
    if tuple(cert.components) != comps:
        return ['components do not match the graph']
    expected = recognize(g)
    if cert.decision != expected.decision:
        problems.append(f'decision {cert.decision.value} but the graph is {expected.decision.value}')
    if not cert.is_yes:
        return problems

    side_components = [c for side in cert.sides for c in side]
    if len(cert.sides) != 2 or sorted(side_components, key=min) != sorted(comps, key=min):
        problems.append('sides do not partition the components')
    if any(not side or len(side) > 2 for side in cert.sides):
        problems.append('each side must hold one or two components')

    if cert.reason == Reason.OK_THREE_FOUR:
        if len(comps) not in (3, 4):
            problems.append('OK_ThreeFour needs three or four components')
        problems.extend(f'component {sorted(c)} is not complete' for c in comps if not is_complete(induced(g, c)))
    elif cert.reason == Reason.OK_TWO:
        if len(comps) != 2 or cert.params is None:
            return problems + ['OK_Two needs two components and params']
        a1, b1, a2, b2 = cert.params
        if not inequalities_hold(a1 + b1, a2 + b2):
            problems.append(f'params {cert.params} violate the exponential bounds')
        for (a, b), c in zip(((a1, b1), (a2, b2)), comps):
            if 2 * a + b > len(c):
                problems.append(f'2a + b = {2 * a + b} exceeds |V| = {len(c)}')
            profile = expansion_profile(induced(g, c))
            if profile is None or profile.a != a or b not in profile.b_range:
                problems.append(f'({a}, {b}) is not in X of component {sorted(c)}')
    else:
        problems.append(f'reason {cert.reason.value} does not go with YES')
    return problems
