"""
Brute-force ground truth: exhaustive orientation enumeration, the realizability census, the recognizer cross-check,
seeded random tournaments and the soundness fuzz.

Orientation numbering: bit i*n + j of the index orients the pair (u_i, v_j), set meaning u_i -> v_j.
Side labels are u1..um and v1..vn, zero-padded so that sorted order equals index order.

Random tournaments: the index is read from the raw 64-bit output of numpy's PCG64 seeded with `seed`. Word k
supplies bits 64k..64k+63 and bits beyond m*n are dropped.
"""

from __future__ import annotations

import itertools
import logging
from collections import Counter
from dataclasses import dataclass, field
from multiprocessing import Pool

import networkx as nx
import numpy as np
import pandas as pd

from nichegraph.config import DEFAULT_LIMITS
from nichegraph.errors import Disconnected, SizeLimit
from nichegraph.generators import complete_multipartite
from nichegraph.graphs import BipartiteTournament, canonical_code, code_from_masks, make_graph
from nichegraph.niche import niche_graph, verify_relation_laws
from nichegraph.properties import condensation_shape_violations, verify_niche_properties
from nichegraph.recognize import recognize
from nichegraph.report import SKIPPED
from nichegraph.structure import expand

logger = logging.getLogger(__name__)


# -------------------------------
# Orientations
# -------------------------------
def side_labels(m, n):
    """Vertex labels of the two sides of K_{m,n}."""
    if m < 1 or n < 1:
        raise ValueError(f'ERROR: both sides need at least one vertex, got m={m}, n={n}')
    return ([f'u{i:0{len(str(m))}d}' for i in range(1, m + 1)],
            [f'v{j:0{len(str(n))}d}' for j in range(1, n + 1)])


@dataclass(frozen=True)
class OrientationIndex:
    m: int
    n: int
    index: int

    def __post_init__(self):
        if not 0 <= self.index < 1 << (self.m * self.n):
            raise ValueError(f'ERROR: index {self.index} outside [0, 2^{self.m * self.n})')

    def tournament(self):
        left, right = side_labels(self.m, self.n)
        return BipartiteTournament.from_index(left, right, self.index)


def enumerate_orientations(m, n, limits=DEFAULT_LIMITS):
    """
    Every orientation of K_{m,n}, in index order
    :return: generator of BipartiteTournament
    """
    if m * n > limits.orientations:
        raise SizeLimit('enumerate_orientations', m * n, limits.orientations)
    left, right = side_labels(m, n)
    for index in range(1 << (m * n)):
        yield BipartiteTournament.from_index(left, right, index)


def niche_masks(m, n, index):
    """
    Bitmask adjacency of the niche graph of orientation `index`, left vertices first
    """
    full_m, full_n = (1 << m) - 1, (1 << n) - 1
    # rows[i]: prey of u_i; cols[j]: predators of v_j
    rows = [index >> (i * n) & full_n for i in range(m)]
    cols = [sum((rows[i] >> j & 1) << i for i in range(m)) for j in range(n)]
    masks = [0] * (m + n)
    for i, k in itertools.combinations(range(m), 2):
        if rows[i] & rows[k] or ~rows[i] & ~rows[k] & full_n:
            masks[i] |= 1 << k
            masks[k] |= 1 << i
    for j, k in itertools.combinations(range(n), 2):
        if cols[j] & cols[k] or ~cols[j] & ~cols[k] & full_m:
            masks[m + j] |= 1 << (m + k)
            masks[m + k] |= 1 << (m + j)
    return tuple(masks)


# -------------------------------
# Census
# -------------------------------
@dataclass
class RealizabilityCensus:
    """Niche graphs of every orientation of K_{m,n}, bucketed by canonical code."""
    m: int
    n: int
    counts: Counter = field(default_factory=Counter)

    @property
    def total(self):
        return sum(self.counts.values())

    @property
    def codes(self):
        return set(self.counts)

    def to_frame(self):
        rows = [{'code_hex': code.hex(), 'count': count, 'm': self.m, 'n': self.n}
                for code, count in sorted(self.counts.items())]
        return pd.DataFrame(rows, columns=['code_hex', 'count', 'm', 'n'])


def _census_block(m, n, start, stop):
    counts = Counter()
    cache = {}
    for index in range(start, stop):
        masks = niche_masks(m, n, index)
        code = cache.get(masks)
        if code is None:
            code = cache[masks] = code_from_masks(m + n, list(masks))
        counts[code] += 1
    return counts


def _blocks(total, pieces):
    step = max(1, -(-total // pieces))
    return [(start, min(start + step, total)) for start in range(0, total, step)]


def census(m, n, jobs=1, limits=DEFAULT_LIMITS):
    """
    Count the niche graphs of all 2^(m*n) orientations of K_{m,n} up to isomorphism
    :param m: left side size
    :param n: right side size
    :param jobs: worker processes; the result does not depend on it
    :param limits: Limits
    :return: RealizabilityCensus
    """
    side_labels(m, n)
    if m * n > limits.census:
        raise SizeLimit('census', m * n, limits.census)
    total = 1 << (m * n)
    work = [(m, n, start, stop) for start, stop in _blocks(total, max(1, jobs) * 4)]
    if jobs > 1 and len(work) > 1:
        with Pool(processes=min(jobs, len(work))) as pool:
            parts = pool.starmap(_census_block, work)
    else:
        parts = [_census_block(*item) for item in work]
    result = RealizabilityCensus(m, n)
    for part in parts:
        result.counts.update(part)
    logger.info(f'Census K_{m},{n}: {total} orientations, {len(result.counts)} isomorphism classes')
    return result


def census_frame(censuses):
    """Concatenate several censuses into one CSV-ready DataFrame."""
    frames = [c.to_frame() for c in censuses]
    if not frames:
        return pd.DataFrame(columns=['code_hex', 'count', 'm', 'n'])
    return pd.concat(frames, ignore_index=True)


# -------------------------------
# Cross-check
# -------------------------------
@dataclass
class CrossCheckReport:
    n_max: int
    graphs: int = 0
    realizable: int = 0
    mismatches: list = field(default_factory=list)

    @property
    def passed(self):
        return not self.mismatches

    def lines(self):
        lines = [f'graphs: {self.graphs}', f'realizable: {self.realizable}', f'mismatches: {len(self.mismatches)}']
        for g, decision, realizable in self.mismatches:
            edges = ' '.join(f'{u}-{v}' for u, v in sorted(tuple(sorted(e)) for e in g.edges))
            lines.append(f'MISMATCH n={g.number_of_nodes()} recognize={decision} census={realizable} {edges}')
        return lines


def atlas_graphs(n_max):
    """One labeled graph per isomorphism class on at most n_max vertices (networkx graph atlas)."""
    if n_max > 7:
        raise SizeLimit('atlas_graphs', n_max, 7)
    for h in nx.graph_atlas_g():
        if h.number_of_nodes() > n_max:
            break
        mapping = {i: f'x{i}' for i in h.nodes}
        yield make_graph(mapping.values(), ((mapping[u], mapping[v]) for u, v in h.edges))


def cross_check(n_max=6, jobs=1, limits=DEFAULT_LIMITS):
    """
    Compare recognize against the census on every graph with at most n_max vertices
    :return: CrossCheckReport
    """
    if n_max > limits.cross_check:
        raise SizeLimit('cross_check', n_max, limits.cross_check)
    realizable_codes = set()
    for m in range(1, n_max):
        for n in range(1, n_max - m + 1):
            realizable_codes |= census(m, n, jobs=jobs, limits=limits).codes

    report = CrossCheckReport(n_max)
    for g in atlas_graphs(n_max):
        report.graphs += 1
        decision = recognize(g).is_yes
        realizable = canonical_code(g, limit=max(limits.canonical_code, n_max)) in realizable_codes
        report.realizable += realizable
        if decision != realizable:
            report.mismatches.append((g, 'YES' if decision else 'NO', 'YES' if realizable else 'NO'))
    logger.info(f'Cross-check up to {n_max} vertices: {report.graphs} graphs, '
                f'{len(report.mismatches)} mismatch(es)')
    return report


# -------------------------------
# Random tournaments
# -------------------------------
def random_index(m, n, seed):
    bits = m * n
    words = np.random.PCG64(seed).random_raw(-(-bits // 64))
    index = 0
    for k, word in enumerate(words):
        index |= int(word) << (64 * k)
    return index & ((1 << bits) - 1)


def random_tournament(m, n, seed):
    """
    Seeded random orientation of K_{m,n}, reproducible across runs and platforms
    """
    return OrientationIndex(m, n, random_index(m, n, seed)).tournament()


# -------------------------------
# Expansion profiles by brute force
# -------------------------------
def _compositions(total, parts):
    for cuts in itertools.combinations(range(1, total), parts - 1):
        bounds = (0,) + cuts + (total,)
        yield [b - a for a, b in zip(bounds, bounds[1:])]


def brute_force_x_set(component, limit=7):
    """
    X(G) by enumeration: every (a, b) such that some expansion of the complete multipartite graph with a parts of
    size two and b parts of size one is isomorphic to the component
    :param component: connected networkx.Graph
    :param limit: vertex bound
    :return: set of (a, b)
    """
    size = component.number_of_nodes()
    if size > limit:
        raise SizeLimit('brute_force_x_set', size, limit)
    if size == 0 or not nx.is_connected(component):
        raise Disconnected('ERROR: brute_force_x_set needs a connected, nonempty graph')
    target = canonical_code(component, limit=limit)
    found = set()
    for a in range(size // 2 + 1):
        for b in range(size - 2 * a + 1):
            if a + b == 0:
                continue
            parts = [[f'p{i}x', f'p{i}y'] for i in range(a)] + [[f's{j}'] for j in range(b)]
            template = complete_multipartite(parts)
            order = sorted(template.nodes)
            for sizes in _compositions(size, len(order)):
                expansion = expand(template, dict(zip(order, sizes)))
                if canonical_code(expansion, limit=limit) == target:
                    found.add((a, b))
                    break
    return found


# -------------------------------
# Soundness fuzz
# -------------------------------
@dataclass
class FuzzReport:
    trials: int = 0
    skipped_laws: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self):
        return not self.failures

    def lines(self):
        lines = [f'trials: {self.trials}', f'skipped laws: {self.skipped_laws}', f'failures: {len(self.failures)}']
        lines.extend(f'FAIL m={m} n={n} seed={seed}: {problem}' for m, n, seed, problem in self.failures)
        return lines


def fuzz_plan(trials, max_side, seed):
    """(m, n, tournament seed) per trial, drawn from numpy's default generator."""
    rng = np.random.default_rng(seed)
    sides = rng.integers(1, max_side + 1, size=(trials, 2))
    seeds = rng.integers(0, 2 ** 63 - 1, size=trials, dtype=np.int64)
    return [(int(m), int(n), int(s)) for (m, n), s in zip(sides, seeds)]


def _fuzz_trial(m, n, seed, limits):
    d = random_tournament(m, n, seed)
    g = niche_graph(d)
    problems = []
    cert = recognize(g)
    if not cert.is_yes:
        problems.append(f'recognize says NO ({cert.reason.value})')
    relations = verify_relation_laws(d, g)
    properties = verify_niche_properties(g, limits)
    problems.extend(result.line() for result in relations.failures + properties.failures)
    problems.extend(f'condensation shape broken on {list(c)}' for c in condensation_shape_violations(g))
    skipped = sum(result.status == SKIPPED for result in properties.results)
    return problems, skipped


def _fuzz_block(plan, limits):
    return [(m, n, seed, *_fuzz_trial(m, n, seed, limits)) for m, n, seed in plan]


def fuzz_soundness(trials=10000, max_side=8, seed=0, limits=DEFAULT_LIMITS, jobs=1):
    """
    Niche graphs of random tournaments must be recognized and satisfy every law
    :return: FuzzReport
    """
    plan = fuzz_plan(trials, max_side, seed)
    chunks = [(plan[start:stop], limits) for start, stop in _blocks(len(plan), max(1, jobs) * 4)]
    if jobs > 1 and len(chunks) > 1:
        with Pool(processes=min(jobs, len(chunks))) as pool:
            results = pool.starmap(_fuzz_block, chunks)
    else:
        results = [_fuzz_block(*chunk) for chunk in chunks]

    report = FuzzReport()
    for block in results:
        for m, n, trial_seed, problems, skipped in block:
            report.trials += 1
            report.skipped_laws += skipped
            report.failures.extend((m, n, trial_seed, problem) for problem in problems)
    logger.info(f'Fuzz: {report.trials} trials, {len(report.failures)} failure(s)')
    return report
