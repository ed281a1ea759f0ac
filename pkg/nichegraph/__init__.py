"""
Niche graphs of bipartite tournaments: computation, recognition with certificates, witness synthesis and
brute-force verification.
"""

from nichegraph.graphs import BipartiteTournament, make_graph, same_graph
from nichegraph.niche import niche_graph
from nichegraph.realize import realize
from nichegraph.recognize import Decision, Reason, recognize

__all__ = ['BipartiteTournament', 'Decision', 'Reason', 'make_graph', 'niche_graph', 'realize', 'recognize',
           'same_graph']
