"""
Text formats: graph files, tournament files, certificate blocks and DOT export.

Graph file (UTF-8, '#' starts a comment):
    graph
    v a b c d
    e a b
    e b c

Tournament file (arcs are tail then head, every cross pair needs exactly one arc):
    bitournament
    left u1 u2
    right v1
    arc u1 v1
    arc v1 u2
"""

from __future__ import annotations

from nichegraph.errors import ArcWithinSide, DuplicateVertex, InvalidVertex, ParseError, VertexOnBothSides
from nichegraph.graphs import LEFT, BipartiteTournament, make_graph, validate_vertex_id
from nichegraph.recognize import Reason

GRAPH_HEADER = 'graph'
TOURNAMENT_HEADER = 'bitournament'


def decode_text(data):
    """
    Decode UTF-8 file content; an undecodable byte is a ParseError on its line
    :param data: bytes
    :return: str
    """
    try:
        return data.decode('utf-8')
    except UnicodeDecodeError as e:
        lineno = data.count(b'\n', 0, e.start) + 1
        raise ParseError(lineno, f'invalid UTF-8 byte 0x{data[e.start]:02x}') from None


def _lines(text):
    """Yield (line number, tokens) of every non-empty line, comments removed."""
    for lineno, line in enumerate(text.splitlines(), start=1):
        tokens = line.split('#', 1)[0].split()
        if tokens:
            yield lineno, tokens


def _vertex(lineno, token):
    try:
        return validate_vertex_id(token)
    except InvalidVertex:
        raise ParseError(lineno, f'invalid vertex identifier {token!r}') from None


def _header(lines, expected):
    try:
        lineno, tokens = next(lines)
    except StopIteration:
        raise ParseError(1, f'empty input, expected header {expected!r}') from None
    if tokens != [expected]:
        raise ParseError(lineno, f'expected header {expected!r}, got {" ".join(tokens)!r}')


def parse_graph(text):
    """
    Parse a graph file
    :param text: file content
    :return: networkx.Graph
    """
    lines = _lines(text)
    _header(lines, GRAPH_HEADER)
    vertices = {}
    edges = {}
    for lineno, tokens in lines:
        keyword, args = tokens[0], tokens[1:]
        if keyword == 'v':
            for token in args:
                v = _vertex(lineno, token)
                if v in vertices:
                    raise DuplicateVertex(f'ERROR: line {lineno}: vertex {v} declared twice '
                                          f'(first on line {vertices[v]})')
                vertices[v] = lineno
        elif keyword == 'e':
            if len(args) != 2:
                raise ParseError(lineno, f'an edge needs exactly two endpoints, got {len(args)}')
            u, v = (_vertex(lineno, token) for token in args)
            if u == v:
                raise ParseError(lineno, f'loop at {u}')
            key = frozenset((u, v))
            if key in edges:
                raise ParseError(lineno, f'edge {u} {v} listed twice')
            edges[key] = lineno
        else:
            raise ParseError(lineno, f'unknown keyword {keyword!r}')

    for key, lineno in edges.items():
        for v in sorted(key):
            if v not in vertices:
                raise ParseError(lineno, f'edge endpoint {v} is not declared')
    return make_graph(vertices, (tuple(sorted(key)) for key in edges))


def parse_tournament(text):
    """
    Parse a tournament file
    :param text: file content
    :return: BipartiteTournament
    """
    lines = _lines(text)
    _header(lines, TOURNAMENT_HEADER)
    sides = {'left': [], 'right': []}
    side_of = {}
    arcs = {}
    for lineno, tokens in lines:
        keyword, args = tokens[0], tokens[1:]
        if keyword in sides:
            for token in args:
                v = _vertex(lineno, token)
                if v in side_of:
                    if side_of[v] != keyword:
                        raise VertexOnBothSides(f'ERROR: line {lineno}: vertex {v} is on both sides')
                    raise DuplicateVertex(f'ERROR: line {lineno}: vertex {v} declared twice')
                side_of[v] = keyword
                sides[keyword].append(v)
        elif keyword == 'arc':
            if len(args) != 2:
                raise ParseError(lineno, f'an arc needs a tail and a head, got {len(args)} token(s)')
            arc = tuple(_vertex(lineno, token) for token in args)
            if frozenset(arc) in arcs:
                raise ParseError(lineno, f'pair {arc[0]} {arc[1]} already oriented on line {arcs[frozenset(arc)][1]}')
            arcs[frozenset(arc)] = (arc, lineno)
        else:
            raise ParseError(lineno, f'unknown keyword {keyword!r}')

    for (tail, head), lineno in arcs.values():
        for v in (tail, head):
            if v not in side_of:
                raise ParseError(lineno, f'arc endpoint {v} is not declared')
        if side_of[tail] == side_of[head]:
            raise ArcWithinSide(f'ERROR: line {lineno}: arc {tail} {head} joins two vertices of the same side')
    return BipartiteTournament(tuple(sides['left']), tuple(sides['right']),
                               frozenset(arc for arc, _ in arcs.values()))


def parse_any(text):
    """Graph or tournament, chosen by the header line."""
    for lineno, tokens in _lines(text):
        if tokens == [TOURNAMENT_HEADER]:
            return parse_tournament(text)
        if tokens == [GRAPH_HEADER]:
            return parse_graph(text)
        raise ParseError(lineno, f'expected {GRAPH_HEADER!r} or {TOURNAMENT_HEADER!r}, got {" ".join(tokens)!r}')
    raise ParseError(1, 'empty input')


def emit_graph(g):
    lines = [GRAPH_HEADER]
    if g.number_of_nodes():
        lines.append(' '.join(['v'] + sorted(g.nodes)))
    lines.extend(f'e {u} {v}' for u, v in sorted(tuple(sorted(edge)) for edge in g.edges))
    return '\n'.join(lines) + '\n'


def emit_tournament(d):
    lines = [TOURNAMENT_HEADER, ' '.join(['left', *d.left]), ' '.join(['right', *d.right])]
    lines.extend(f'arc {tail} {head}' for tail, head in sorted(d.arcs))
    return '\n'.join(lines) + '\n'


def _dot_id(v):
    """Quoted DOT identifier; backslash and double quote are escaped."""
    return '"' + v.replace('\\', '\\\\').replace('"', '\\"') + '"'


def emit_dot(x, name=None):
    """
    DOT text for a graph (undirected) or a bipartite tournament (left side drawn as boxes)
    """
    if isinstance(x, BipartiteTournament):
        lines = [f'digraph {name or "D"} {{']
        lines.extend(f'  {_dot_id(v)} [shape={"box" if x.side_of(v) == LEFT else "ellipse"}];' for v in x.vertices)
        lines.extend(f'  {_dot_id(tail)} -> {_dot_id(head)};' for tail, head in sorted(x.arcs))
    else:
        lines = [f'graph {name or "G"} {{']
        lines.extend(f'  {_dot_id(v)};' for v in sorted(x.nodes))
        lines.extend(f'  {_dot_id(u)} -- {_dot_id(v)};' for u, v in sorted(tuple(sorted(edge)) for edge in x.edges))
    lines.append('}')
    return '\n'.join(lines) + '\n'


def emit_certificate(cert):
    """
    Certificate block, one field per line:
        decision YES
        reason OK_Two
        sides a b c | d e
        params 1 1 0 2
    """
    lines = [f'decision {cert.decision.value}', f'reason {cert.reason.value}']
    if cert.is_yes:
        side1, side2 = (' '.join(sorted(v for c in side for v in c)) for side in cert.sides)
        lines.append(f'sides {side1} | {side2}')
    if cert.is_yes and cert.reason == Reason.OK_TWO:
        lines.append('params ' + ' '.join(str(p) for p in cert.params))
    return '\n'.join(lines) + '\n'
