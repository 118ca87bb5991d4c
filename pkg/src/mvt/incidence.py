"""Cycle, forest and cactus structure of point-line configurations.

A cycle is a closed walk p_1, l_1, p_2, l_2, ..., p_n, l_n with distinct
lines and distinct points, p_i on l_i and l_{i+1} (indices mod n).  A
configuration is a forest iff it has no cycle, and a cactus iff every line
lies in at most one cycle; the latter is decided on the block decomposition
of the point-line incidence graph.
"""

import itertools
from dataclasses import dataclass

from .matroid import Matroid, MatroidError


@dataclass(frozen=True)
class CycleWitness:
    points: tuple
    lines: tuple

    def check(self, m):
        n = len(self.lines)
        if n < 2 or len(set(self.lines)) != n or len(set(self.points)) != n:
            return False
        full = [m.line_points(l) for l in self.lines]
        for i, p in enumerate(self.points):
            if p not in full[i] or p not in full[(i + 1) % n]:
                return False
        return True


@dataclass(frozen=True)
class CactusComponent:
    kind: str  # "line" or "cycle"
    lines: tuple


class NotCactusError(MatroidError):
    def __init__(self, line):
        super().__init__("line %s lies in more than one cycle" % sorted(line))
        self.line = line


def _incidence_edges(m):
    """Edges of the bipartite incidence graph, one node per line and per
    point of degree >= 2 (degree-1 points cannot lie on a cycle)."""
    edges = []
    for li, line in enumerate(m.lines):
        for p in m.line_points(line):
            if m.degree(p) >= 2:
                edges.append((("l", li), ("p", m.representative(p))))
    return edges


def find_cycle(m):
    """Some cycle of m as a CycleWitness, or None.

    DFS over simple alternating paths in the incidence graph; a path
    l_0, p_1, l_1, ..., p_k closing back to l_0 gives the witness
    (points p_1..p_k, lines l_0..l_{k-1} with p_k joining l_{k-1} and l_0).
    """
    adj = {}
    for a, b in _incidence_edges(m):
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    for start in sorted(n for n in adj if n[0] == "l"):
        stack = [(start, (start,))]
        while stack:
            node, path = stack.pop()
            for nxt in sorted(adj[node]):
                if nxt == start and node[0] == "p" and len(path) >= 4:
                    lines = tuple(m.lines[x[1]] for x in path if x[0] == "l")
                    pts = tuple(x[1] for x in path if x[0] == "p")
                    wit = CycleWitness(pts, lines)
                    if wit.check(m):
                        return wit
                elif nxt not in path:
                    stack.append((nxt, path + (nxt,)))
    return None


def is_forest(m):
    return find_cycle(m) is None


def _blocks(edges):
    """Biconnected components (as edge lists) of an undirected graph."""
    adj = {}
    for i, (a, b) in enumerate(edges):
        adj.setdefault(a, []).append((b, i))
        adj.setdefault(b, []).append((a, i))
    visited = set()
    blocks = []
    for root in adj:
        if root in visited:
            continue
        depth = {root: 0}
        low = {root: 0}
        estack = []
        stack = [(root, None, iter(adj[root]))]
        visited.add(root)
        while stack:
            node, pedge, it = stack[-1]
            advanced = False
            for nxt, ei in it:
                if ei == pedge:
                    continue
                if nxt not in depth:
                    estack.append(ei)
                    depth[nxt] = depth[node] + 1
                    low[nxt] = depth[nxt]
                    visited.add(nxt)
                    stack.append((nxt, ei, iter(adj[nxt])))
                    advanced = True
                    break
                elif depth[nxt] < depth[node]:
                    estack.append(ei)
                    low[node] = min(low[node], depth[nxt])
            if advanced:
                continue
            stack.pop()
            if stack:
                parent = stack[-1][0]
                low[parent] = min(low[parent], low[node])
                if low[node] >= depth[parent]:
                    block = []
                    while estack:
                        ei = estack.pop()
                        block.append(ei)
                        if ei == pedge:
                            break
                    if block:
                        blocks.append(block)
    return blocks


def _line_blocks(m):
    """Per line: the biconnected block of the incidence graph containing it,
    classified as 'tree' (an edge-block) or a cycle/non-cycle block."""
    edges = _incidence_edges(m)
    blocks = _blocks(edges)
    info = {}
    for block in blocks:
        nodes = set()
        for ei in block:
            nodes.update(edges[ei])
        nedges = len(block)
        nnodes = len(nodes)
        kind = "edge" if nedges == 1 else ("cycle" if nedges == nnodes else "multi")
        for ei in block:
            for node in edges[ei]:
                if node[0] == "l":
                    info.setdefault(node[1], set()).add((kind, tuple(sorted(
                        n[1] for n in nodes if n[0] == "l"))))
    return info


def is_cactus(m):
    try:
        cactus_components(m)
        return True
    except NotCactusError:
        return False


def cactus_components(m):
    """Partition of the line set into line- and cycle-components.

    Raises NotCactusError (naming an offending line) when some line lies in
    more than one cycle.
    """
    if not m.is_simple():
        raise MatroidError("cactus structure is defined for simple matroids")
    info = _line_blocks(m)
    comp_of = {}
    for li in range(len(m.lines)):
        kinds = info.get(li, set())
        cyc = [k for k in kinds if k[0] != "edge"]
        if any(k[0] == "multi" for k in kinds):
            bad = min((m.lines[li] for li in range(len(m.lines))
                       if any(k[0] == "multi" for k in info.get(li, ()))),
                      key=sorted)
            raise NotCactusError(bad)
        if len(cyc) > 1:
            raise NotCactusError(m.lines[li])
        comp_of[li] = cyc[0][1] if cyc else None
    comps = []
    done = set()
    for li in range(len(m.lines)):
        if li in done:
            continue
        if comp_of[li] is None:
            comps.append(CactusComponent("line", (m.lines[li],)))
            done.add(li)
        else:
            members = comp_of[li]
            comps.append(CactusComponent("cycle", tuple(m.lines[i] for i in members)))
            done.update(members)
    return comps


def associated_graph(m):
    """Lemma-style associated graph: vertices are the points of degree >= 2,
    edges join same-line pairs.  Returned as (vertices, edge set)."""
    verts = sorted(p for p in m.ground() if m.degree(p) >= 2)
    vset = set(verts)
    edges = set()
    for line in m._full_lines():
        for a, b in itertools.combinations(sorted(line & vset), 2):
            edges.add((a, b))
    return verts, edges


def corresponding_graph(m, ordering=None):
    """Ordering-based graph: consecutive points of each line are joined.

    This is the forest-detection graph; with the identity ordering it chains
    each line's points in index order.
    """
    if ordering is None:
        ordering = list(m.ground())
    pos = {p: i for i, p in enumerate(ordering)}
    edges = set()
    for line in m._full_lines():
        pts = sorted(line, key=lambda p: pos[p])
        for a, b in zip(pts, pts[1:]):
            edges.add((min(a, b), max(a, b)))
    return sorted(m.ground()), edges


def graph_is_cactus(verts, edges):
    """Every edge of the (simple) graph lies in at most one simple cycle."""
    elist = sorted(edges)
    blocks = _blocks(elist)
    for block in blocks:
        nodes = set()
        for ei in block:
            nodes.update(elist[ei])
        if len(block) > 1 and len(block) != len(nodes):
            return False
    return True


def graph_is_forest(verts, edges):
    parent = {v: v for v in verts}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra == rb:
            return False
        parent[ra] = rb
    return True


def free_gluing(m, n, p, q):
    """Free gluing of m and n at p and q.

    The glued point keeps label p; the other points of n are relabelled to
    m.d+1 .. m.d+n.d-1 in increasing order.
    """
    if not (1 <= p <= m.d and 1 <= q <= n.d):
        raise MatroidError("gluing points out of range")
    if not (m.is_simple() and n.is_simple()):
        raise MatroidError("free gluing is defined for simple configurations")
    relabel = {}
    nxt = m.d + 1
    for x in n.ground():
        if x == q:
            relabel[x] = p
        else:
            relabel[x] = nxt
            nxt += 1
    lines = [set(l) for l in m._full_lines()]
    for l in n._full_lines():
        lines.append(set(relabel[x] for x in l))
    return Matroid.from_parts(m.d + n.d - 1, (), (), lines)


def cactus_loop_components(m):
    """The candidate components {M(J) : J subset of Q_M}, M first, then by
    (|J|, J)."""
    q = sorted(m.q_points())
    out = [m]
    for k in range(1, len(q) + 1):
        for sub in itertools.combinations(q, k):
            out.append(m.set_loops(sub))
    return out


def elementary_perturbation(m, line, p):
    """Drop p from `line` if it has more than 3 points, else drop the line."""
    line = frozenset(line)
    stored = None
    for l in m.lines:
        if m.line_points(l) == line or frozenset(l) == line:
            stored = l
            break
    if stored is None:
        raise MatroidError("no such line")
    if p not in m.line_points(stored):
        raise MatroidError("point not on the line")
    lines = [set(m.line_points(l)) for l in m.lines if l != stored]
    big = set(m.line_points(stored))
    if len(big) > 3:
        big.discard(p)
        lines.append(big)
    return Matroid.from_parts(m.d, m.loops, m.classes, lines)
