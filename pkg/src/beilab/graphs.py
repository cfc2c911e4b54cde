"""Labeled simple graphs and the constructions used throughout the library.

Vertices are the integers 1..n and every operation is label-sensitive,
because the monomial machinery downstream depends on the vertex order.
All graphs are immutable; operations return new graphs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

INFINITY = float("inf")

DEFAULT_INDUCED_CYCLE_CAP = 16


class GraphParseError(ValueError):
    """Raised on malformed graph6 or edge-list input."""


@dataclass(frozen=True)
class Graph:
    """Simple graph on vertices 1..n with a canonical edge set (i < j)."""

    n: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        for (i, j) in self.edges:
            if not (1 <= i < j <= self.n):
                raise ValueError(f"bad edge ({i},{j}) for n={self.n}")

    @staticmethod
    def from_edges(n, edge_iter):
        canon = set()
        for u, v in edge_iter:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            canon.add((min(u, v), max(u, v)))
        return Graph(n, frozenset(canon))

    def vertices(self):
        return range(1, self.n + 1)

    def adjacency(self):
        """Neighbor sets, as a dict vertex -> frozenset."""
        adj = {v: set() for v in self.vertices()}
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return {v: frozenset(s) for v, s in adj.items()}

    def neighbors(self, v):
        return frozenset(u for u in self.vertices()
                         if (min(u, v), max(u, v)) in self.edges)

    def has_edge(self, u, v):
        return (min(u, v), max(u, v)) in self.edges

    def degree(self, v):
        return len(self.neighbors(v))


@dataclass(frozen=True)
class Relabeling:
    """Bijection old label -> new label on 1..n."""

    mapping: tuple  # mapping[i-1] = new label of old vertex i

    def __post_init__(self):
        n = len(self.mapping)
        if sorted(self.mapping) != list(range(1, n + 1)):
            raise ValueError("relabeling is not a permutation of 1..n")

    def apply(self, v):
        return self.mapping[v - 1]

    def inverse(self):
        n = len(self.mapping)
        inv = [0] * n
        for old, new in enumerate(self.mapping, start=1):
            inv[new - 1] = old
        return Relabeling(tuple(inv))


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple       # tuple of frozensets of vertices
    cut_vertices: frozenset


@dataclass(frozen=True)
class Decomposition:
    """A two-sided split of a connected graph at a cut vertex.

    ``graph`` is the relabeled graph: side one occupies 1..m with the cut
    vertex at m and its side-one neighbors at m-1..m-r; side two occupies
    m..n with the side-two neighbors of m at m+1..m+s.
    """

    graph: "Graph"
    m: int
    relabeling: Relabeling  # old label -> new label of the input graph

    @property
    def side1(self):
        return frozenset(range(1, self.m + 1))

    @property
    def side2(self):
        return frozenset(range(self.m, self.graph.n + 1))

    def g1(self):
        g, _ = delete_vertices(self.graph, set(range(self.m + 1, self.graph.n + 1)))
        return g

    def g2(self):
        g, _ = delete_vertices(self.graph, set(range(1, self.m)))
        return g


NOT_A_CUT_VERTEX = "NOT_A_CUT_VERTEX"


# ---------------------------------------------------------------------------
# graph6 (McKay's format)

_G6_HEADER = b">>graph6<<"


def _g6_decode_size(data, pos):
    if pos >= len(data):
        raise GraphParseError(f"byte {pos}: missing size field")
    b = data[pos]
    if b == 126:
        if pos + 1 < len(data) and data[pos + 1] == 126:
            if pos + 8 > len(data):
                raise GraphParseError(f"byte {pos}: truncated 6-byte size field")
            n = 0
            for k in range(pos + 2, pos + 8):
                n = (n << 6) | (data[k] - 63)
            return n, pos + 8
        if pos + 4 > len(data):
            raise GraphParseError(f"byte {pos}: truncated 3-byte size field")
        n = 0
        for k in range(pos + 1, pos + 4):
            n = (n << 6) | (data[k] - 63)
        return n, pos + 4
    if not (63 <= b <= 125):
        raise GraphParseError(f"byte {pos}: invalid size byte {b}")
    return b - 63, pos + 1


def parse_graph6(record):
    """Decode one graph6 record (bytes or str) into a Graph."""
    if isinstance(record, str):
        record = record.encode("ascii")
    data = record.strip()
    if data.startswith(_G6_HEADER):
        data = data[len(_G6_HEADER):]
    n, pos = _g6_decode_size(data, 0)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - pos < nbytes:
        raise GraphParseError(f"byte {len(data)}: truncated adjacency bits "
                              f"(need {nbytes} bytes after size field)")
    if len(data) - pos > nbytes:
        raise GraphParseError(f"byte {pos + nbytes}: trailing garbage")
    bits = []
    for k in range(pos, pos + nbytes):
        b = data[k]
        if not (63 <= b <= 126):
            raise GraphParseError(f"byte {k}: non-printable value {b}")
        v = b - 63
        bits.extend((v >> shift) & 1 for shift in range(5, -1, -1))
    edges = []
    idx = 0
    # column-major upper triangle: x_{0,1}, x_{0,2}, x_{1,2}, x_{0,3}, ...
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((i + 1, j + 1))
            idx += 1
    return Graph.from_edges(n, edges)


def emit_graph6(g):
    """Encode a Graph as a canonical graph6 record (str, no header)."""
    n = g.n
    if n <= 62:
        out = [n + 63]
    elif n <= 258047:
        out = [126, (n >> 12) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63]
    else:
        out = [126, 126] + [((n >> (6 * k)) & 63) + 63 for k in range(5, -1, -1)]
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if g.has_edge(i + 1, j + 1) else 0)
    while len(bits) % 6:
        bits.append(0)
    for k in range(0, len(bits), 6):
        v = 0
        for b in bits[k:k + 6]:
            v = (v << 1) | b
        out.append(v + 63)
    return bytes(out).decode("ascii")


def parse_edge_list(text):
    """Parse the 'n m' / 'u v' edge-list text format."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise GraphParseError("line 1: empty edge-list input")
    head = lines[0].split()
    if len(head) != 2:
        raise GraphParseError("line 1: expected 'n m'")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise GraphParseError("line 1: expected integers 'n m'") from None
    if len(lines) - 1 != m:
        raise GraphParseError(f"expected {m} edge lines, got {len(lines) - 1}")
    edges = []
    for k, ln in enumerate(lines[1:], start=2):
        parts = ln.split()
        if len(parts) != 2:
            raise GraphParseError(f"line {k}: expected 'u v'")
        u, v = int(parts[0]), int(parts[1])
        if not (1 <= u < v <= n):
            raise GraphParseError(f"line {k}: edge ({u},{v}) out of range")
        edges.append((u, v))
    return Graph.from_edges(n, edges)


# ---------------------------------------------------------------------------
# basic structure

def connected_components(g, removed=frozenset()):
    """Partition of the surviving vertices into connected classes."""
    alive = [v for v in g.vertices() if v not in removed]
    adj = g.adjacency()
    seen = set()
    parts = []
    for s in alive:
        if s in seen:
            continue
        comp = {s}
        stack = [s]
        seen.add(s)
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in removed and w not in seen:
                    seen.add(w)
                    comp.add(w)
                    stack.append(w)
        parts.append(frozenset(comp))
    return sorted(parts, key=min)


def is_connected(g):
    return len(connected_components(g)) <= 1


def cut_vertices(g):
    """Articulation vertices, by delete-and-count."""
    base = len(connected_components(g))
    return frozenset(v for v in g.vertices()
                     if len(connected_components(g, frozenset([v]))) > base)


def blocks(g):
    """Maximal biconnected components of a connected graph (Tarjan)."""
    if g.n == 0:
        raise ValueError("empty graph")
    if not is_connected(g):
        raise ValueError("blocks() requires a connected graph")
    adj = g.adjacency()
    disc, low = {}, {}
    stack = []          # edge stack
    out_blocks = []
    cuts = set()
    timer = itertools.count(1)

    root = 1
    # iterative DFS
    call = [(root, None, iter(sorted(adj[root])))]
    disc[root] = low[root] = next(timer)
    root_children = 0
    while call:
        u, parent, it = call[-1]
        advanced = False
        for w in it:
            if w == parent:
                continue
            if w not in disc:
                stack.append((u, w))
                disc[w] = low[w] = next(timer)
                if u == root:
                    root_children += 1
                call.append((w, u, iter(sorted(adj[w]))))
                advanced = True
                break
            elif disc[w] < disc[u]:
                stack.append((u, w))
                low[u] = min(low[u], disc[w])
        if advanced:
            continue
        call.pop()
        if call:
            p = call[-1][0]
            low[p] = min(low[p], low[u])
            if low[u] >= disc[p]:
                if p != root or root_children > 0:
                    comp = set()
                    while stack and stack[-1] != (p, u):
                        a, b = stack.pop()
                        comp.update((a, b))
                    if stack:
                        a, b = stack.pop()
                        comp.update((a, b))
                    if comp:
                        out_blocks.append(frozenset(comp))
                if p != root:
                    cuts.add(p)
    # residual edges (happens only if stack handling left the root block)
    if stack:
        comp = set()
        while stack:
            a, b = stack.pop()
            comp.update((a, b))
        out_blocks.append(frozenset(comp))
    if root_children > 1:
        cuts.add(root)
    if g.n == 1:
        out_blocks = [frozenset([1])]
    return BlockDecomposition(tuple(sorted(out_blocks, key=lambda b: sorted(b))),
                              frozenset(cuts))


def girth(g):
    """Length of a shortest cycle; INFINITY for forests.

    A shortest cycle is automatically chordless, so this is the induced
    girth as well.
    """
    adj = g.adjacency()
    best = INFINITY
    for root in g.vertices():
        dist = {root: 0}
        parent = {root: None}
        queue = [root]
        while queue:
            nxt = []
            for u in queue:
                for w in adj[u]:
                    if w not in dist:
                        dist[w] = dist[u] + 1
                        parent[w] = u
                        nxt.append(w)
                    elif parent[u] != w and parent.get(w) != u and dist[w] >= dist[u]:
                        best = min(best, dist[u] + dist[w] + 1)
            queue = nxt
    return best


def induced_cycle_lengths(g, cap=DEFAULT_INDUCED_CYCLE_CAP):
    """Set of lengths of chordless cycles, by exhaustive path search."""
    if g.n > cap:
        raise ValueError(f"induced-cycle enumeration capped at n={cap}")
    adj = g.adjacency()
    lengths = set()

    def extend(path, members):
        s = path[0]
        for w in sorted(adj[path[-1]]):
            if w <= s or w in members:
                continue
            # keep the path chordless away from the two ends
            if any(w in adj[u] for u in path[1:-1]):
                continue
            if len(path) >= 2 and w in adj[s]:
                # closing edge: cycle s, ..., last, w (each reported once)
                if path[1] < w:
                    lengths.add(len(path) + 1)
                continue  # extending past w would leave the chord {w, s}
            path.append(w)
            members.add(w)
            extend(path, members)
            members.discard(w)
            path.pop()

    for s in g.vertices():
        extend([s], {s})
    return lengths


def is_free_vertex(g, v):
    """True iff the neighborhood of v induces a complete graph."""
    nb = sorted(g.neighbors(v))
    return all(g.has_edge(a, b) for a, b in itertools.combinations(nb, 2))


# ---------------------------------------------------------------------------
# constructions

def saturate(g, v):
    """Complete the neighborhood of v (the local clique closure)."""
    nb = sorted(g.neighbors(v))
    extra = [(a, b) for a, b in itertools.combinations(nb, 2)]
    return Graph.from_edges(g.n, list(g.edges) + extra)


def delete_vertices(g, removed):
    """Induced subgraph on the complement, with an order-preserving relabeling.

    Returns (graph, relabeling) where relabeling maps surviving old labels
    to 1..n-|removed| (non-surviving labels keep a placeholder of 0 in the
    mapping tuple is not allowed, so the relabeling is on survivors only,
    exposed as a dict).
    """
    removed = set(removed)
    survivors = [v for v in g.vertices() if v not in removed]
    new_of = {old: i for i, old in enumerate(survivors, start=1)}
    edges = [(new_of[i], new_of[j]) for i, j in g.edges
             if i not in removed and j not in removed]
    return Graph.from_edges(len(survivors), edges), new_of


def add_whisker(g, v):
    """Attach a pendant vertex n+1 at v."""
    if not (1 <= v <= g.n):
        raise ValueError(f"vertex {v} out of range")
    return Graph.from_edges(g.n + 1, list(g.edges) + [(v, g.n + 1)])


def relabel(g, perm):
    """Apply a Relabeling (or mapping tuple) to the graph."""
    if not isinstance(perm, Relabeling):
        perm = Relabeling(tuple(perm))
    edges = [(perm.apply(i), perm.apply(j)) for i, j in g.edges]
    return Graph.from_edges(g.n, edges)


def decompose_at(g, v):
    """Split a connected graph at the cut vertex v into two sides.

    The lowest-labeled component of g - v (plus v) forms side one; the rest
    plus v forms side two. Returns a Decomposition whose relabeled graph
    satisfies the interval conditions on the neighbors of the cut vertex,
    or NOT_A_CUT_VERTEX.
    """
    if not is_connected(g):
        raise ValueError("decompose_at requires a connected graph")
    comps = connected_components(g, frozenset([v]))
    if len(comps) < 2:
        return NOT_A_CUT_VERTEX
    side1 = set(comps[0]) | {v}
    nb = g.neighbors(v)
    n1 = sorted(u for u in side1 if u != v and u in nb)
    rest1 = sorted(u for u in side1 if u != v and u not in nb)
    side2 = set(g.vertices()) - side1
    n2 = sorted(u for u in side2 if u in nb)
    rest2 = sorted(u for u in side2 if u not in nb)
    order = rest1 + n1 + [v] + n2 + rest2
    mapping = [0] * g.n
    for new, old in enumerate(order, start=1):
        mapping[old - 1] = new
    rel = Relabeling(tuple(mapping))
    return Decomposition(graph=relabel(g, rel), m=len(side1), relabeling=rel)


def glue_at(g, v, h, w):
    """Disjoint union of g and h with v and w identified (label of v)."""
    if not (1 <= v <= g.n and 1 <= w <= h.n):
        raise ValueError("glue vertex out of range")
    edges = list(g.edges)
    # h's vertices other than w come after g's, order preserved
    new_of = {}
    nxt = g.n + 1
    for u in h.vertices():
        if u == w:
            new_of[u] = v
        else:
            new_of[u] = nxt
            nxt += 1
    edges += [(min(new_of[i], new_of[j]), max(new_of[i], new_of[j]))
              for i, j in h.edges]
    return Graph.from_edges(g.n + h.n - 1, edges)


def block_with_whiskers(g, block, whisker_at):
    """Rebuild a block of g, keeping the branches at cut vertices not in
    ``whisker_at`` and replacing each branch at a cut vertex in
    ``whisker_at`` with a fresh whisker.

    ``block`` is a vertex set that must be a block of g; ``whisker_at`` is a
    subset of the cut vertices of g inside the block. Fresh whisker tips are
    appended as the largest labels, and surviving vertices are relabeled
    order-preservingly.
    """
    bd = blocks(g)
    block = frozenset(block)
    if block not in set(bd.blocks):
        raise ValueError("not a block of the graph")
    whisker_at = frozenset(whisker_at)
    if not whisker_at <= (bd.cut_vertices & block):
        raise ValueError("whisker set must consist of cut vertices of the block")
    # vertices kept: the block plus every branch hanging off a cut vertex
    # of the block that is NOT whiskered
    keep = set(block)
    for v in (bd.cut_vertices & block) - whisker_at:
        for comp in connected_components(g, frozenset([v])):
            if not comp & block:
                keep |= comp   # branch hanging off v, kept verbatim
    kept = sorted(keep)
    new_of = {old: i for i, old in enumerate(kept, start=1)}
    edges = [(new_of[i], new_of[j]) for i, j in g.edges
             if i in keep and j in keep]
    n = len(kept)
    for v in sorted(whisker_at):
        n += 1
        edges.append((new_of[v], n))
    return Graph.from_edges(n, edges)


# small builders used everywhere in tests

def path_graph(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)])


def cycle_graph(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])


def complete_graph(n):
    return Graph.from_edges(n, itertools.combinations(range(1, n + 1), 2))
