"""Finite simple graphs on vertex set {1, ..., n} with labelled combinatorics.

Vertex labels matter throughout this package: the lex order on the polynomial
ring is tied to the labelling, so graphs are stored as bit-row adjacency over
the fixed vertex set 1..n and relabelling is always explicit.  n stays small
(enumeration runs to n = 8, everything else to n = 12), so the algorithms
favour clarity over asymptotics.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass


class Graph:
    """Immutable simple graph on vertices 1..n, adjacency as bit rows.

    Bit j-1 of rows[i-1] is set iff {i, j} is an edge.

    >>> G = Graph(3, [(1, 2), (2, 3)])
    >>> sorted(G.neighbors(2))
    [1, 3]
    """

    __slots__ = ("n", "rows")

    def __init__(self, n, edges=()):
        if n < 0:
            raise ValueError("need n >= 0")
        rows = [0] * n
        for u, v in edges:
            if not (1 <= u <= n and 1 <= v <= n) or u == v:
                raise ValueError(f"bad edge ({u}, {v}) for n={n}")
            rows[u - 1] |= 1 << (v - 1)
            rows[v - 1] |= 1 << (u - 1)
        self.n = n
        self.rows = tuple(rows)

    @classmethod
    def from_rows(cls, rows):
        G = object.__new__(cls)
        G.n = len(rows)
        G.rows = tuple(rows)
        return G

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.rows == other.rows

    def __hash__(self):
        return hash((self.n, self.rows))

    def __repr__(self):
        return f"Graph({self.n}, {sorted(self.edges())})"

    def vertices(self):
        return range(1, self.n + 1)

    def has_edge(self, u, v):
        return bool(self.rows[u - 1] >> (v - 1) & 1)

    def neighbors(self, v):
        return _bits(self.rows[v - 1])

    def neighbor_mask(self, v):
        return self.rows[v - 1]

    def degree(self, v):
        return self.rows[v - 1].bit_count()

    def edges(self):
        return [(u, v) for u in self.vertices() for v in _bits(self.rows[u - 1]) if u < v]

    def num_edges(self):
        return sum(r.bit_count() for r in self.rows) // 2


def _bits(mask):
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length())
        mask ^= b
    return out


def _mask(vertices):
    m = 0
    for v in vertices:
        m |= 1 << (v - 1)
    return m


# ---------------------------------------------------------------------------
# standard families
# ---------------------------------------------------------------------------

def complete_graph(n):
    return Graph(n, itertools.combinations(range(1, n + 1), 2))


def path_graph(n):
    return Graph(n, [(i, i + 1) for i in range(1, n)])


def cycle_graph(n):
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph(n, [(i, i + 1) for i in range(1, n)] + [(n, 1)])


def empty_graph(n):
    return Graph(n)


def disjoint_union(G1, G2):
    shift = G1.n
    edges = G1.edges() + [(u + shift, v + shift) for u, v in G2.edges()]
    return Graph(G1.n + G2.n, edges)


# ---------------------------------------------------------------------------
# graph6 and adjacency-list text formats
# ---------------------------------------------------------------------------

class Graph6Error(ValueError):
    """Malformed graph6 input; `offset` is the byte position of the problem."""

    def __init__(self, message, offset):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def parse_graph6(text):
    """Decode a graph6 word (n <= 62, single-byte header).

    The format packs the upper triangle of the adjacency matrix, columns
    j = 2..n read top to bottom, into 6-bit chunks offset by 63.

    >>> sorted(parse_graph6("A_").edges())
    [(1, 2)]
    """
    if isinstance(text, bytes):
        data = text
    else:
        data = text.encode("ascii", errors="replace")
    data = data.rstrip(b"\n")
    if not data:
        raise Graph6Error("empty graph6 input", 0)
    if data.startswith(b">>graph6<<"):
        data = data[10:]
    first = data[0]
    if first == 126:
        raise Graph6Error("multi-byte vertex counts (n > 62) not supported", 0)
    if not 63 <= first <= 125:
        raise Graph6Error(f"invalid header byte {first}", 0)
    n = first - 63
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[1:]
    if len(body) < nbytes:
        raise Graph6Error(f"truncated bit field, need {nbytes} bytes got {len(body)}", len(data))
    if len(body) > nbytes:
        raise Graph6Error("trailing bytes after bit field", 1 + nbytes)
    bits = []
    for k, byte in enumerate(body):
        if not 63 <= byte <= 126:
            raise Graph6Error(f"invalid body byte {byte}", 1 + k)
        val = byte - 63
        bits.extend((val >> (5 - t)) & 1 for t in range(6))
    edges = []
    idx = 0
    for j in range(2, n + 1):
        for i in range(1, j):
            if bits[idx]:
                edges.append((i, j))
            idx += 1
    if any(bits[nbits:]):
        raise Graph6Error("nonzero padding bits", len(data))
    return Graph(n, edges)


def emit_graph6(G):
    """Encode a graph as a graph6 word (n <= 62)."""
    n = G.n
    if n > 62:
        raise ValueError("graph6 single-byte encoding needs n <= 62")
    bits = []
    for j in range(2, n + 1):
        for i in range(1, j):
            bits.append(1 if G.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for t in range(6):
            val = (val << 1) | bits[k + t]
        out.append(chr(val + 63))
    return "".join(out)


def parse_adjacency_text(text):
    """Parse the simple edge-list format "n; u v; u v; ...".

    >>> sorted(parse_adjacency_text("3; 1 2; 2 3").edges())
    [(1, 2), (2, 3)]
    """
    parts = [p.strip() for p in text.strip().split(";")]
    if not parts or not parts[0]:
        raise ValueError("adjacency text: missing vertex count")
    try:
        n = int(parts[0])
    except ValueError:
        raise ValueError(f"adjacency text: bad vertex count {parts[0]!r}") from None
    edges = []
    for k, chunk in enumerate(parts[1:], start=1):
        if not chunk:
            continue
        toks = chunk.split()
        if len(toks) != 2:
            raise ValueError(f"adjacency text: segment {k} should be 'u v', got {chunk!r}")
        edges.append((int(toks[0]), int(toks[1])))
    return Graph(n, edges)


# ---------------------------------------------------------------------------
# basic queries
# ---------------------------------------------------------------------------

def components(G, removed=()):
    """Connected components of G minus a vertex set, as sorted label lists."""
    dead = _mask(removed)
    seen = dead
    comps = []
    for v in G.vertices():
        bit = 1 << (v - 1)
        if seen & bit:
            continue
        comp = bit
        frontier = bit
        while frontier:
            nxt = 0
            for u in _bits(frontier):
                nxt |= G.rows[u - 1]
            frontier = nxt & ~comp & ~dead
            comp |= frontier
        seen |= comp
        comps.append(_bits(comp))
    return comps


def is_connected(G):
    return G.n <= 1 or len(components(G)) == 1


def cut_vertices(G):
    """Vertices whose removal disconnects a connected graph."""
    base = len(components(G))
    return [v for v in G.vertices() if len(components(G, [v])) > base]


def is_clique_mask(G, mask):
    for u in _bits(mask):
        if mask & ~((1 << (u - 1)) | G.rows[u - 1]):
            return False
    return True


def simplicial_vertices(G):
    """Vertices whose neighbourhood is a clique (equivalently: vertices lying
    in exactly one maximal clique)."""
    return [v for v in G.vertices() if is_clique_mask(G, G.rows[v - 1])]


def diameter(G):
    """Largest BFS eccentricity; raises on disconnected input."""
    if not is_connected(G):
        raise ValueError("diameter of a disconnected graph")
    best = 0
    for s in G.vertices():
        dist = {s: 0}
        queue = [s]
        for u in queue:
            for w in G.neighbors(u):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        best = max(best, max(dist.values()))
    return best


def is_bipartite(G):
    color = {}
    for s in G.vertices():
        if s in color:
            continue
        color[s] = 0
        queue = [s]
        for u in queue:
            for w in G.neighbors(u):
                if w not in color:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return False
    return True


def is_complete(G):
    return all(G.degree(v) == G.n - 1 for v in G.vertices())


def is_path(G):
    """True iff G is the path 1-2-...-n up to isomorphism (P_1 and P_2 count)."""
    if G.n == 1:
        return True
    if not is_connected(G):
        return False
    degs = sorted(G.degree(v) for v in G.vertices())
    return degs[:2] == [1, 1] and all(d == 2 for d in degs[2:])


def has_induced_path(G, k):
    """Does G contain an induced path on k vertices?"""
    if k <= 0:
        return False
    if k == 1:
        return G.n >= 1
    for start in G.vertices():
        if _extend_induced(G, [start], _mask([start]), k):
            return True
    return False


def _extend_induced(G, seq, used, k):
    if len(seq) == k:
        return True
    last = seq[-1]
    forbidden = 0
    for u in seq[:-1]:
        forbidden |= G.rows[u - 1]
    cand = G.rows[last - 1] & ~used & ~forbidden
    for v in _bits(cand):
        if _extend_induced(G, seq + [v], used | (1 << (v - 1)), k):
            return True
    return False


def is_pk_free(G, k):
    return not has_induced_path(G, k)


def induced_subgraph(G, vertices):
    """Induced subgraph relabelled to 1..k; returns (H, labels) where
    labels[i] is the original label of new vertex i+1."""
    labels = sorted(vertices)
    pos = {v: i + 1 for i, v in enumerate(labels)}
    edges = [(pos[u], pos[v]) for u, v in itertools.combinations(labels, 2) if G.has_edge(u, v)]
    return Graph(len(labels), edges), tuple(labels)


def relabel(G, perm):
    """Relabel via perm (dict or sequence indexed by old label, values 1..n)."""
    if not isinstance(perm, dict):
        perm = {v: perm[v - 1] for v in G.vertices()}
    return Graph(G.n, [(perm[u], perm[v]) for u, v in G.edges()])


# ---------------------------------------------------------------------------
# cones, joins, gluing
# ---------------------------------------------------------------------------

def cone(v, G):
    """Add a universal vertex with fresh label v (must be G.n + 1)."""
    if v != G.n + 1:
        raise ValueError(f"cone vertex must be the fresh label {G.n + 1}, got {v}")
    return Graph(G.n + 1, G.edges() + [(u, v) for u in G.vertices()])


def join(G1, G2):
    """Join: disjoint union plus all edges between the two sides."""
    n1 = G1.n
    edges = G1.edges() + [(u + n1, v + n1) for u, v in G2.edges()]
    edges += [(u, w + n1) for u in G1.vertices() for w in G2.vertices()]
    return Graph(n1 + G2.n, edges)


def neighborhood_completion(G, v):
    """Complete the neighbourhood of v to a clique (G_v in the literature)."""
    extra = itertools.combinations(G.neighbors(v), 2)
    return Graph(G.n, G.edges() + [e for e in extra])


def is_cone(G):
    """True iff some universal vertex disconnects the rest of the graph."""
    for v in G.vertices():
        if G.degree(v) == G.n - 1 and G.n >= 3:
            if len(components(G, [v])) >= 2:
                return True
    return False


def has_universal_vertex(G):
    return any(G.degree(v) == G.n - 1 for v in G.vertices())


def vertex_sum(G1, v1, G2, v2):
    """Glue two graphs by identifying v1 in G1 with v2 in G2.

    The result keeps G1's labels and appends G2's remaining vertices in
    increasing order.  This is the inverse of one decomposition step when the
    identified vertex is simplicial on both sides.
    """
    edges = G1.edges()
    others = [w for w in G2.vertices() if w != v2]
    new = {w: G1.n + i + 1 for i, w in enumerate(others)}
    new[v2] = v1
    edges += [(new[u], new[w]) for u, w in G2.edges()]
    return Graph(G1.n + G2.n - 1, edges)


# ---------------------------------------------------------------------------
# construction families
# ---------------------------------------------------------------------------

def build_Fm(m):
    """Bipartite block on 2m vertices: the path 1-2-...-2m plus the chords
    {2i, 2j+3} for 1 <= i <= m-2, i <= j <= m-2.

    F_1 = K_2 and F_2 = P_4; from m = 3 on every even vertex below 2m-2 is
    joined to every odd vertex at least three above it.
    """
    if m < 1:
        raise ValueError("need m >= 1")
    edges = [(i, i + 1) for i in range(1, 2 * m)]
    for i in range(1, m - 1):
        for j in range(i, m - 1):
            edges.append((2 * i, 2 * j + 3))
    return Graph(2 * m, edges)


def build_Hi(r, s, i):
    """Iterated-cone family over two complete graphs.

    H_1(r, s) is a cone over K_r disjoint-union K_s; each further step cones
    over (an isolated vertex plus the previous graph).  These are exactly the
    graphs whose quotient is Cohen-Macaulay with regularity 2 (for r + s >= 3;
    H_1(1, 1) = P_3 has regularity 2 as well).
    """
    if not (1 <= r <= s) or i < 1:
        raise ValueError("need 1 <= r <= s and i >= 1")
    H = disjoint_union(complete_graph(r), complete_graph(s))
    H = cone(H.n + 1, H)
    for _ in range(i - 1):
        H = disjoint_union(empty_graph(1), H)
        H = cone(H.n + 1, H)
    return H


def _build_G_family(left, i):
    H = disjoint_union(left, path_graph(5 - left.n))
    H = cone(H.n + 1, H)
    for _ in range(i - 1):
        H = disjoint_union(empty_graph(1), H)
        H = cone(H.n + 1, H)
    return H


def build_G1(i):
    """Iterated cones over P_1 + P_4 (pseudo-Gorenstein, regularity 3)."""
    if i < 1:
        raise ValueError("need i >= 1")
    return _build_G_family(path_graph(1), i)


def build_G2(i):
    """Iterated cones over P_2 + P_3 (pseudo-Gorenstein, regularity 3)."""
    if i < 1:
        raise ValueError("need i >= 1")
    return _build_G_family(path_graph(2), i)


def circ(G1, u1, G2, u2):
    """Leaf-identification product.

    Each u_k must be a leaf whose neighbour v_k has degree at least 3.  Both
    leaves are deleted and v_1 is identified with v_2; the result has
    n_1 + n_2 - 3 vertices, keeping G1's labels (minus the leaf, repacked)
    and appending G2's in increasing order.
    """
    for G, u in ((G1, u1), (G2, u2)):
        if G.degree(u) != 1:
            raise ValueError(f"vertex {u} is not a leaf")
        (v,) = G.neighbors(u)
        if G.degree(v) < 3:
            raise ValueError(f"neighbour {v} of leaf {u} has degree < 3")
    (v1,) = G1.neighbors(u1)
    (v2,) = G2.neighbors(u2)
    keep1 = [w for w in G1.vertices() if w != u1]
    new1 = {w: i + 1 for i, w in enumerate(keep1)}
    keep2 = [w for w in G2.vertices() if w not in (u2, v2)]
    new2 = {w: len(keep1) + i + 1 for i, w in enumerate(keep2)}
    new2[v2] = new1[v1]
    edges = [(new1[a], new1[b]) for a, b in G1.edges() if u1 not in (a, b)]
    edges += [(new2[a], new2[b]) for a, b in G2.edges() if u2 not in (a, b)]
    return Graph(len(keep1) + len(keep2), edges)


def chain(ms):
    """Chain of F_m blocks glued by circ.

    Uses the canonical leaf pair: the highest-labelled leaf of the left
    factor against vertex 1 of the right factor.  All entries need m >= 3 so
    that the identified vertices have degree >= 3.
    """
    ms = list(ms)
    if not ms:
        raise ValueError("empty chain")
    if any(m < 3 for m in ms):
        raise ValueError("chain entries need m >= 3")
    G = build_Fm(ms[0])
    for m in ms[1:]:
        leaves = [v for v in G.vertices() if G.degree(v) == 1]
        G = circ(G, max(leaves), build_Fm(m), 1)
    return G


# ---------------------------------------------------------------------------
# decomposition at simplicial cut vertices
# ---------------------------------------------------------------------------

@dataclass
class Decomposition:
    """Pieces of an iterated decomposition.

    pieces: list of (graph, labels) with labels mapping new to original
    vertices; glue_vertices: original labels of the split vertices used.
    A graph is indecomposable iff there is a single piece.
    """

    pieces: list
    glue_vertices: list

    def __len__(self):
        return len(self.pieces)


def _find_split(G, vset):
    sub, labels = induced_subgraph(G, vset)
    for v_new in range(1, sub.n + 1):
        comps = components(sub, [v_new])
        if len(comps) < 2:
            continue
        nb = sub.neighbor_mask(v_new)
        for pick in range(1, 1 << (len(comps) - 1)):
            side_a = 0
            for t, comp in enumerate(comps[:-1]):
                if pick >> t & 1:
                    side_a |= _mask(comp)
            side_b = _mask(range(1, sub.n + 1)) & ~side_a & ~(1 << (v_new - 1))
            if not side_a or not side_b:
                continue
            if is_clique_mask(sub, nb & side_a) and is_clique_mask(sub, nb & side_b):
                bit = 1 << (v_new - 1)
                A = [labels[w - 1] for w in _bits(side_a | bit)]
                B = [labels[w - 1] for w in _bits(side_b | bit)]
                return labels[v_new - 1], A, B
    return None


def decompose(G):
    """Split G at cut vertices that are simplicial on both sides, repeatedly.

    G = G1 cup G2 with V(G1) cap V(G2) = {v} and v simplicial in both parts;
    each part is split again until no further split exists.  The piece list is
    sorted by (canonical word, smallest original label) for determinism.
    """
    if G.n and not is_connected(G):
        raise ValueError("decompose expects a connected graph")
    pieces = []
    glue = []
    todo = [list(G.vertices())]
    while todo:
        vset = todo.pop()
        hit = _find_split(G, vset)
        if hit is None:
            pieces.append(induced_subgraph(G, vset))
            continue
        v, A, B = hit
        glue.append(v)
        todo.append(A)
        todo.append(B)
    pieces.sort(key=lambda pl: (canonical_graph6(pl[0]), pl[1]))
    return Decomposition(pieces, sorted(glue))


# ---------------------------------------------------------------------------
# canonical labelling
# ---------------------------------------------------------------------------

def canonical_order(G):
    """A canonical vertex ordering: the one whose upper-triangle adjacency
    bit string (graph6 bit order) is lexicographically least.

    Branch-and-bound over orderings, memoised on (remaining set, adjacency
    patterns to the chosen prefix); the memo collapses the factorial
    branching on symmetric graphs to one state per reachable configuration.
    """
    n = G.n
    if n == 0:
        return ()
    rows = G.rows
    memo = {}

    def best_suffix(remaining, patterns):
        # remaining: bitmask of unplaced vertices; patterns: tuple of
        # (vertex, bits-to-prefix) sorted by vertex.
        key = (remaining, tuple(p for _, p in patterns))
        hit = memo.get(key)
        if hit is not None:
            return hit
        if remaining == 0:
            memo[key] = ((), ())
            return (), ()
        pat = dict(patterns)
        lo = min(pat[v] for v in _bits(remaining))
        cands = [v for v in _bits(remaining) if pat[v] == lo]
        best = None
        for v in cands:
            rem2 = remaining & ~(1 << (v - 1))
            pats2 = tuple(
                (w, (pat[w] << 1) | (rows[w - 1] >> (v - 1) & 1))
                for w in _bits(rem2)
            )
            word, order = best_suffix(rem2, pats2)
            cand = ((lo,) + word, (v,) + order)
            if best is None or cand[0] < best[0]:
                best = cand
        memo[key] = best
        return best

    start = tuple((v, 0) for v in G.vertices())
    _, order = best_suffix(_mask(G.vertices()), start)
    return order


def canonical_form(G):
    """Return (perm, word): perm maps old labels to canonical ones, word is
    the graph6 string of the canonically relabelled graph."""
    order = canonical_order(G)
    perm = {v: i + 1 for i, v in enumerate(order)}
    H = relabel(G, perm) if G.n else G
    return tuple(perm[v] for v in G.vertices()), emit_graph6(H)


def canonical_graph6(G):
    return canonical_form(G)[1]


def are_isomorphic(G, H):
    return G.n == H.n and canonical_graph6(G) == canonical_graph6(H)


# ---------------------------------------------------------------------------
# connected dominating sets
# ---------------------------------------------------------------------------

def is_dominating(G, mask):
    covered = mask
    for v in _bits(mask):
        covered |= G.rows[v - 1]
    return covered == _mask(G.vertices())


def min_connected_dominating_sets(G):
    """All minimum-size sets X that dominate G and induce a connected graph."""
    if not is_connected(G):
        raise ValueError("connected graph expected")
    if G.n == 1:
        return [[1]]
    for k in range(1, G.n + 1):
        found = []
        for combo in itertools.combinations(G.vertices(), k):
            m = _mask(combo)
            if is_dominating(G, m) and is_connected(induced_subgraph(G, combo)[0]):
                found.append(list(combo))
        if found:
            return found
    return [list(G.vertices())]
