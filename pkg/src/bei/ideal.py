"""The binomial edge ideal of a graph and its lex Groebner degeneration.

For a graph G on [n] the ideal J_G = (x_i y_j - x_j y_i : {i,j} edge, i < j)
lives in S = K[x_1..x_n, y_1..y_n].  Everything here is relative to the fixed
lex order x_1 > ... > x_n > y_1 > ... > y_n.  Variable index i-1 is x_i and
n+i-1 is y_i, so comparing exponent tuples with Python's tuple order is
exactly this lex order, and the bit i of a support mask matches the symbol at
ground position i of the Stanley-Reisner complex below.

The Groebner basis of J_G is indexed by admissible paths: a path
pi = (i, i_1, ..., i_{r-1}, j) with i < j such that every interior vertex
lies outside the interval [i, j], and no proper subset of the interior can be
arranged into a path from i to j (so pi admits no shortcut).  The basis
element is u_pi * (x_i y_j - x_j y_i) with
u_pi = prod_{i_k > j} x_{i_k} * prod_{i_k < i} y_{i_k}, and the initial ideal
is generated by the squarefree monomials x_i y_j u_pi.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .graphs import Graph, components, is_connected, _bits, _mask


# ---------------------------------------------------------------------------
# variables and monomials
# ---------------------------------------------------------------------------

def xvar(i, n):
    return i - 1


def yvar(i, n):
    return n + i - 1


def var_name(idx, n):
    return f"x{idx + 1}" if idx < n else f"y{idx - n + 1}"


def mono_from_vars(var_indices, nvars):
    e = [0] * nvars
    for v in var_indices:
        e[v] += 1
    return tuple(e)


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_degree(m):
    return sum(m)


def support_mask(m):
    s = 0
    for i, e in enumerate(m):
        if e:
            s |= 1 << i
    return s


def mono_str(m, n):
    parts = []
    for i, e in enumerate(m):
        if e == 1:
            parts.append(var_name(i, n))
        elif e > 1:
            parts.append(f"{var_name(i, n)}^{e}")
    return "*".join(parts) if parts else "1"


# ---------------------------------------------------------------------------
# cut sets
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CutSet:
    """A set T with c(T \\ {v}) < c(T) for every v in T, where c counts the
    components of G minus the set.  The empty set always qualifies."""

    vertices: tuple
    n_components: int


def cut_sets(G):
    """All cut sets of a connected graph, sorted by size then lexicographically.

    >>> [c.vertices for c in cut_sets(Graph(3, [(1, 2), (2, 3)]))]
    [(), (2,)]
    """
    if not is_connected(G):
        raise ValueError("cut sets are defined for connected graphs here")
    out = []
    for size in range(G.n + 1):
        for T in itertools.combinations(G.vertices(), size):
            c = len(components(G, T))
            ok = True
            for v in T:
                rest = tuple(w for w in T if w != v)
                if len(components(G, rest)) >= c:
                    ok = False
                    break
            if ok:
                out.append(CutSet(T, c))
    return out


def is_unmixed(G):
    """Purity of the degeneration: every cut set satisfies c(T) = |T| + 1."""
    return all(c.n_components == len(c.vertices) + 1 for c in cut_sets(G))


# ---------------------------------------------------------------------------
# admissible paths and the Groebner basis
# ---------------------------------------------------------------------------

def _has_path_avoiding(G, src, dst, allowed_mask):
    # connectivity of src -> dst inside allowed_mask | {src, dst}
    goal = 1 << (dst - 1)
    reach = 1 << (src - 1)
    frontier = reach
    box = allowed_mask | reach | goal
    while frontier:
        nxt = 0
        for u in _bits(frontier):
            nxt |= G.rows[u - 1]
        frontier = nxt & box & ~reach
        reach |= frontier
        if reach & goal:
            return True
    return False


def _prefix_minimal(G, i, current, interior_mask):
    # the path i..current is shortcut-free iff removing any single interior
    # vertex disconnects i from current inside the path's vertex set
    for z in _bits(interior_mask):
        if _has_path_avoiding(G, i, current, interior_mask & ~(1 << (z - 1))):
            return False
    return True


def admissible_paths(G):
    """All admissible paths of G, as vertex tuples (i, ..., j) with i < j.

    Enumeration is a depth-first extension keeping only shortcut-free
    prefixes, which is both the pruning and the final minimality check: a
    prefix with a shortcut can never be completed to an admissible path.
    """
    out = []
    n = G.n
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            allowed = 0
            for w in G.vertices():
                if w < i or w > j:
                    allowed |= 1 << (w - 1)
            stack = [(i, (i,), 0)]
            while stack:
                cur, seq, interior = stack.pop()
                if G.has_edge(cur, j) and _prefix_minimal(G, i, j, interior):
                    out.append(seq + (j,))
                cand = G.rows[cur - 1] & allowed & ~interior
                for w in _bits(cand):
                    if _prefix_minimal(G, i, w, interior):
                        stack.append((w, seq + (w,), interior | (1 << (w - 1))))
    out.sort(key=lambda s: (len(s), s))
    return out


@dataclass(frozen=True)
class GBElement:
    """One reduced Groebner basis element u_pi * (x_i y_j - x_j y_i)."""

    path: tuple
    lead: tuple
    trail: tuple


def _path_element(path, n):
    i, j = path[0], path[-1]
    nvars = 2 * n
    lead_vars = [xvar(i, n), yvar(j, n)]
    trail_vars = [xvar(j, n), yvar(i, n)]
    for w in path[1:-1]:
        v = xvar(w, n) if w > j else yvar(w, n)
        lead_vars.append(v)
        trail_vars.append(v)
    return GBElement(path, mono_from_vars(lead_vars, nvars), mono_from_vars(trail_vars, nvars))


def groebner_basis(G):
    """Reduced lex Groebner basis of J_G, sorted by decreasing leading term."""
    gb = [_path_element(p, G.n) for p in admissible_paths(G)]
    gb.sort(key=lambda g: g.lead, reverse=True)
    return gb


def initial_ideal(G):
    """Minimal generators of the initial ideal, sorted by decreasing lex."""
    leads = sorted({g.lead for g in groebner_basis(G)}, reverse=True)
    masks = [support_mask(m) for m in leads]
    out = []
    for k, m in enumerate(leads):
        mk = masks[k]
        if not any(t != k and masks[t] & mk == masks[t] for t in range(len(leads))):
            out.append(m)
    return out


# ---------------------------------------------------------------------------
# normal form and standard monomials
# ---------------------------------------------------------------------------

def normal_form(f, gb, p):
    """Deterministic remainder of f modulo the Groebner basis over GF(p).

    f is a dict {exponent tuple: coefficient} (a bare tuple is accepted as a
    monomial).  At each step the lex-largest reducible term is rewritten by
    the basis element with the lex-largest leading term dividing it.
    """
    if isinstance(f, tuple):
        f = {f: 1}
    work = {m: c % p for m, c in f.items() if c % p}
    table = [(support_mask(g.lead), g.lead, g.trail) for g in gb]
    result = {}
    while work:
        m = max(work)
        c = work.pop(m)
        sup = support_mask(m)
        hit = None
        for gmask, lead, trail in table:
            if gmask & sup == gmask:
                hit = (lead, trail)
                break
        if hit is None:
            result[m] = c
            continue
        lead, trail = hit
        nm = tuple(e - l + t for e, l, t in zip(m, lead, trail))
        c2 = (work.get(nm, 0) + c) % p
        if c2:
            work[nm] = c2
        elif nm in work:
            del work[nm]
    return result


def monomial_basis(gen_masks, nvars, d):
    """Degree-d monomials in nvars variables not divisible by any generator
    of a squarefree monomial ideal (given by support masks), in decreasing
    lex order.  A K-basis of the quotient in that degree."""
    out = []
    for combo in itertools.combinations_with_replacement(range(nvars), d):
        sup = 0
        for v in combo:
            sup |= 1 << v
        if any(g & sup == g for g in gen_masks):
            continue
        out.append(mono_from_vars(combo, nvars))
    out.sort(reverse=True)
    return out


def standard_monomials(G, d):
    """K-basis of (S/J_G)_d: degree-d monomials avoiding ini(J_G).  The count
    is the Hilbert function of S/J_G at d."""
    gens = [support_mask(m) for m in initial_ideal(G)]
    return monomial_basis(gens, 2 * G.n, d)


# ---------------------------------------------------------------------------
# Hilbert series of a squarefree monomial quotient
# ---------------------------------------------------------------------------

def _poly_add(a, b):
    out = [0] * max(len(a), len(b))
    for k, c in enumerate(a):
        out[k] += c
    for k, c in enumerate(b):
        out[k] += c
    return out


def _poly_shift_sub(a, b, s):
    # a - t^s * b
    out = list(a) + [0] * max(0, s + len(b) - len(a))
    for k, c in enumerate(b):
        out[s + k] -= c
    return out


def _minimalize(masks):
    masks = sorted(set(masks), key=lambda m: (m.bit_count(), m))
    out = []
    for m in masks:
        if not any(g & m == g for g in out):
            out.append(m)
    return tuple(out)


def hilbert_numerator(gen_masks, nvars):
    """Numerator of the Hilbert series of S/I over (1-t)^nvars, for a
    squarefree monomial ideal given by support masks.  Variable-pivot
    recursion with memoisation."""

    @lru_cache(maxsize=None)
    def rec(masks):
        if not masks:
            return (1,)
        singles = sum(1 for m in masks if m.bit_count() == 1)
        if singles:
            out = rec(tuple(m for m in masks if m.bit_count() > 1))
            for _ in range(singles):
                out = tuple(_poly_shift_sub(out, out, 1))
            return out
        counts = {}
        for m in masks:
            for b in range(m.bit_length()):
                if m >> b & 1:
                    counts[b] = counts.get(b, 0) + 1
        b, freq = max(counts.items(), key=lambda kv: (kv[1], -kv[0]))
        if freq == 1:
            # pairwise behaviour is tame; fall back to gen splitting
            m0 = masks[-1]
            rest = tuple(masks[:-1])
            colon = _minimalize([g & ~m0 for g in rest])
            return tuple(_poly_shift_sub(rec(rest), rec(colon), m0.bit_count()))
        bit = 1 << b
        without = tuple(m for m in masks if not m & bit)
        colon = _minimalize([m & ~bit for m in masks])
        plus = _poly_shift_sub(rec(without), rec(without), 1)   # (1-t) * HN(without)
        link = [0] + list(rec(colon))                            # t * HN(colon)
        return tuple(_poly_add(plus, link))

    return list(rec(_minimalize(gen_masks)))


def hilbert_function(numer, nvars, d):
    """dim_K (S/I)_d from the series numerator."""
    from math import comb

    total = 0
    for k, c in enumerate(numer):
        if k <= d and c:
            total += c * comb(nvars - 1 + d - k, nvars - 1)
    return total


def h_vector(numer, nvars, dim):
    """Divide the numerator by (1-t)^(nvars-dim); exact iff dim is the Krull
    dimension of the quotient."""
    h = list(numer)
    for _ in range(nvars - dim):
        h = list(itertools.accumulate(h))
        if h and h[-1] != 0:
            raise ValueError("numerator not divisible by (1-t)^codim; wrong dimension")
        while h and h[-1] == 0:
            h.pop()
    while h and h[-1] == 0:
        h.pop()
    return h


# ---------------------------------------------------------------------------
# simplicial complexes
# ---------------------------------------------------------------------------

class SimplicialComplex:
    """A complex given by facets over a named ground set.

    Facets are bitmasks over ground positions; duplicates and contained sets
    are dropped on construction.  The facet order is by sorted position
    tuples, which downstream code (matroid witnesses) relies on.
    """

    def __init__(self, ground, facet_masks):
        self.ground = tuple(ground)
        uniq = sorted(set(facet_masks), key=lambda m: -m.bit_count())
        keep = []
        for m in uniq:
            if not any(m & f == m for f in keep):
                keep.append(m)
        keep.sort(key=lambda m: tuple(_bits(m)))
        self.facets = tuple(keep)

    def __repr__(self):
        return f"SimplicialComplex({len(self.ground)} vertices, {len(self.facets)} facets)"

    def facet_sets(self):
        return [frozenset(self.ground[b - 1] for b in _bits(m)) for m in self.facets]

    def dim(self):
        return max((m.bit_count() for m in self.facets), default=0) - 1

    def is_pure(self):
        sizes = {m.bit_count() for m in self.facets}
        return len(sizes) <= 1

    def is_face(self, mask):
        return any(mask & f == mask for f in self.facets)

    def names(self, mask):
        return tuple(self.ground[b - 1] for b in _bits(mask))


def stanley_reisner_complex(G):
    """The simplicial complex whose Stanley-Reisner ideal is ini(J_G).

    Ground set is (x_1..x_n, y_1..y_n) at positions matching the variable
    indices.  For each cut set T and each choice of one vertex v_c per
    component C of G minus T, the facet takes y_j for the component vertices
    j <= v_c and x_j for those j >= v_c.
    """
    n = G.n
    ground = [var_name(k, n) for k in range(2 * n)]
    facets = []
    for cs in cut_sets(G):
        comps = components(G, cs.vertices)
        for choice in itertools.product(*comps):
            mask = 0
            for c, v in enumerate(choice):
                for j in comps[c]:
                    if j <= v:
                        mask |= 1 << yvar(j, n)
                    if j >= v:
                        mask |= 1 << xvar(j, n)
            facets.append(mask)
    return SimplicialComplex(ground, facets)


def minimal_nonfaces(cx):
    """Minimal non-faces, as masks: the minimal transversals of the facet
    complements (iterative Berge construction)."""
    full = (1 << len(cx.ground)) - 1
    trans = [0]
    for f in cx.facets:
        comp = full & ~f
        nxt = set()
        for t in trans:
            if t & comp:
                nxt.add(t)
            else:
                for b in _bits(comp):
                    nxt.add(t | (1 << (b - 1)))
        trans = list(_minimalize(nxt))
    return sorted(trans, key=lambda m: (m.bit_count(), tuple(_bits(m))))


def clique_complex(G):
    """Flag complex of G; ground set is the vertex labels as strings.
    Subset enumeration; meant for the small n this package works at."""
    from .graphs import is_clique_mask

    ground = [str(v) for v in G.vertices()]
    cliques = [m for m in range(1, 1 << G.n) if is_clique_mask(G, m)]
    return SimplicialComplex(ground, cliques)


def f_vector(cx):
    """(f_0, f_1, ...) counting faces by cardinality 1, 2, ...; the empty
    face is not listed."""
    faces = set()
    for f in cx.facets:
        members = _bits(f)
        for r in range(1, len(members) + 1):
            for sub in itertools.combinations(members, r):
                faces.add(_mask(sub))
    top = max((m.bit_count() for m in faces), default=0)
    out = [0] * top
    for m in faces:
        out[m.bit_count() - 1] += 1
    return out
