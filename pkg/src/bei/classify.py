"""Classification of binomial edge ideals by homological type.

The pipeline layers cheap combinatorial filters (unmixedness, accessibility
of the cut-set system, P5-freeness) in front of the certified Artinian
reduction, then reads regularity, levelness and pseudo-Gorensteinness off
the socle.  Each characterization theorem also gets an independent
combinatorial recognizer so the consistency checker can pit the structural
description against the engine verdict on every graph where the hypothesis
applies.

Engine tags on a record:
  exact    - socle of a certified Artinian reduction (mod p, retried seeds)
  monomial - corner data of the squarefree degeneration
  theorem  - structural fast path, no linear algebra ran
  product  - assembled from the pieces of a decomposition
"""

from __future__ import annotations

import json
from dataclasses import dataclass, asdict

from .graphs import (Graph, components, is_connected, is_complete, is_path,
                     is_bipartite, is_pk_free, is_cone, induced_subgraph,
                     canonical_graph6, are_isomorphic, decompose, build_Fm,
                     chain, _mask)
from .ideal import cut_sets, is_unmixed, stanley_reisner_complex
from .betti import DEFAULT_PRIME, cm_reduction, hochster_betti


@dataclass
class ClassificationRecord:
    """One classified graph.  dim/pd/reg are None only on records marked
    incomplete (engine gave up within its retry budget)."""

    graph6: str
    n: int
    indecomposable: bool
    unmixed: bool
    accessible: bool
    CM: bool
    dim: int | None
    pd: int | None
    reg: int | None
    level: bool
    pseudo_gorenstein: bool
    gorenstein: bool
    is_cone: bool
    engine: str
    field_char: int
    incomplete: bool = False

    def to_dict(self):
        return asdict(self)

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True)


# ---------------------------------------------------------------------------
# combinatorial layer: accessibility and dimension from the cut-set system
# ---------------------------------------------------------------------------

def is_accessible(G):
    """Unmixed with an accessible cut-set system: every nonempty cut set T
    keeps some t in T with T \\ {t} again a cut set.  Cohen-Macaulay graphs
    are always accessible, so a failure here certifies non-CM."""
    if not is_unmixed(G):
        return False
    cuts = {frozenset(c.vertices) for c in cut_sets(G)}
    for T in cuts:
        if T and not any(T - {t} in cuts for t in T):
            return False
    return True


def krull_dim(G):
    """dim S/J_G = max over cut sets T of (n - |T| + c(T)); the maximum is
    n+1 exactly when some minimal prime is the generic one, which always
    happens for connected G (T = empty set)."""
    return max(G.n - len(c.vertices) + c.n_components for c in cut_sets(G))


# ---------------------------------------------------------------------------
# regularity <= 2 by the join recursion
# ---------------------------------------------------------------------------

def _complement_components(G):
    comp_edges = [(i, j) for i in range(1, G.n + 1)
                  for j in range(i + 1, G.n + 1) if not G.has_edge(i, j)]
    return components(Graph(G.n, comp_edges))


def km_regularity_le2(G, _memo=None):
    """reg(S/J_G) when it is at most 2, else the token ">2", decided purely
    combinatorially: reg 0 = no edges, reg 1 per complete component, and a
    connected non-complete graph has reg 2 iff it is a join G1 * G2 with
    both sides of regularity <= 2 (joins are detected on the complement)."""
    if _memo is None:
        _memo = {}
    if not any(G.rows):
        return 0
    comps = components(G)
    if len(comps) > 1:
        total = 0
        for comp in comps:
            sub, _ = induced_subgraph(G, comp)
            r = km_regularity_le2(sub, _memo)
            if r == ">2":
                return ">2"
            total += r
            if total > 2:
                return ">2"
        return total
    if is_complete(G):
        return 1
    key = canonical_graph6(G)
    if key in _memo:
        return _memo[key]
    _memo[key] = ">2"          # guard against re-entry; overwritten below
    cc = _complement_components(G)
    result = ">2"
    if len(cc) >= 2:
        # every bipartition of the complement components realizes G as a
        # join; regularity 2 needs one with both sides of regularity <= 2
        for pick in range(1, 1 << (len(cc) - 1)):
            side = [v for t in range(len(cc)) if pick >> t & 1 for v in cc[t]]
            rest = [v for t in range(len(cc)) if not pick >> t & 1
                    for v in cc[t]]
            A, _ = induced_subgraph(G, side)
            B, _ = induced_subgraph(G, rest)
            if km_regularity_le2(A, _memo) != ">2" and \
               km_regularity_le2(B, _memo) != ">2":
                result = 2
                break
    _memo[key] = result
    return result


# ---------------------------------------------------------------------------
# structural recognizers for the cone families
# ---------------------------------------------------------------------------

def _universal_vertices(G):
    full = _mask(G.vertices())
    return [v for v in G.vertices()
            if G.neighbor_mask(v) | (1 << (v - 1)) == full]


def recognize_Hi(G):
    """Match G against the H_i family: H_1 = K_1 * (K_r + K_s) and
    H_i = K_1 * (K_1 + H_{i-1}).  Returns (r, s, i) with r <= s, or None.
    Peeling: strip a universal vertex together with a vertex isolated by
    its removal, and recurse."""
    if G.n < 3 or not is_connected(G):
        return None
    for v in _universal_vertices(G):
        comps = components(G, [v])
        if len(comps) == 2:
            subs = [induced_subgraph(G, c)[0] for c in comps]
            if all(is_complete(s) for s in subs):
                r, s = sorted(len(c) for c in comps)
                return (r, s, 1)
    for v in _universal_vertices(G):
        comps = components(G, [v])
        for comp in comps:
            if len(comp) != 1:
                continue
            keep = [w for w in G.vertices() if w != v and w != comp[0]]
            sub, _ = induced_subgraph(G, keep)
            hit = recognize_Hi(sub)
            if hit is not None:
                return (hit[0], hit[1], hit[2] + 1)
    return None


def _two_path_components(G, v, sizes):
    comps = components(G, [v])
    if len(comps) != 2:
        return False
    if sorted(len(c) for c in comps) != sorted(sizes):
        return False
    return all(is_path(induced_subgraph(G, c)[0]) for c in comps)


def recognize_Gij(G):
    """Match G against G_i^1 = iterated cone over K_1 * (P_1 + P_4) or
    G_i^2 over K_1 * (P_2 + P_3).  Returns (j, i) or None."""
    if G.n < 6 or not is_connected(G):
        return None
    for v in _universal_vertices(G):
        if _two_path_components(G, v, (1, 4)):
            return (1, 1)
        if _two_path_components(G, v, (2, 3)):
            return (2, 1)
    for v in _universal_vertices(G):
        comps = components(G, [v])
        for comp in comps:
            if len(comp) != 1:
                continue
            keep = [w for w in G.vertices() if w != v and w != comp[0]]
            sub, _ = induced_subgraph(G, keep)
            hit = recognize_Gij(sub)
            if hit is not None:
                return (hit[0], hit[1] + 1)
    return None


# ---------------------------------------------------------------------------
# bipartite recognizers: F_m pieces and the pinched chains
# ---------------------------------------------------------------------------

def _is_Fm(piece):
    if piece.n % 2:
        return False
    m = piece.n // 2
    return m >= 1 and are_isomorphic(piece, build_Fm(m))


def recognize_bipartite_level(G):
    """Bipartite level = every indecomposable piece is some F_m."""
    if not is_bipartite(G):
        return False
    return all(_is_Fm(piece) for piece, _ in decompose(G).pieces)


def _is_pg_chain(piece):
    # chains F_{m_1} o ... o F_{m_t} with m_1 = m_t = 3 and all middle
    # m_i = 4 have 5t - 1 vertices; match by canonical form
    if piece.n == 2:
        return len(piece.edges()) == 1
    if (piece.n + 1) % 5:
        return False
    t = (piece.n + 1) // 5
    if t < 2:
        return False
    pattern = [3] + [4] * (t - 2) + [3]
    return are_isomorphic(piece, chain(pattern))


def recognize_bipartite_pg(G):
    """Bipartite pseudo-Gorenstein = every indecomposable piece is an edge
    or a chain of F_m's pinched to [3, 4, ..., 4, 3]."""
    if not is_bipartite(G):
        return False
    return all(_is_pg_chain(piece) for piece, _ in decompose(G).pieces)


# ---------------------------------------------------------------------------
# the classifier
# ---------------------------------------------------------------------------

def _socle_route(G, p, record, red=None, keep_reg=False, attempts=6):
    """Fill reg/level/pG of a CM record from the socle of a certified
    reduction.  A reduction that never certifies leaves the record
    incomplete rather than guessing."""
    if red is None:
        red = cm_reduction(G, p, attempts=attempts)
    if red is None:
        record.incomplete = True
        return
    soc = red.socle_dims()
    if not keep_reg:
        record.reg = max(soc)
    record.level = len(soc) == 1
    record.pseudo_gorenstein = soc[max(soc)] == 1


def classify(G, p=DEFAULT_PRIME, engine="auto", fast=False, attempts=6):
    """Classification record for a connected graph.

    engine "auto" layers theorem fast paths in front of the certified
    reduction; "exact" forces the reduction route even where a theorem
    applies; "monomial" decides CM and the corners from the squarefree
    degeneration alone (its corner data transfers exactly), running the
    reduction only for the socle.  fast=True skips pd/reg of non-CM
    graphs, marking the record incomplete; the bulk enumerations use that
    at 7+ vertices.
    """
    if not is_connected(G):
        raise ValueError("classify expects a connected graph")
    if engine not in ("auto", "exact", "monomial"):
        raise ValueError("engine must be auto, exact or monomial")

    dec = decompose(G)
    if len(dec) > 1:
        return classify_decomposable(G, p, engine=engine, fast=fast,
                                     attempts=attempts, _dec=dec)

    n = G.n
    rec = ClassificationRecord(
        graph6=canonical_graph6(G), n=n, indecomposable=True,
        unmixed=is_unmixed(G), accessible=is_accessible(G), CM=False,
        dim=krull_dim(G), pd=None, reg=None, level=False,
        pseudo_gorenstein=False, gorenstein=is_path(G),
        is_cone=is_cone(G), engine="theorem", field_char=p)

    if engine == "monomial":
        table = hochster_betti(stanley_reisner_complex(G), p)
        rec.pd, rec.reg = table.pd, table.reg
        rec.CM = rec.unmixed and table.pd == 2 * n - rec.dim
        rec.engine = "monomial"
        if rec.CM:
            _socle_route(G, p, rec, keep_reg=True, attempts=attempts)
        return rec

    # Cohen-Macaulay decision: accessibility is necessary in general and
    # sufficient for P5-free graphs; everything else goes to the engine.
    red = None
    if engine == "exact":
        red = cm_reduction(G, p, attempts=attempts)
        rec.CM = red is not None
        rec.engine = "exact"
    elif not rec.accessible:
        rec.CM = False
    elif is_path(G) or is_pk_free(G, 5):
        rec.CM = True
    else:
        red = cm_reduction(G, p, attempts=attempts)
        rec.CM = red is not None
        rec.engine = "exact"

    if rec.CM:
        rec.pd = 2 * n - rec.dim
        if is_path(G) and red is None:
            # complete intersection on n-1 binomials
            rec.reg = n - 1
            rec.level = True
            rec.pseudo_gorenstein = True
        else:
            _socle_route(G, p, rec, red, attempts=attempts)
            if not rec.incomplete:
                rec.engine = "exact"
    elif not fast:
        table = hochster_betti(stanley_reisner_complex(G), p)
        rec.pd, rec.reg = table.pd, table.reg
        rec.engine = "monomial"
    else:
        rec.incomplete = True
    return rec


def classify_decomposable(G, p=DEFAULT_PRIME, engine="auto", fast=False,
                          attempts=6, _dec=None):
    """Product rule along a decomposition: CM, level and pG hold iff they
    hold for every piece; pd and reg add up."""
    dec = _dec if _dec is not None else decompose(G)
    if len(dec) < 2:
        raise ValueError("graph is indecomposable")
    piece_recs = [classify(piece, p, engine=engine, fast=fast,
                           attempts=attempts)
                  for piece, _ in dec.pieces]
    rec = ClassificationRecord(
        graph6=canonical_graph6(G), n=G.n, indecomposable=False,
        unmixed=is_unmixed(G), accessible=is_accessible(G),
        CM=all(r.CM for r in piece_recs),
        dim=krull_dim(G), pd=None, reg=None,
        level=all(r.CM and r.level for r in piece_recs),
        pseudo_gorenstein=all(r.CM and r.pseudo_gorenstein
                              for r in piece_recs),
        gorenstein=is_path(G), is_cone=is_cone(G), engine="product",
        field_char=p)
    if all(r.pd is not None for r in piece_recs):
        rec.pd = sum(r.pd for r in piece_recs)
    if all(r.reg is not None for r in piece_recs):
        rec.reg = sum(r.reg for r in piece_recs)
    rec.incomplete = any(r.incomplete for r in piece_recs)
    return rec


# ---------------------------------------------------------------------------
# theorem-vs-engine consistency report
# ---------------------------------------------------------------------------

def _cone_split(G):
    """First universal vertex whose removal leaves exactly two components;
    returns (v, H1, H2) or None."""
    for v in _universal_vertices(G):
        comps = components(G, [v])
        if len(comps) == 2:
            H1, _ = induced_subgraph(G, comps[0])
            H2, _ = induced_subgraph(G, comps[1])
            return v, H1, H2
    return None


def consistency_check(G, p=DEFAULT_PRIME):
    """Check every characterization theorem whose hypothesis G satisfies
    against the engine verdicts.  Returns a dict with per-theorem status
    and a list of violations; any violation is a hard failure upstream."""
    rec = classify(G, p)
    checks = {}
    violations = []

    def judge(name, hypothesis, ok):
        if not hypothesis:
            checks[name] = "skip"
        elif ok:
            checks[name] = "ok"
        else:
            checks[name] = "violation"
            violations.append(name)

    km = km_regularity_le2(G)
    judge("reg<=2-join-recursion", rec.reg is not None,
          (rec.reg > 2) if km == ">2" else (rec.reg == km))

    hi = recognize_Hi(G)
    judge("CM-reg2-is-Hi", rec.reg is not None,
          (hi is not None) == (rec.CM and rec.reg == 2))
    judge("reg2-CM-is-level", rec.CM and rec.reg == 2, rec.level)

    # the reg-3 characterization lives on indecomposable graphs: P_4 is
    # pseudo-Gorenstein of regularity 3 but splits into three edges
    gij = recognize_Gij(G)
    judge("pG-reg3-is-Gij", rec.reg is not None,
          (gij is not None) == (rec.CM and rec.reg == 3
                                and rec.pseudo_gorenstein
                                and rec.indecomposable))

    judge("P5free-CM-iff-accessible", is_pk_free(G, 5),
          rec.CM == rec.accessible)

    bip = is_bipartite(G)
    judge("bipartite-level-Fm-pieces", bip,
          rec.level == recognize_bipartite_level(G))
    judge("bipartite-pG-pinched-chains", bip,
          rec.pseudo_gorenstein == recognize_bipartite_pg(G))

    split = _cone_split(G)
    if split is not None:
        _, H1, H2 = split
        r1, r2 = classify(H1, p), classify(H2, p)
        judge("cone-CM-iff-pieces-CM", True,
              rec.CM == (r1.CM and r2.CM))
        judge("cone-level-iff-reg2", rec.CM and rec.reg is not None,
              rec.level == (rec.reg == 2))
        judge("cone-pG-from-pieces",
              rec.CM and rec.reg is not None and rec.reg > 2,
              rec.pseudo_gorenstein ==
              (r1.pseudo_gorenstein and r2.pseudo_gorenstein))
    else:
        checks["cone-CM-iff-pieces-CM"] = "skip"
        checks["cone-level-iff-reg2"] = "skip"
        checks["cone-pG-from-pieces"] = "skip"

    judge("gorenstein-iff-path", True, rec.gorenstein == is_path(G))
    judge("level-and-pG-implies-path", rec.level and rec.pseudo_gorenstein,
          is_path(G))

    return {"graph6": rec.graph6, "checks": checks,
            "violations": violations, "record": rec.to_dict()}
