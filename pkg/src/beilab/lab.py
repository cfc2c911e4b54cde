"""High-level decisions and one verifier per theorem-shaped statement.

The verifiers deliberately keep the hypothesis side and the conclusion
side on independent computation paths: unmixedness always goes through the
cutset lattice, Cohen-Macaulayness through initial ideals and homology.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from . import cutsets as cs
from . import monomials as mono
from .binomial_edge import initial_ideal, ass_initial
from .graphs import (Graph, add_whisker, blocks, block_with_whiskers,
                     connected_components, cut_vertices, decompose_at,
                     delete_vertices, emit_graph6, girth, glue_at,
                     induced_cycle_lengths, is_connected, is_free_vertex,
                     saturate, INFINITY)
from .homology import (QQ, CMCertificate, DepthResult, FieldSpec,
                       hochster_depth, reisner_cm,
                       DEFAULT_FACE_BUDGET, DEFAULT_LATTICE_BUDGET)


@dataclass(frozen=True)
class AnalysisReport:
    graph6: str
    n: int
    girth: object                 # int or INFINITY
    blocks: tuple
    cut_vertices: tuple
    cutset_count: int
    unmixed: bool
    unmixed_witness: tuple | None
    accessible: bool
    accessible_witness: tuple | None
    cm: bool | None               # None = indeterminate
    cm_witness: tuple | None
    field_char: int
    depth: int | None
    dim: int

    def consistency_violations(self):
        """CM implies accessible implies-unmixed sanity flags (engine bugs)."""
        out = []
        if self.cm and not self.unmixed:
            out.append("cm-but-not-unmixed")
        if self.cm and not self.accessible:
            out.append("cm-but-not-accessible")
        if self.accessible and not self.unmixed:
            out.append("accessible-but-not-unmixed")
        return out


@dataclass(frozen=True)
class TheoremVerdict:
    theorem_id: str
    corpus: str
    instances: int
    violations: tuple = ()             # (graph6, detail) pairs
    hypothesis_relevant: tuple = ()    # candidate counterexamples to the open
                                       # hypothesis, not engine failures
    findings: tuple = ()               # search outputs (expected empty)

    def clean(self):
        return not self.violations

    def to_json(self):
        return json.dumps({
            "theorem": self.theorem_id,
            "corpus": self.corpus,
            "instances": self.instances,
            "violations": list(self.violations),
            "hypothesis_relevant": list(self.hypothesis_relevant),
            "findings": list(self.findings),
        }, sort_keys=True, separators=(",", ":"))


def cm_check(g, field=QQ, face_budget=DEFAULT_FACE_BUDGET,
             use_filters=True):
    """Cohen-Macaulayness of the binomial edge ideal, decided on the
    square-free initial ideal through the Reisner criterion.

    Pre-filters: not unmixed => not CM (cutset witness); not accessible =>
    not CM (known necessity; disable with use_filters=False to force the
    homological route).
    """
    if use_filters:
        cuts = cs.enumerate_cutsets(g)
        unm = cs.is_unmixed(g, cutsets=cuts)
        if not unm.unmixed:
            w = unm.witness
            return CMCertificate(False, field,
                                 witness=("unmixedness", tuple(sorted(w.vertices)), w.c))
        acc = cs.is_accessible(g, cutsets=cuts)
        if not acc.accessible:
            return CMCertificate(False, field,
                                 witness=("accessibility",
                                          tuple(sorted(acc.witness.vertices))))
    cx = mono.stanley_reisner(initial_ideal(g))
    return reisner_cm(cx, field, face_budget)


def dim_JG(g):
    """Krull dimension of the quotient: n + max over cutsets of c(T)-|T|."""
    return cs.is_unmixed(g).dim


def depth_JG(g, field=QQ, budget=DEFAULT_LATTICE_BUDGET):
    """Depth of the quotient by J_G, via depth of its initial ideal."""
    return hochster_depth(initial_ideal(g), field, budget)


def analyze(g, field=QQ, with_depth=True,
            face_budget=DEFAULT_FACE_BUDGET,
            lattice_budget=DEFAULT_LATTICE_BUDGET):
    cuts = cs.enumerate_cutsets(g)
    unm = cs.is_unmixed(g, cutsets=cuts)
    acc = cs.is_accessible(g, cutsets=cuts)
    cert = cm_check(g, field, face_budget)
    depth = None
    if with_depth:
        dr = depth_JG(g, field, lattice_budget)
        depth = None if dr.indeterminate else dr.depth
    bd = blocks(g) if is_connected(g) and g.n else None
    return AnalysisReport(
        graph6=emit_graph6(g),
        n=g.n,
        girth=girth(g),
        blocks=tuple(tuple(sorted(b)) for b in bd.blocks) if bd else (),
        cut_vertices=tuple(sorted(cut_vertices(g))),
        cutset_count=len(cuts),
        unmixed=unm.unmixed,
        unmixed_witness=(tuple(sorted(unm.witness.vertices))
                         if unm.witness else None),
        accessible=acc.accessible,
        accessible_witness=(tuple(sorted(acc.witness.vertices))
                            if acc.witness else None),
        cm=None if cert.indeterminate else cert.is_cm,
        cm_witness=cert.witness,
        field_char=field.characteristic,
        depth=depth,
        dim=unm.dim)


def report_json(rep):
    """Stable JSON encoding of an AnalysisReport."""
    data = {
        "graph": rep.graph6,
        "n": rep.n,
        "girth": "inf" if rep.girth == INFINITY else rep.girth,
        "unmixed": rep.unmixed,
        "accessible": rep.accessible,
        "cm": rep.cm,
        "field": rep.field_char,
        "depth": rep.depth,
        "dim": rep.dim,
        "witnesses": {
            "unmixed": list(rep.unmixed_witness) if rep.unmixed_witness else None,
            "accessible": (list(rep.accessible_witness)
                           if rep.accessible_witness else None),
            "cm": _jsonable(rep.cm_witness),
        },
    }
    if rep.cm is None or rep.depth is None:
        data["budget"] = "exceeded"
    return json.dumps(data, sort_keys=True, separators=(",", ":"))


def _jsonable(x):
    if isinstance(x, tuple):
        return [_jsonable(v) for v in x]
    return x


# ---------------------------------------------------------------------------
# theorem verifiers

def _two_sided_splits(g):
    """(v, g1, g2) for every cut vertex v, with the two sides as graphs
    carrying v as their largest/smallest label respectively."""
    out = []
    for v in sorted(cut_vertices(g)):
        dec = decompose_at(g, v)
        if isinstance(dec, str):
            continue
        out.append((v, dec))
    return out


def verify_prop_saturation(corpus, field=QQ, corpus_name=""):
    """CM(J_G) implies CM(J_{G_v}) for every vertex v."""
    violations = []
    count = 0
    for g in corpus:
        if not cm_check(g, field).is_cm:
            continue
        for v in g.vertices():
            count += 1
            if not cm_check(saturate(g, v), field).is_cm:
                violations.append((emit_graph6(g), f"v={v}"))
    return TheoremVerdict("saturation", corpus_name, count, tuple(violations))


def verify_deletion_lemmas(corpus, field=QQ, corpus_name=""):
    """The deletion-family implications at a cut vertex.

    For each split G = G1 u G2 at v:
      - unmixed(G) and v non-free on both sides => unmixed(G - v);
      - CM(G) and v non-free on both sides => CM(G - v), CM(G_v),
        CM(G_v - v);
      - CM(G) => CM((G1)_v) and CM((G2)_v);
      - CM(G) and CM(G - v) => CM(G_v - v).
    Plus, for non-cut vertices: unmixed(G_v) and unmixed(G - v) =>
    unmixed(G_v - v).
    """
    violations = []
    count = 0
    for g in corpus:
        g6 = emit_graph6(g)
        g_unmixed = cs.is_unmixed(g).unmixed
        g_cm = cm_check(g, field).is_cm if g_unmixed else False
        for v, dec in _two_sided_splits(g):
            count += 1
            m = dec.m
            gp = dec.graph
            g1, g2 = dec.g1(), dec.g2()
            free1 = is_free_vertex(g1, m)
            free2 = is_free_vertex(g2, 1)
            del_v, _ = delete_vertices(g, [v])
            if g_unmixed and not free1 and not free2:
                if not cs.is_unmixed(del_v).unmixed:
                    violations.append((g6, f"lem-deletion-unmixed v={v}"))
            if g_cm:
                if not free1 and not free2:
                    if not cm_check(del_v, field).is_cm:
                        violations.append((g6, f"lem-deletion-cm v={v}"))
                    gv = saturate(g, v)
                    if not cm_check(gv, field).is_cm:
                        violations.append((g6, f"cor-saturation-cm v={v}"))
                    gv_del, _ = delete_vertices(gv, [v])
                    if not cm_check(gv_del, field).is_cm:
                        violations.append((g6, f"cor-sat-deletion-cm v={v}"))
                # CM of both sides' saturations, unconditionally under CM(G)
                if not cm_check(saturate(g1, m), field).is_cm:
                    violations.append((g6, f"prop-side-saturation g1 v={v}"))
                if not cm_check(saturate(g2, 1), field).is_cm:
                    violations.append((g6, f"prop-side-saturation g2 v={v}"))
                if cm_check(del_v, field).is_cm:
                    gv_del, _ = delete_vertices(saturate(g, v), [v])
                    if not cm_check(gv_del, field).is_cm:
                        violations.append((g6, f"prop-sat-del-cm v={v}"))
        # non-cut-vertex unmixedness transfer
        for v in g.vertices():
            if v in cut_vertices(g) or g.degree(v) == 0:
                continue
            count += 1
            gv = saturate(g, v)
            del_v, _ = delete_vertices(g, [v])
            if cs.is_unmixed(gv).unmixed and cs.is_unmixed(del_v).unmixed:
                gv_del, _ = delete_vertices(gv, [v])
                if not cs.is_unmixed(gv_del).unmixed:
                    violations.append((g6, f"lem-sat-del-unmixed v={v}"))
    return TheoremVerdict("deletion", corpus_name, count, tuple(violations))


def whiskered_sides(g, v):
    """(side1 + whisker at v, side2 + whisker at v) for the split at v."""
    dec = decompose_at(g, v)
    if isinstance(dec, str):
        raise ValueError(f"{v} is not a cut vertex")
    g1, g2 = dec.g1(), dec.g2()
    return add_whisker(g1, dec.m), add_whisker(g2, 1)


def verify_gluing_theorems(corpus, field=QQ, corpus_name="",
                           check_converse=True):
    """Whisker gluing: forward direction plus the conditional converse.

    Forward (unconditional): CM(G) => both whiskered sides CM at every cut
    vertex, and every block-with-whiskers CM. Converse (conditional on the
    open hypothesis): both whiskered sides CM and unmixed(G) => CM(G);
    failures of the converse are reported as hypothesis-relevant, never as
    violations.
    """
    violations = []
    hypo = []
    count = 0
    for g in corpus:
        g6 = emit_graph6(g)
        cuts = sorted(cut_vertices(g))
        if not cuts:
            continue
        g_cm = cm_check(g, field).is_cm
        for v in cuts:
            count += 1
            w1, w2 = whiskered_sides(g, v)
            sides_cm = (cm_check(w1, field).is_cm and
                        cm_check(w2, field).is_cm)
            if g_cm and not sides_cm:
                violations.append((g6, f"forward-whisker v={v}"))
            if check_converse and sides_cm and cs.is_unmixed(g).unmixed:
                if not g_cm:
                    hypo.append((g6, f"converse-whisker v={v}"))
        if g_cm:
            bd = blocks(g)
            for b in bd.blocks:
                count += 1
                bw = block_with_whiskers(g, b, bd.cut_vertices & b)
                if not cm_check(bw, field).is_cm:
                    violations.append((g6, f"block-whiskers B={sorted(b)}"))
    return TheoremVerdict("gluing", corpus_name, count, tuple(violations),
                          hypothesis_relevant=tuple(hypo))


def verify_blocks_corollary(corpus, field=QQ, corpus_name=""):
    """Converse blocks corollary: unmixed(G) and all blocks-with-whiskers CM
    => CM(G); conditional, so failures are hypothesis-relevant."""
    hypo = []
    count = 0
    for g in corpus:
        if not cs.is_unmixed(g).unmixed:
            continue
        bd = blocks(g)
        if not bd.cut_vertices:
            continue
        count += 1
        if all(cm_check(block_with_whiskers(g, b, bd.cut_vertices & b),
                        field).is_cm for b in bd.blocks):
            if not cm_check(g, field).is_cm:
                hypo.append((emit_graph6(g), "blocks-converse"))
    return TheoremVerdict("blocks", corpus_name, count, (),
                          hypothesis_relevant=tuple(hypo))


def verify_girth_theorem(corpus, field=QQ, corpus_name=""):
    """Every CM graph, and every accessible graph, has girth in {3,4,inf}."""
    violations = []
    count = 0
    for g in corpus:
        count += 1
        gi = girth(g)
        ok = gi in (3, 4, INFINITY)
        if cs.is_accessible(g).accessible and not ok:
            violations.append((emit_graph6(g), f"accessible-girth={gi}"))
        if cm_check(g, field).is_cm and not ok:
            violations.append((emit_graph6(g), f"cm-girth={gi}"))
    return TheoremVerdict("girth", corpus_name, count, tuple(violations))


def glue_pairs_cm(g, v, h, w, field=QQ):
    """The four cross-gluings of the sides of (g, v) and (h, w); returns
    list of (label, graph, cm)."""
    dg = decompose_at(g, v)
    dh = decompose_at(h, w)
    if isinstance(dg, str) or isinstance(dh, str):
        raise ValueError("both vertices must be cut vertices")
    gsides = [(1, dg.g1(), dg.m), (2, dg.g2(), 1)]
    hsides = [(1, dh.g1(), dh.m), (2, dh.g2(), 1)]
    out = []
    for i, gi, gv in gsides:
        for j, hj, hv in hsides:
            f = glue_at(gi, gv, hj, hv)
            out.append((f"F{i}{j}", f, cm_check(f, field).is_cm))
    return out


def verify_identification(corpus_pairs, field=QQ, corpus_name=""):
    """Composite gluing corollary: for CM graphs G, H with cut vertices v, w
    whose deletions are unmixed, every cross-gluing F_ij is CM (conditional
    => hypothesis-relevant on failure)."""
    hypo = []
    count = 0
    for (g, v), (h, w) in corpus_pairs:
        if not (cm_check(g, field).is_cm and cm_check(h, field).is_cm):
            continue
        dgv, _ = delete_vertices(g, [v])
        dhw, _ = delete_vertices(h, [w])
        if not (cs.is_unmixed(dgv).unmixed and cs.is_unmixed(dhw).unmixed):
            continue
        count += 1
        for label, f, is_cm in glue_pairs_cm(g, v, h, w, field):
            if not is_cm:
                hypo.append((emit_graph6(f), f"{label} not CM"))
    return TheoremVerdict("identification", corpus_name, count, (),
                          hypothesis_relevant=tuple(hypo))


def hypothesis_search(corpus, field=QQ, corpus_name="",
                      girth4_scan=True):
    """Scan for counterexamples to the open deletion hypothesis and for CM
    girth-4 graphs carrying a long induced cycle. Findings are search
    outputs; an empty result is the expected (reportable) outcome."""
    findings = []
    count = 0
    for g in corpus:
        g6 = emit_graph6(g)
        cm_g = None
        for v in sorted(cut_vertices(g)):
            count += 1
            del_v, _ = delete_vertices(g, [v])
            if not cs.is_unmixed(del_v).unmixed:
                continue
            if cm_g is None:
                cm_g = cm_check(g, field).is_cm
            if cm_g and not cm_check(del_v, field).is_cm:
                findings.append((g6, f"hypothesis-counterexample v={v}"))
        if girth4_scan and girth(g) == 4:
            count += 1
            if any(l >= 5 for l in induced_cycle_lengths(g)):
                if cm_check(g, field).is_cm:
                    findings.append((g6, "cm-girth4-long-induced-cycle"))
    return TheoremVerdict("hypothesis", corpus_name, count, (),
                          findings=tuple(findings))


@dataclass(frozen=True)
class DepthEqualityRecord:
    lhs: int | None
    rhs: int | None
    equal: bool | None     # None = indeterminate


def depth_equality_check(g, v, field=QQ, budget=DEFAULT_LATTICE_BUDGET):
    """depth(S/J_G) versus depth of the two whiskered sides minus four."""
    w1, w2 = whiskered_sides(g, v)
    parts = [depth_JG(x, field, budget) for x in (g, w1, w2)]
    if any(p.indeterminate for p in parts):
        return DepthEqualityRecord(None, None, None)
    lhs = parts[0].depth
    rhs = parts[1].depth + parts[2].depth - 4
    return DepthEqualityRecord(lhs, rhs, lhs == rhs)


def neighborhood_cutset_exists(g, v):
    """Does G minus v admit a cutset containing every neighbor of v?"""
    nb = g.neighbors(v)
    gv, new_of = delete_vertices(g, [v])
    target = frozenset(new_of[u] for u in nb)
    return any(target <= t.vertices for t in cs.enumerate_cutsets(gv))


@dataclass(frozen=True)
class DepthQuestionFilter:
    side1_has_cutset: bool
    side2_has_cutset: bool
    v_free_in_side1: bool
    v_free_in_side2: bool

    @property
    def satisfied(self):
        ok1 = (not self.side1_has_cutset) or self.v_free_in_side2
        ok2 = (not self.side2_has_cutset) or self.v_free_in_side1
        return ok1 and ok2


def depth_question_filter(g, v):
    """Filter for the open depth question at the cut vertex v.

    Condition (i): a cutset of side one minus v containing the neighbors of
    v there forces v free on side two; (ii) is the mirror. No verdict about
    the depth equality is asserted here; this only selects candidates.
    """
    dec = decompose_at(g, v)
    if isinstance(dec, str):
        raise ValueError(f"{v} is not a cut vertex")
    g1, g2 = dec.g1(), dec.g2()
    return DepthQuestionFilter(
        side1_has_cutset=neighborhood_cutset_exists(g1, dec.m),
        side2_has_cutset=neighborhood_cutset_exists(g2, 1),
        v_free_in_side1=is_free_vertex(g1, dec.m),
        v_free_in_side2=is_free_vertex(g2, 1),
    )


def verify_depth_equality(corpus, field=QQ, corpus_name="",
                          budget=DEFAULT_LATTICE_BUDGET):
    """Survey the additive depth formula at every cut vertex. The equality
    is known to fail in general, so inequalities are findings, not
    violations; indeterminate (budget) outcomes are findings too."""
    findings = []
    count = 0
    for g in corpus:
        g6 = emit_graph6(g)
        for v in sorted(cut_vertices(g)):
            if isinstance(decompose_at(g, v), str):
                continue
            count += 1
            rec = depth_equality_check(g, v, field, budget)
            if rec.equal is None:
                findings.append((g6, f"v={v} indeterminate"))
            elif not rec.equal:
                findings.append((g6, f"v={v} lhs={rec.lhs} rhs={rec.rhs}"))
    return TheoremVerdict("depth-equality", corpus_name, count, (),
                          findings=tuple(findings))


VERIFIERS = {
    "saturation": verify_prop_saturation,
    "deletion": verify_deletion_lemmas,
    "gluing": verify_gluing_theorems,
    "blocks": verify_blocks_corollary,
    "girth": verify_girth_theorem,
    "hypothesis": hypothesis_search,
    "depth-equality": verify_depth_equality,
}
