"""Combinatorics of the binomial edge ideal via its square-free initial ideal.

Everything here works with the lexicographic order x_1 > ... > x_n > y_1 >
... > y_n, under which the initial ideal is generated by the monomials of
admissible paths. The binomials themselves are never materialized.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import monomials as mono
from .cutsets import Cutset, component_count, enumerate_cutsets, is_cutset
from .graphs import Graph, connected_components, decompose_at, saturate

DEFAULT_PATH_CAP = 14


@dataclass(frozen=True)
class AdmissiblePath:
    vertices: tuple  # i_0, ..., i_r with i_0 < i_r

    @property
    def i(self):
        return self.vertices[0]

    @property
    def j(self):
        return self.vertices[-1]


@dataclass(frozen=True)
class PrimeComponentBinomial:
    """Combinatorial descriptor of the minimal prime attached to a cutset."""

    cutset: Cutset
    components: tuple  # vertex sets of G minus T
    height: int


@dataclass(frozen=True)
class PrimeComponentInitial:
    """A variable-generated associated prime of the initial ideal."""

    cutset: Cutset
    choice: tuple      # one vertex per component, in component order
    mask: int          # generating variables in the 2n universe

    def size(self):
        return bin(self.mask).count("1")


def _adjacency_on(g, vertices, extra_edges=()):
    """Neighbor dict restricted to the vertex subset, plus extra edges."""
    vs = set(vertices)
    for e in extra_edges:
        vs.update(e)
    adj = {v: set() for v in vs}
    for i, j in g.edges:
        if i in vs and j in vs:
            adj[i].add(j)
            adj[j].add(i)
    for i, j in extra_edges:
        adj[i].add(j)
        adj[j].add(i)
    return adj


def _admissible_paths_adj(adj):
    """All admissible paths of the labeled graph given by a neighbor dict.

    A path i = i_0, ..., i_r = j with i < j is admissible when its interior
    vertices all lie below i or above j and the path is induced (which is
    exactly the paper-level no-induced-cycle condition on its vertex set).
    """
    out = []

    def grow(i, j, path, members):
        last = path[-1]
        for w in sorted(adj[last]):
            if w == j:
                if len(path) == 1 or all(w not in adj[u] for u in path[:-1]):
                    out.append(AdmissiblePath(tuple(path) + (j,)))
                continue
            if w in members or not (w < i or w > j):
                continue
            if any(w in adj[u] for u in path[:-1]):
                continue  # chord against the growing path
            path.append(w)
            members.add(w)
            grow(i, j, path, members)
            members.discard(w)
            path.pop()

    for i in sorted(adj):
        for j in sorted(adj):
            if i < j:
                grow(i, j, [i], {i})
    return out


def admissible_paths(g, cap=DEFAULT_PATH_CAP):
    if g.n > cap:
        raise ValueError(f"admissible-path enumeration capped at n={cap}")
    return _admissible_paths_adj(_adjacency_on(g, g.vertices()))


def path_monomial(path, n):
    """u_pi * x_i * y_j as a mask in the 2n universe."""
    i, j = path.i, path.j
    mask = (1 << mono.xvar(i, n)) | (1 << mono.yvar(j, n))
    for v in path.vertices[1:-1]:
        if v > j:
            mask |= 1 << mono.xvar(v, n)
        elif v < i:
            mask |= 1 << mono.yvar(v, n)
    return mask


def initial_ideal(g, nvars=None, cap=DEFAULT_PATH_CAP):
    """in(J_G) from the admissible paths of g. ``nvars`` lets the ideal be
    placed in a larger ambient universe whose first n positions are the x's
    of 1..n is NOT supported; the universe is always 2n for n = g.n unless
    an explicit (even) nvars >= 2*g.n embedding by index is requested via
    initial_ideal_on."""
    paths = admissible_paths(g, cap)
    n = g.n
    masks = [path_monomial(p, n) for p in paths]
    ideal = mono.MonomialIdeal.make(2 * n, masks)
    if len(ideal.gens) != len(masks):
        raise AssertionError("admissible-path generators should form an antichain")
    return ideal


def initial_ideal_on(g, vertices, n, extra_edges=(), saturate_at=None,
                     drop=()):
    """in(J_H) for a labeled subgraph H of g, in the ambient 2n universe.

    H is the induced subgraph on ``vertices`` (labels kept) plus any
    ``extra_edges``; optionally its neighborhood at ``saturate_at`` is
    completed first, and the vertices in ``drop`` deleted afterwards.
    Order-preserving labels make the admissible-path structure intrinsic.
    """
    adj = _adjacency_on(g, vertices, extra_edges)
    if saturate_at is not None:
        nb = sorted(adj[saturate_at])
        for a, b in itertools.combinations(nb, 2):
            adj[a].add(b)
            adj[b].add(a)
    for v in drop:
        for u in adj[v]:
            adj[u].discard(v)
        del adj[v]
    paths = _admissible_paths_adj(adj)
    masks = [path_monomial(p, n) for p in paths]
    return mono.MonomialIdeal.make(2 * n, masks)


def prime_PT(g, t):
    """Descriptor of the minimal prime of J_G attached to the cutset t."""
    t = frozenset(t)
    if not is_cutset(g, t):
        raise ValueError("not a cutset")
    comps = connected_components(g, t)
    return PrimeComponentBinomial(
        cutset=Cutset(t, len(comps)),
        components=tuple(comps),
        height=g.n + len(t) - len(comps))


def prime_PTv(g, t, choice):
    """The associated prime of in(J_G) for cutset t and component choices.

    ``choice`` picks one vertex per connected component of G - t (component
    order: by least vertex). Generators: x_i, y_i for i in t; then per
    component, x_i for i below the chosen vertex and y_j for j above it.
    """
    t = frozenset(t)
    comps = connected_components(g, t)
    if len(choice) != len(comps) or any(v not in c for v, c in zip(choice, comps)):
        raise ValueError("choice must pick one vertex from each component")
    n = g.n
    mask = 0
    for i in t:
        mask |= (1 << mono.xvar(i, n)) | (1 << mono.yvar(i, n))
    for vk, comp in zip(choice, comps):
        for i in comp:
            if i < vk:
                mask |= 1 << mono.xvar(i, n)
            elif i > vk:
                mask |= 1 << mono.yvar(i, n)
    return PrimeComponentInitial(Cutset(t, len(comps)), tuple(choice), mask)


def ass_initial(g, cap=DEFAULT_PATH_CAP, cutset_cap=None, check=True):
    """Ass(in(J_G)) = all P_T(v) over cutsets T and component choices v."""
    cuts = enumerate_cutsets(g, cutset_cap if cutset_cap is not None else max(g.n, 1))
    primes = []
    for t in cuts:
        comps = connected_components(g, t.vertices)
        for choice in itertools.product(*[sorted(c) for c in comps]):
            primes.append(prime_PTv(g, t.vertices, choice))
    if check:
        for p in primes:
            expected = g.n + len(p.cutset) - p.cutset.c
            if p.size() != expected:
                raise AssertionError("height formula violated for a P_T(v)")
        for a, b in itertools.combinations(primes, 2):
            if a.mask & b.mask in (a.mask, b.mask):
                raise AssertionError("P_T(v) containment found; Ass is wrong")
    return primes


def prime_ideal(p, nvars):
    bits = [b for b in range(nvars) if p.mask >> b & 1]
    return mono.MonomialIdeal.make(nvars, [1 << b for b in bits])


def verify_decomposition(g, cap=DEFAULT_PATH_CAP):
    """in(J_G) equals the intersection of all its associated primes."""
    nvars = 2 * g.n
    ini = initial_ideal(g, cap=cap)
    acc = mono.MonomialIdeal.make(nvars, (0,))  # unit ideal
    for p in ass_initial(g, cap):
        acc = mono.intersect(acc, prime_ideal(p, nvars))
    return mono.equal(ini, acc)


def _relabel_last(g, v):
    """Order-preserving-ish relabeling with v -> n and N(v) -> n-1..n-r."""
    nb = sorted(g.neighbors(v))
    rest = sorted(u for u in g.vertices() if u != v and u not in nb)
    order = rest + nb + [v]
    mapping = [0] * g.n
    for new, old in enumerate(order, start=1):
        mapping[old - 1] = new
    from .graphs import Relabeling, relabel
    return relabel(g, Relabeling(tuple(mapping)))


def colon_saturation_identity(g, v, cap=DEFAULT_PATH_CAP):
    """(in(J_G) : x_n) = in(J_{G_n}) after relabeling v to n."""
    gp = _relabel_last(g, v)
    n = gp.n
    lhs = mono.colon(initial_ideal(gp, cap=cap), 1 << mono.xvar(n, n))
    rhs = initial_ideal(saturate(gp, n), cap=cap)
    return mono.equal(lhs, rhs)


# ---------------------------------------------------------------------------
# the eleven labeling identities of a two-sided split

@dataclass(frozen=True)
class SetupReport:
    m: int
    results: dict          # index 1..11 -> "ok" | "fail" | "skip"
    memberships_ok: bool   # stated generator memberships of I_1'', I_2''

    def all_hold(self):
        return self.memberships_ok and all(v in ("ok", "skip")
                                           for v in self.results.values())


def setup_identities(g, v, cap=DEFAULT_PATH_CAP):
    """Check the eleven colon/sum identities of the two-block labeling.

    The graph is split and relabeled at the cut vertex v; both sides of
    every identity are materialized independently (graph constructions on
    the right, ideal arithmetic on the left).
    """
    dec = decompose_at(g, v)
    if dec == "NOT_A_CUT_VERTEX" or isinstance(dec, str):
        raise ValueError(f"{v} is not a cut vertex")
    gp, m, n = dec.graph, dec.m, g.n
    nvars = 2 * n
    xm = 1 << mono.xvar(m, n)
    ym = 1 << mono.yvar(m, n)
    side1 = range(1, m + 1)
    side2 = range(m, n + 1)
    r = sum(1 for u in gp.neighbors(m) if u < m)
    s = sum(1 for u in gp.neighbors(m) if u > m)

    ii = initial_ideal_on(gp, gp.vertices(), n)
    in_g1 = initial_ideal_on(gp, side1, n)
    in_g2 = initial_ideal_on(gp, side2, n)
    # whiskered sides: tips are m+1 (side one) and m-1 (side two)
    i1 = initial_ideal_on(gp, side1, n, extra_edges=[(m, m + 1)])
    i2 = initial_ideal_on(gp, side2, n, extra_edges=[(m - 1, m)])
    j1 = initial_ideal_on(gp, range(1, m), n)
    j2 = initial_ideal_on(gp, range(m + 1, n + 1), n)
    in_g1m = initial_ideal_on(gp, side1, n, saturate_at=m)
    in_g2m = initial_ideal_on(gp, side2, n, saturate_at=m)
    in_g2m_minus = initial_ideal_on(gp, side2, n, saturate_at=m, drop=[m])

    a1_vars = _var_mask(range(1, m), n)
    a2_vars = _var_mask(range(m + 1, n + 1), n)

    res = {}
    eq = mono.equal

    res[1] = _verdict(set(ii.gens) == set(in_g1.gens) | set(in_g2.gens))

    i1p = mono.MonomialIdeal.make(nvars, (gm for gm in i1.gens if not gm & xm))
    ok2 = eq(mono.add_variables(i1p, _bits(xm)), mono.add_variables(i1, _bits(xm)))
    ok2 &= _supported(i1p, a1_vars | ym)
    res[2] = _verdict(ok2)

    ym1 = 1 << mono.yvar(m + 1, n)
    res[3] = _verdict(eq(mono.colon(i1, xm),
                         mono.add_variables(in_g1m, _bits(ym1))))

    c4 = mono.colon(mono.add_variables(i1, _bits(xm)), ym)
    i1pp = mono.MonomialIdeal.make(nvars, (gm for gm in c4.gens if not gm & xm))
    ok4 = eq(c4, mono.add_variables(i1pp, _bits(xm)))
    ok4 &= _supported(i1pp, a1_vars)
    res[4] = _verdict(ok4)
    member1 = all(i1pp.contains(1 << mono.xvar(m - k, n)) for k in range(1, r + 1))

    res[5] = _verdict(eq(mono.add_variables(i1, _bits(xm | ym)),
                         mono.add_variables(j1, _bits(xm | ym))))

    i2p = mono.MonomialIdeal.make(nvars, (gm for gm in i2.gens if not gm & xm))
    xm_1 = 1 << mono.xvar(m - 1, n)
    ok6 = eq(mono.add_variables(i2p, _bits(xm)), mono.add_variables(i2, _bits(xm)))
    ok6 &= _supported(i2p, a2_vars | xm_1 | ym)
    res[6] = _verdict(ok6)

    c7 = mono.colon(i2, xm)
    i2pp = mono.MonomialIdeal.make(
        nvars, (gm for gm in c7.gens if gm != (xm_1 | ym)))
    ok7 = eq(c7, mono.MonomialIdeal.make(nvars, i2pp.gens + (xm_1 | ym,)))
    ok7 &= _supported(i2pp, a2_vars)
    res[7] = _verdict(ok7)
    member2 = all(i2pp.contains(1 << mono.yvar(m + k, n)) for k in range(1, s + 1))

    res[8] = _verdict(eq(mono.colon(mono.add_variables(i2, _bits(xm)), ym),
                         mono.add_variables(in_g2m_minus, _bits(xm_1 | xm))))

    res[9] = _verdict(eq(mono.add_variables(i2, _bits(xm | ym)),
                         mono.add_variables(j2, _bits(xm | ym))))

    res[10] = _verdict(eq(mono.colon(ii, ym), mono.add_ideals(i1pp, in_g2m)))
    res[11] = _verdict(eq(mono.colon(ii, xm), mono.add_ideals(i2pp, in_g1m)))

    return SetupReport(m=m, results=res, memberships_ok=member1 and member2)


def _verdict(ok):
    return "ok" if ok else "fail"


def _bits(mask):
    return [b for b in range(mask.bit_length()) if mask >> b & 1]


def _var_mask(vertices, n):
    mask = 0
    for i in vertices:
        mask |= (1 << mono.xvar(i, n)) | (1 << mono.yvar(i, n))
    return mask


def _supported(ideal, allowed):
    return all(gm & ~allowed == 0 for gm in ideal.gens)
