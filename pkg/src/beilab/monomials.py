"""Exact square-free monomial-ideal arithmetic over a fixed variable universe.

A monomial is a bit mask over the universe; an ideal is the divisibility
antichain of its minimal generators, canonically sorted. For a graph on n
vertices the universe has 2n variables: bit i-1 is x_i, bit n+i-1 is y_i.
"""

from __future__ import annotations

from dataclasses import dataclass


def xvar(i, n):
    """Bit position of x_i in the 2n-variable universe."""
    return i - 1


def yvar(i, n):
    return n + i - 1


def var_name(bit, n):
    return f"x{bit + 1}" if bit < n else f"y{bit - n + 1}"


def mask_name(mask, n):
    bits = [b for b in range(2 * n) if mask >> b & 1]
    return "*".join(var_name(b, n) for b in bits) if bits else "1"


def _minimalize_masks(masks):
    """Divisibility antichain of a set of square-free monomial masks."""
    masks = sorted(set(masks))
    out = []
    for m in masks:
        if not any(k & m == k for k in out):
            out.append(m)
    return tuple(sorted(out))


@dataclass(frozen=True)
class MonomialIdeal:
    """Square-free monomial ideal with canonical minimal generators."""

    nvars: int
    gens: tuple  # sorted antichain of masks

    @staticmethod
    def make(nvars, masks):
        masks = list(masks)
        for m in masks:
            if m >> nvars:
                raise ValueError("generator outside the variable universe")
        return MonomialIdeal(nvars, _minimalize_masks(masks))

    def is_zero(self):
        return not self.gens

    def is_unit(self):
        return self.gens == (0,)

    def contains(self, mask):
        return any(g & mask == g for g in self.gens)

    def to_text(self, n=None):
        """One generator per line as sorted variable names ('x1*y2')."""
        n = n if n is not None else self.nvars // 2
        return "\n".join(mask_name(g, n) for g in self.gens)


def minimalize(nvars, masks):
    return MonomialIdeal.make(nvars, masks)


def colon(ideal, mask):
    """(I : m) for a square-free monomial m."""
    return MonomialIdeal.make(ideal.nvars, (g & ~mask for g in ideal.gens))


def add_variables(ideal, bits):
    """I + <v : v in bits> where bits are variable positions."""
    extra = [1 << b for b in bits]
    return MonomialIdeal.make(ideal.nvars, list(ideal.gens) + extra)


def add_ideals(a, b):
    if a.nvars != b.nvars:
        raise ValueError("mixed universes")
    return MonomialIdeal.make(a.nvars, a.gens + b.gens)


def intersect(a, b):
    """I ∩ J by pairwise lcm (bitwise or) then minimalization."""
    if a.nvars != b.nvars:
        raise ValueError("mixed universes")
    if a.is_zero() or b.is_zero():
        return MonomialIdeal.make(a.nvars, ())
    return MonomialIdeal.make(a.nvars, (g | h for g in a.gens for h in b.gens))


def equal(a, b):
    return a.nvars == b.nvars and a.gens == b.gens


def minimal_primes(ideal):
    """Inclusion-minimal transversals of the generator supports.

    Returned as a sorted tuple of variable masks. Branch and bound on the
    generator list with absorption of dominated partial covers.
    """
    if ideal.is_unit():
        raise ValueError("unit ideal has no minimal primes")
    if ideal.is_zero():
        return ()
    gens = sorted(ideal.gens, key=lambda m: bin(m).count("1"))
    results = []

    def search(idx, cover):
        # prune: already covered by a recorded transversal's subset?
        for g_i in range(idx, len(gens)):
            if gens[g_i] & cover:
                continue
            g = gens[g_i]
            bits = [b for b in range(ideal.nvars) if g >> b & 1]
            for b in bits:
                search(g_i + 1, cover | (1 << b))
            return
        results.append(cover)

    search(0, 0)
    return tuple(sorted(_minimal_sets(results)))


def _minimal_sets(masks):
    masks = sorted(set(masks), key=lambda m: (bin(m).count("1"), m))
    out = []
    for m in masks:
        if not any(k & m == k for k in out):
            out.append(m)
    return out


@dataclass(frozen=True)
class SimplicialComplex:
    """Facet-represented complex on vertices 0..nverts-1 (bit positions).

    Conventions: ``facets == ()`` is the void complex (no faces at all);
    ``facets == (0,)`` is the irrelevant complex whose only face is the
    empty set.
    """

    nverts: int
    facets: tuple  # antichain of masks, sorted

    @staticmethod
    def make(nverts, masks):
        return SimplicialComplex(nverts, tuple(sorted(_maximal_sets(masks))))

    def is_void(self):
        return not self.facets

    def dim(self):
        if self.is_void():
            return None
        return max(bin(f).count("1") for f in self.facets) - 1

    def restrict(self, wmask):
        """Induced subcomplex on the vertex subset given by wmask."""
        if self.is_void():
            return self
        return SimplicialComplex.make(self.nverts,
                                      (f & wmask for f in self.facets))

    def link(self, sigma):
        fac = [f & ~sigma for f in self.facets if f & sigma == sigma]
        return SimplicialComplex.make(self.nverts, fac)

    def faces(self):
        """All faces as a set of masks (exponential; desk scale only)."""
        seen = set()
        frontier = set(self.facets)
        while frontier:
            seen |= frontier
            nxt = set()
            for f in frontier:
                b = f
                while b:
                    low = b & -b
                    nxt.add(f & ~low)
                    b &= b - 1
            frontier = nxt - seen
        return seen


def _maximal_sets(masks):
    masks = sorted(set(masks), key=lambda m: (-bin(m).count("1"), m))
    out = []
    for m in masks:
        if not any(m & k == m for k in out):
            out.append(m)
    return out


def stanley_reisner(ideal):
    """Stanley-Reisner complex of a proper square-free ideal.

    Facets are the complements of the minimal primes. The zero ideal gives
    the full simplex; the unit ideal gives the void complex.
    """
    full = (1 << ideal.nvars) - 1
    if ideal.is_unit():
        return SimplicialComplex(ideal.nvars, ())
    if ideal.is_zero():
        return SimplicialComplex(ideal.nvars, (full,))
    fac = [full & ~p for p in minimal_primes(ideal)]
    return SimplicialComplex.make(ideal.nvars, fac)


def minimal_primes_by_faces(ideal):
    """Independent recomputation of minimal primes via brute-force face
    enumeration (test oracle): complements of the maximal generator-free
    subsets of the universe."""
    full = (1 << ideal.nvars) - 1
    if ideal.is_zero():
        return ()
    sets = []
    for w in range(full + 1):
        if not any(g & w == g for g in ideal.gens):
            sets.append(w)
    return tuple(sorted(full & ~f for f in _maximal_sets(sets)))
