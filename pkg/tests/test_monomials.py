import random

from hypothesis import given, settings, strategies as st

from beilab.monomials import (MonomialIdeal, SimplicialComplex, add_ideals,
                              colon, equal, intersect, minimal_primes,
                              minimal_primes_by_faces, stanley_reisner,
                              var_name, xvar, yvar)


def ideal(nvars, *gens):
    return MonomialIdeal.make(nvars, [sum(1 << b for b in g) for g in gens])


masks = st.lists(st.integers(min_value=1, max_value=(1 << 8) - 1),
                 min_size=0, max_size=8)


def test_variable_indexing():
    n = 3
    assert [var_name(xvar(i, n), n) for i in (1, 2, 3)] == ["x1", "x2", "x3"]
    assert [var_name(yvar(i, n), n) for i in (1, 2, 3)] == ["y1", "y2", "y3"]


def test_make_minimalizes_to_antichain():
    i = ideal(4, {0}, {0, 1}, {2, 3}, {2, 3})
    assert i.gens == (0b0001, 0b1100)


def test_zero_and_unit():
    assert ideal(3).is_zero()
    assert ideal(3, set()).is_unit()
    assert not ideal(3, {0}).is_unit()


def test_contains():
    i = ideal(4, {0, 1})
    assert i.contains(0b0011) and i.contains(0b1011)
    assert not i.contains(0b0001)


def test_to_text():
    j = MonomialIdeal.make(4, [0b0101, 0b1010])
    assert j.to_text() == "x1*y1\nx2*y2"


@settings(max_examples=100, deadline=None)
@given(masks, st.integers(min_value=0, max_value=(1 << 8) - 1))
def test_colon_is_membership_quotient(gens, m):
    i = MonomialIdeal.make(8, gens)
    q = colon(i, m)
    # brute-force over all square-free monomials in 8 vars
    for u in range(1 << 8):
        assert q.contains(u) == i.contains(u | m)


@settings(max_examples=60, deadline=None)
@given(masks, masks)
def test_sum_and_intersection_membership(ga, gb):
    a = MonomialIdeal.make(8, ga)
    b = MonomialIdeal.make(8, gb)
    s = add_ideals(a, b)
    t = intersect(a, b)
    for u in range(1 << 8):
        assert s.contains(u) == (a.contains(u) or b.contains(u))
        assert t.contains(u) == (a.contains(u) and b.contains(u))


def test_minimal_primes_example():
    # complete intersection-free example frozen from the face-based oracle
    i = MonomialIdeal.make(4, [0b0011, 0b1100, 0b0101])
    assert set(minimal_primes(i)) == set(minimal_primes_by_faces(i))


@settings(max_examples=80, deadline=None)
@given(masks)
def test_minimal_primes_match_face_oracle(gens):
    i = MonomialIdeal.make(8, gens)
    assert set(minimal_primes(i)) == set(minimal_primes_by_faces(i))


@settings(max_examples=80, deadline=None)
@given(masks)
def test_intersection_of_minimal_primes_recovers_radical(gens):
    i = MonomialIdeal.make(8, gens)
    primes = minimal_primes(i)
    if not primes:
        assert i.is_zero()
        return
    acc = MonomialIdeal.make(8, [0])   # unit ideal as intersection identity
    for p in primes:
        acc = intersect(acc, MonomialIdeal.make(
            8, [1 << b for b in range(8) if p >> b & 1]))
    assert equal(acc, i)


def test_stanley_reisner_conventions():
    # unit ideal -> void complex; <all vars> -> irrelevant complex
    assert stanley_reisner(ideal(3, set())).facets == ()
    allvars = MonomialIdeal.make(3, [1, 2, 4])
    cx = stanley_reisner(allvars)
    assert cx.facets == (0,) and cx.dim() == -1
    # zero ideal -> full simplex
    assert stanley_reisner(ideal(3)).facets == (0b111,)


def test_stanley_reisner_faces_are_nonfaces_complement():
    rng = random.Random(7)
    for _ in range(50):
        gens = [rng.randrange(1, 1 << 6) for _ in range(rng.randrange(5))]
        i = MonomialIdeal.make(6, gens)
        cx = stanley_reisner(i)
        faces = set(cx.faces()) if not cx.is_void() else set()
        for u in range(1 << 6):
            assert (u in faces) == (not i.contains(u))


def test_complex_link_and_restrict():
    # hollow triangle
    cx = SimplicialComplex.make(3, [0b011, 0b101, 0b110])
    assert cx.dim() == 1
    lk = cx.link(0b001)
    assert set(lk.facets) == {0b010, 0b100}
    r = cx.restrict(0b011)
    assert r.facets == (0b011,)
