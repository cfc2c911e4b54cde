import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from beilab.binomial_edge import initial_ideal
from beilab.graphs import complete_graph, cycle_graph, path_graph
from beilab.homology import (FieldSpec, QQ, brute_depth_oracle,
                             depth_splitting_check, hochster_depth,
                             reduced_homology_ranks, reisner_cm)
from beilab.monomials import MonomialIdeal, SimplicialComplex, stanley_reisner


GF2 = FieldSpec(2)


def ideal(nvars, *gens):
    return MonomialIdeal.make(nvars, [sum(1 << b for b in g) for g in gens])


def test_field_spec_validation():
    FieldSpec(0)
    FieldSpec(32003)
    with pytest.raises(ValueError):
        FieldSpec(4)
    with pytest.raises(ValueError):
        FieldSpec(-1)


def test_homology_circle():
    # hollow triangle = circle: H~_1 = 1
    cx = SimplicialComplex.make(3, [0b011, 0b101, 0b110])
    assert reduced_homology_ranks(cx, QQ) == [0, 0, 1]


def test_homology_sphere_and_ball():
    # boundary of the 3-simplex = 2-sphere
    faces = [0b1110, 0b1101, 0b1011, 0b0111]
    cx = SimplicialComplex.make(4, faces)
    assert reduced_homology_ranks(cx, QQ) == [0, 0, 0, 1]
    # full simplex: contractible
    cx = SimplicialComplex.make(4, [0b1111])
    assert reduced_homology_ranks(cx, QQ) == [0, 0, 0, 0, 0]


def test_homology_two_points_and_irrelevant():
    cx = SimplicialComplex.make(2, [0b01, 0b10])
    assert reduced_homology_ranks(cx, QQ) == [0, 1]
    # irrelevant complex {empty face}: H~_{-1} = 1
    cx = SimplicialComplex.make(2, [0])
    assert reduced_homology_ranks(cx, QQ) == [1]


def test_homology_torus_triangulation():
    # 7-vertex torus (cyclic {i,i+1,i+3} and {i,i+2,i+3} mod 7):
    # H~_1 rank 2, H~_2 rank 1 over QQ
    tri = [tuple(sorted((i % 7 + 1, (i + 1) % 7 + 1, (i + 3) % 7 + 1)))
           for i in range(7)]
    tri += [tuple(sorted((i % 7 + 1, (i + 2) % 7 + 1, (i + 3) % 7 + 1)))
            for i in range(7)]
    facets = [sum(1 << (v - 1) for v in t) for t in tri]
    cx = SimplicialComplex.make(7, facets)
    assert reduced_homology_ranks(cx, QQ) == [0, 0, 2, 1]


def test_projective_plane_characteristic_dependence():
    # RP^2 on 6 vertices (antipodal icosahedron): torsion visible only
    # in characteristic 2
    tri = [(1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 2, 6), (1, 5, 6), (2, 3, 5),
           (2, 4, 5), (2, 4, 6), (3, 4, 6), (3, 5, 6)]
    facets = [sum(1 << (v - 1) for v in t) for t in tri]
    cx = SimplicialComplex.make(6, facets)
    assert reduced_homology_ranks(cx, QQ) == [0, 0, 0, 0]
    assert reduced_homology_ranks(cx, GF2) == [0, 0, 1, 1]


def test_reisner_small_examples():
    assert reisner_cm(stanley_reisner(initial_ideal(path_graph(3)))).is_cm
    assert reisner_cm(stanley_reisner(initial_ideal(complete_graph(3)))).is_cm
    assert not reisner_cm(stanley_reisner(initial_ideal(cycle_graph(4)))).is_cm
    c = reisner_cm(stanley_reisner(initial_ideal(cycle_graph(5))))
    assert not c.is_cm and c.witness is not None


def test_reisner_dim_le_0_always_cm():
    cx = SimplicialComplex.make(3, [0b001, 0b010, 0b100])
    assert reisner_cm(cx).is_cm
    assert reisner_cm(SimplicialComplex.make(2, [0])).is_cm


def test_depth_examples():
    assert hochster_depth(ideal(5, {0, 3})).depth == 4     # pd of a single
    # square-free monomial is 1, so depth = nvars - 1
    assert hochster_depth(MonomialIdeal.make(5, [])).depth == 5
    assert hochster_depth(MonomialIdeal.make(5, [1])).depth == 4
    assert hochster_depth(initial_ideal(complete_graph(3))).depth == 4
    assert hochster_depth(initial_ideal(cycle_graph(5))).depth == 5


def test_depth_matches_brute_oracle_random():
    rng = random.Random(31337)
    for _ in range(60):
        nv = rng.randint(2, 9)
        gens = [rng.randrange(1, 1 << nv) for _ in range(rng.randrange(6))]
        i = MonomialIdeal.make(nv, gens)
        if i.is_unit():
            continue
        assert hochster_depth(i).depth == brute_depth_oracle(i).depth


def test_depth_brute_oracle_uses_reisner_free_path():
    # brute oracle scans every subset; hochster restricts to lcm lattice
    i = initial_ideal(cycle_graph(4))
    h = hochster_depth(i)
    b = brute_depth_oracle(i)
    assert (h.depth, h.pd) == (b.depth, b.pd)


def test_depth_splitting_consistency():
    rng = random.Random(4242)
    for _ in range(20):
        nv = rng.randint(3, 8)
        gens = [rng.randrange(1, 1 << nv) for _ in range(rng.randrange(1, 5))]
        i = MonomialIdeal.make(nv, gens)
        if i.is_unit():
            continue
        k = rng.randint(1, nv)
        assert depth_splitting_check(i, list(range(k)))


def test_budget_indeterminate():
    i = initial_ideal(cycle_graph(5))
    r = hochster_depth(i, budget=2)
    assert r.indeterminate and r.depth is None
    c = reisner_cm(stanley_reisner(i), face_budget=2)
    assert c.indeterminate and c.is_cm is None
