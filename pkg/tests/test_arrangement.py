from itertools import combinations

import numpy as np
import pytest
from sympy.functions.combinatorial.numbers import stirling

from farflats import (Chamber, InsufficientDepthError, build_lattice, cone_trivial, enumerate_group, face,
                      flat_from_roots, generate_root_system, restriction)
from farflats.arrangement import bits, cone_trivial_rays, fm_feasible, mask_of
from farflats.exact import minimal_polynomial_2cos


def float_lattice_levels(rs):
    """Flats by brute force in floating point: every set of roots spans
    some subspace; a flat is the set of all roots inside that span."""
    R = np.array([[float(c) for c in r] for r in rs.roots])
    n = rs.rank
    flats = {0}
    frontier = {0}
    for _ in range(n):
        nxt = set()
        for m in frontier:
            idx = list(bits(m))
            for b in range(rs.N):
                if m >> b & 1:
                    continue
                span = R[idx + [b]]
                rank = np.linalg.matrix_rank(span)
                full = 0
                for c in range(rs.N):
                    if np.linalg.matrix_rank(np.vstack([span, R[c]])) == rank:
                        full |= 1 << c
                nxt.add(full)
        nxt -= flats
        flats |= nxt
        frontier = nxt
    counts = {}
    for m in flats:
        k = np.linalg.matrix_rank(R[list(bits(m))]) if m else 0
        counts[k] = counts.get(k, 0) + 1
    return [counts[k] for k in range(n + 1)]


@pytest.mark.parametrize("symbol", ["A2", "B2", "A3", "B3", "H3", "I2(5)", "A1xA2", "D4"])
def test_lattice_matches_float_oracle(symbol):
    rs = generate_root_system(symbol)
    assert build_lattice(rs).whitney_numbers() == float_lattice_levels(rs)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_type_a_lattice_is_partition_lattice(n):
    L = build_lattice(generate_root_system(f"A{n}"))
    assert L.whitney_numbers() == [int(stirling(n + 1, n + 1 - k)) for k in range(n + 1)]


def test_h4_and_e8_levels():
    assert build_lattice(generate_root_system("H4")).whitney_numbers() == [1, 60, 722, 1320, 1]
    assert build_lattice(generate_root_system("E8"), 2).whitney_numbers() == [1, 120, 4900]


def test_parallel_build_is_identical():
    rs = generate_root_system("B4")
    a = build_lattice(rs)
    b = build_lattice(rs, workers=2)
    assert [f.mask for f in a.flats] == [f.mask for f in b.flats]
    assert a.parents == b.parents


def test_flat_from_roots_saturates():
    rs = generate_root_system("A2")
    f = flat_from_roots(rs, [0, 1])
    assert f.root_set == (0, 1, 2) and f.codim == 2
    assert flat_from_roots(rs, []).codim == 0


@pytest.mark.parametrize("symbol", ["A3", "B3", "H3"])
def test_flats_closed_under_intersection(symbol):
    rs = generate_root_system(symbol)
    L = build_lattice(rs)
    masks = {f.mask for f in L.flats}
    for a, b in combinations(L.flats[1:], 2):
        assert flat_from_roots(rs, a.root_set + b.root_set).mask in masks


@pytest.mark.parametrize("symbol", ["A3", "B4", "H4"])
def test_group_permutes_flats(symbol):
    rs = generate_root_system(symbol)
    L = build_lattice(rs)
    for g in rs.simple_reflections:
        for lvl in L.levels:
            img = sorted(L.find(g.act_mask(L.flats[i].mask)) for i in lvl)
            assert img == lvl


def test_restriction_grading():
    rs = generate_root_system("H4")
    L = build_lattice(rs)
    H = L.hyperplanes[0]
    R = restriction(L, H)
    assert R.rank == 3
    # 31 = 15+10+6 planes and 121 = 40+36+30+15 lines inside a hyperplane
    assert [len(l) for l in R.levels] == [1, 31, 121, 1]
    shallow = build_lattice(rs, 1)
    with pytest.raises(InsufficientDepthError):
        restriction(shallow, shallow.hyperplanes[0])


@pytest.mark.parametrize("symbol", ["A2", "B2", "A3", "B3", "H3", "I2(5)"])
def test_cone_test_against_rays(symbol):
    rs = generate_root_system(symbol)
    L = build_lattice(rs)
    group = enumerate_group(rs)
    step = max(1, len(group) // 12)
    for g in group[::step]:
        for f in L.flats[1:]:
            assert cone_trivial(rs, f.mask, g) == cone_trivial_rays(rs, f.mask, g.word)


def test_cone_test_on_faces():
    rs = generate_root_system("A2")
    L = build_lattice(rs)
    e = enumerate_group(rs)[0]
    top = L.find(flat_from_roots(rs, [2]).mask)
    # the ray C0^{s1} lies on the line alpha_1 = 0, which meets the hyperplane of alpha_1+alpha_2 at 0 only
    assert cone_trivial(rs, L.flats[top].mask, e, walls=0b01)
    # the hyperplane of alpha_1 contains that ray
    assert not cone_trivial(rs, L.flats[L.find(flat_from_roots(rs, [0]).mask)].mask, e, walls=0b01)


def test_faces_and_sign_vectors():
    rs = generate_root_system("B3")
    group = enumerate_group(rs)
    signs = {Chamber(g).sign_vector() for g in group}
    assert len(signs) == len(group)
    for g in group[:10]:
        for J in range(8):
            F = face(Chamber(g), J)
            assert F.dim(3) == 3 - bin(J).count("1")
            sv = F.sign_vector(rs)
            zero = mask_of(i for i, s in enumerate(sv) if s == 0)
            assert zero == F.span(rs)


def test_fm_feasibility_small_systems():
    F = minimal_polynomial_2cos(5)
    one, zero, t = F.one, F.zero, F.theta
    # x >= 1, x <= t : feasible
    assert fm_feasible(F, 1, [], [([one], one), ([-one], -t)])
    # x >= t, x <= 1 : infeasible since t > 1
    assert not fm_feasible(F, 1, [], [([one], t), ([-one], -one)])
    # x + y = 1, x >= 0, y >= 0, x - y >= 2 : infeasible
    assert not fm_feasible(F, 2, [([one, one], one)], [([one, zero], zero), ([zero, one], zero),
                                                      ([one, -one], F(2))])
