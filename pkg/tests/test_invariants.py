from fractions import Fraction
from math import prod

import pytest

from farflats import (beta, build_lattice, characteristic_polynomial, enumerate_group, generate_root_system,
                      mobius, nu, orbits, os_exponents, os_matrix, region_count, restriction)
from farflats.errors import CorrectnessAlarm
from farflats.invariants import IntPolynomial, normalizer_index, subgroup_order

RANK_LE_4 = ["A2", "A3", "A4", "B2", "B3", "B4", "D4", "F4", "H3", "H4", "I2(5)", "I2(8)", "G2"]


def lattice(symbol):
    return build_lattice(generate_root_system(symbol))


def test_mobius_small_values():
    L = lattice("A2")
    mu = mobius(L)
    assert mu[0] == 1
    assert all(mu[h] == -1 for h in L.hyperplanes)
    assert mu[L.level(2)[0]] == 2
    assert mobius(lattice("B2"))[-1] == 3


def test_characteristic_polynomials():
    assert characteristic_polynomial(lattice("A2")).coefficients == (2, -3, 1)
    chi = characteristic_polynomial(lattice("H4"))
    assert chi == IntPolynomial.from_roots([1, 11, 19, 29])
    assert region_count(lattice("H4")) == 14400


@pytest.mark.parametrize("symbol", RANK_LE_4 + ["A1xA2", "A1xB3"])
def test_chi_roots_are_exponents(symbol):
    L = lattice(symbol)
    e = sorted(x for dt in L.roots.degree_tables for x in dt.exponents)
    assert list(characteristic_polynomial(L).positive_integer_roots()) == e
    assert region_count(L) == L.roots.order


@pytest.mark.parametrize("symbol,expected", [("A3", 2), ("H3", 32), ("B3", 8), ("A2", 1), ("H4", 10 * 18 * 28)])
def test_beta(symbol, expected):
    assert beta(lattice(symbol)) == expected


def test_beta_of_rank_one_restriction():
    L = lattice("A3")
    line = L.level(2)[0]
    assert characteristic_polynomial(restriction(L, line)).coefficients == (-1, 1)
    assert beta(restriction(L, line)) == 1


def test_factorisation_failure_is_loud():
    with pytest.raises(CorrectnessAlarm):
        IntPolynomial((1, 0, 1)).positive_integer_roots()
    with pytest.raises(CorrectnessAlarm):
        IntPolynomial((6, 5, 1)).positive_integer_roots()


@pytest.mark.parametrize("symbol", RANK_LE_4)
def test_restricted_beta_from_exponents(symbol):
    L = lattice(symbol)
    for x, X in enumerate(L.flats):
        if 1 <= X.dim < L.rank:
            R = restriction(L, x)
            assert beta(R) == os_exponents(L, x).beta
            assert os_exponents(L, x).exponents[0] == 1
            assert sum(os_exponents(L, x).exponents) == len(R.hyperplanes)


def test_os_exponents_examples():
    L = lattice("H4")
    assert os_exponents(L, 0).exponents == (1, 11, 19, 29)
    assert os_exponents(L, L.hyperplanes[0]).exponents == (1, 11, 19)
    assert os_exponents(L, L.level(3)[0]).exponents == (1,)
    H3 = lattice("H3")
    assert os_exponents(H3, H3.hyperplanes[0]).exponents == (1, 5)


def brute_stabiliser_orders(symbol):
    """|{w : w X = X}| for each flat, by scanning the whole group."""
    rs = generate_root_system(symbol)
    L = build_lattice(rs)
    group = enumerate_group(rs)
    return L, [sum(1 for g in group if g.act_mask(f.mask) == f.mask) for f in L.flats], rs.order


@pytest.mark.parametrize("symbol", ["A3", "B3", "H3", "D4", "B4", "F4"])
def test_orbit_stabiliser(symbol):
    L, stab, order = brute_stabiliser_orders(symbol)
    od = orbits(L)
    for T in od:
        assert all(stab[z] == stab[T.representative] for z in T.members)
        assert T.size * stab[T.representative] == order
        wx, _ = subgroup_order(L, T.representative)
        assert stab[T.representative] == wx * normalizer_index(L, od, T.id)


def test_orbit_sizes_h4():
    od = orbits(lattice("H4"))
    assert [(T.label, T.size) for T in od.at_codim(1)] == [("A1", 60)]
    assert [(T.label, T.size) for T in od.at_codim(2)] == [("A1^2", 450), ("A2", 200), ("I2(5)", 72)]


def test_b2_hyperplane_orbits():
    od = orbits(lattice("B2"))
    assert sorted(T.size for T in od.at_codim(1)) == [2, 2]
    labels = [T.label for T in od.at_codim(1)]
    assert len(set(labels)) == 2 and all(l.startswith("A1'") for l in labels)


@pytest.mark.parametrize("symbol", RANK_LE_4)
def test_os_matrix_rows(symbol):
    L = lattice(symbol)
    od = orbits(L)
    U = os_matrix(L, od)
    for T in od:
        assert U[T.id, T.id] == 1
        if T.codim < L.rank:
            below = sum(U[T.id, Y.id] for Y in od.at_codim(T.codim + 1))
            assert below == len(restriction(L, T.representative).hyperplanes)
        for Y in od:
            if Y.codim < T.codim:
                assert U[T.id, Y.id] == 0


def test_os_matrix_h4_hyperplane_row():
    L = lattice("H4")
    od = orbits(L)
    U = os_matrix(L, od)
    H = od.by_label("A1").id
    assert [U[H, od.by_label(y).id] for y in ("A1^2", "A2", "I2(5)")] == [15, 10, 6]


@pytest.mark.parametrize("symbol", RANK_LE_4)
def test_nu_identity(symbol):
    L = lattice(symbol)
    od = orbits(L)
    counts = nu(L, od)
    assert sum(counts) == 2 ** L.rank
    for T in od:
        b = os_exponents(L, T.representative).exponents
        assert counts[T.id] * normalizer_index(L, od, T.id) == prod(x + 1 for x in b)


@pytest.mark.parametrize("symbol,nu_h", [("E6", 6), ("E7", 7), ("E8", 8)])
def test_bundled_exponents_consistent(symbol, nu_h):
    """Bundled exponents of a hyperplane restriction against what a shallow
    lattice can confirm: their sum is the number of planes in H, and the
    nu identity fixes their shifted product."""
    L = build_lattice(generate_root_system(symbol), 2)
    od = orbits(L)
    H = od.by_label("A1")
    data = os_exponents(L, H.representative, od)
    assert data.provenance == "bundled"
    assert sum(data.exponents) == len(restriction(L, H.representative).hyperplanes)
    assert nu(L, od)[H.id] == nu_h
    assert nu_h * normalizer_index(L, od, H.id) == prod(b + 1 for b in data.exponents)


def test_e6_bundled_exponents_against_full_lattice():
    L = lattice("E6")
    od = orbits(L)
    H = od.by_label("A1")
    computed = os_exponents(L, H.representative, od)
    assert computed.provenance == "computed"
    from farflats import data
    assert computed.exponents == data.BUNDLED_OS_EXPONENTS[("E6", "A1")]


def test_ratio_constant_in_main_example():
    L = lattice("H4")
    od = orbits(L)
    H = od.by_label("A1")
    assert Fraction(2 * os_exponents(L, H.representative).beta, normalizer_index(L, od, H.id)) == 3


@pytest.mark.extended
def test_e7_bundled_exponents_against_full_lattice():
    L = build_lattice(generate_root_system("E7"), workers=4)
    assert L.whitney_numbers() == [1, 63, 1281, 10395, 33411, 36435, 8821, 1]
    od = orbits(L)
    from farflats import data
    assert os_exponents(L, od.by_label("A1").representative, od).exponents == data.BUNDLED_OS_EXPONENTS[("E7", "A1")]
