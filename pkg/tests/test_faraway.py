from fractions import Fraction
from itertools import combinations

import pytest

from farflats import Chamber, CountReport, GQuery, Workspace, face
from farflats import faraway as fw
from farflats.arrangement import bits, mask_of
from farflats.coxeter import GroupElement, reflection_element
from farflats.errors import CorrectnessAlarm


def parabolic_reflections(rs, J):
    """Root indices of the reflections in <J>, by closing the generators
    under multiplication and collecting the elements that are reflections."""
    refl = {reflection_element(rs, i): i for i in range(rs.N)}
    gens = [rs.simple_reflections[s] for s in J]
    ident = GroupElement.identity(rs.N)
    seen = {ident}
    todo = [ident]
    while todo:
        g = todo.pop()
        for s in gens:
            h = g * s
            if h not in seen:
                seen.add(h)
                todo.append(h)
    return {refl[g] for g in seen if g in refl}


def brute_core_support(rs, mask):
    n = rs.rank
    roots = set(bits(mask))
    refl = {J: parabolic_reflections(rs, J) for k in range(n + 1) for J in combinations(range(n), k)}
    core = max((J for J, r in refl.items() if r <= roots), key=len)
    support = min((J for J, r in refl.items() if roots <= r), key=len)
    return mask_of(core), mask_of(support)


@pytest.mark.parametrize("symbol", ["A3", "B3", "H3", "A1xA2"])
def test_core_support_against_group_oracle(symbol):
    ws = Workspace(symbol, crosscheck="all")
    for f in ws.lattice.flats:
        cs = fw.core_and_support(ws, f)
        assert cs.crosschecked
        assert (cs.core, cs.support) == brute_core_support(ws.roots, f.mask)


@pytest.mark.parametrize("symbol", ["B4", "D4", "F4"])
def test_core_support_geometric_agreement_rank4(symbol):
    ws = Workspace(symbol, crosscheck="all")
    for f in ws.lattice.flats:
        fw.core_and_support(ws, f)
    assert ws.checked == len(ws.lattice)


def test_sampled_crosscheck_is_deterministic():
    a = Workspace("H4")
    b = Workspace("H4")
    for ws in (a, b):
        for f in ws.lattice.flats:
            fw.core_and_support(ws, f)
    assert a.checked == b.checked
    assert 0 < a.checked < len(a.lattice) // 8


def test_core_support_examples():
    ws = Workspace("A2")
    L = ws.lattice
    simple = fw.core_and_support(ws, L.flats[L.find(1 << 0)])
    assert (simple.core, simple.support) == (0b01, 0b01)
    top = fw.core_and_support(ws, L.flats[L.find(1 << 2)])
    assert (top.core, top.support) == (0, 0b11)


def test_disagreement_raises(monkeypatch):
    ws = Workspace("A2", crosscheck="all")
    monkeypatch.setattr(fw, "_geometric", lambda ws, mask: (0, 0))
    with pytest.raises(CorrectnessAlarm):
        fw.core_and_support(ws, ws.lattice.flats[1])


def test_faraway_planes_examples():
    ws = Workspace("A2")
    e = ws.group[0]
    assert fw.faraway_planes(ws, e) == [ws.lattice.find(1 << 2)]
    assert fw.faraway_planes(ws, e, []) == []
    assert len(fw.faraway_planes(Workspace("H4"), Chamber(GroupElement.identity(60)))) == 42


@pytest.mark.parametrize("symbol", ["A2", "A3", "B3", "H3"])
def test_faraway_equals_nearest_at_full_face(symbol):
    ws = Workspace(symbol)
    P = ws.lattice.hyperplanes
    for g in ws.group:
        assert fw.faraway_planes(ws, g) == fw.nearest_faraway_flats(ws, g, face(Chamber(g), 0), P)


@pytest.mark.parametrize("symbol", ["A2", "A3", "B3", "H3", "I2(5)"])
def test_nearest_faraway_against_direct_definition(symbol):
    ws = Workspace(symbol)
    n = ws.rank
    for g in ws.group:
        direct = fw.nearest_faraway_direct(ws, g)
        for k in range(n):
            for J in combinations(range(n), k):
                m = mask_of(J)
                assert fw.nearest_faraway_flats(ws, g, m) == sorted(z for z, f in direct.items() if f == m)


def test_nearest_faraway_rejects_zero_flat():
    ws = Workspace("A3")
    zero = ws.lattice.level(3)[0]
    with pytest.raises(ValueError):
        fw.nearest_faraway_flats(ws, ws.group[0], 0, [zero])


def test_nearest_faraway_face_of_other_chamber():
    ws = Workspace("A3")
    g, h = ws.group[1], ws.group[2]
    with pytest.raises(ValueError):
        fw.nearest_faraway_flats(ws, g, face(Chamber(h), 1))


def test_h4_face_example():
    ws = Workspace("H4")
    Y = ws.orbit_data.by_label("I2(5)")
    got = fw.nearest_faraway_flats(ws, GroupElement.identity(60), 1 << 3, Y.members)
    assert len(got) == 6


@pytest.mark.parametrize("symbol", ["A3", "B3", "H3", "B4", "H4"])
def test_g_sets_equal_nearest_faraway_sets(symbol):
    ws = Workspace(symbol)
    n = ws.rank
    e = GroupElement.identity(ws.roots.N)
    for k in range(n - 1):
        for J in combinations(range(n), k):
            for Y in ws.orbit_data.at_codim(k + 1):
                res = fw.g_sets(ws, GQuery(Y.id, core=mask_of(J)))
                assert res.flats == fw.nearest_faraway_flats(ws, e, mask_of(J), Y.members)


@pytest.mark.parametrize("symbol", ["A2", "A3", "B2", "B3", "H3", "I2(5)"])
def test_full_support_reflections_against_brute_force(symbol):
    ws = Workspace(symbol)
    rs = ws.roots
    brute = sum(1 for i in range(rs.N) if rs.supports[i] == rs.full_mask)
    rep = fw.full_support_reflections(ws)
    assert rep.match and rep.lhs == brute


@pytest.mark.parametrize("symbol,f", [("A2", 1), ("A3", 1), ("B2", 2), ("H3", 8), ("H4", 42)])
def test_full_support_reflections_values(symbol, f):
    assert fw.full_support_reflections(Workspace(symbol)).lhs == f


def test_double_counting_examples():
    ws = Workspace("A2")
    rep = fw.double_counting_check(ws)
    assert (rep.lhs, rep.rhs) == (6, 6)
    h3 = fw.double_counting_check(Workspace("H3"))
    assert h3.lhs == 960 and h3.match


def test_beta_via_chambers_restricted():
    ws = Workspace("H3")
    H = ws.lattice.hyperplanes[0]
    planes = fw._hyperplanes_of(ws, H)
    assert all(fw.beta_via_chambers(ws, z, H) == 4 for z in planes)
    assert len(ws.restricted_chambers(H)) == 2 * 6


@pytest.mark.parametrize("symbol,avg", [("A2", 1), ("B3", 3), ("H3", 8)])
def test_average_faraway(symbol, avg):
    rep = fw.average_faraway(Workspace(symbol))
    assert rep.lhs == Fraction(avg) and rep.match


def test_g_sets_regimes():
    ws = Workspace("H4")
    A2 = ws.orbit_data.by_label("A2")
    simple = fw.g_sets(ws, GQuery(A2.id, core=0b0010)).report
    assert simple.lhs == 7 and simple.rhs is None
    general = fw.g_sets(ws, GQuery(A2.id, core=0)).report
    assert general.lhs == 157 and general.rhs is None
    typed = fw.g_sets(ws, GQuery("A1^2", core_type="A1")).report
    assert typed.lhs == 45 and typed.rhs == 45
    assert typed.provenance["normalizer index"] == 120


def test_gquery_needs_one_core():
    with pytest.raises(ValueError):
        GQuery("A2")
    with pytest.raises(ValueError):
        GQuery("A2", core=1, core_type="A1")


def test_nfw_se_dimension_guard():
    ws = Workspace("A3")
    with pytest.raises(ValueError):
        fw.nfw_se(ws, ws.orbit_data.at_codim(2)[0].id)


def test_reducible_examples():
    ws = Workspace("A1xA2")
    a2 = Workspace("A2")
    rep = fw.reduce_reducible(ws, [0])
    assert rep.match
    assert rep.lhs == fw.nfw_se(a2, "A0").lhs
    sym = Workspace("A2xA2")
    both = fw.reduce_reducible(sym, [0, 1])
    assert both.match
    same = fw.reduce_reducible(Workspace("A3"), [1])
    assert same.match


@pytest.mark.parametrize("symbol", ["A1xA2", "A2xA2", "A1xB3", "A1xA1xA2"])
def test_reducible_all_cores(symbol):
    ws = Workspace(symbol)
    n = ws.rank
    for k in range(n):
        for J in combinations(range(n), k):
            assert fw.reduce_reducible(ws, J).match
            for Y in ws.orbit_data.at_codim(k + 1):
                if Y.codim < n:
                    assert fw.reduce_reducible(ws, J, Y.id).match


def test_report_serialisation():
    rep = CountReport("x", Fraction(3, 2), Fraction(3, 2), notes=["n"])
    d = rep.to_dict()
    assert d["lhs"] == "3/2" and d["match"] is True
    assert CountReport("y", 4).to_dict()["match"] is None
