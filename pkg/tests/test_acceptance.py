"""One test per acceptance criterion, each recording a PASS/FAIL line that
is printed in the terminal summary."""
import time
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from farflats import Workspace, beta, generate_root_system, orbits
from farflats import faraway as fw
from farflats import tables
from farflats.coxeter import degree_table, enumerate_group, parse_type
from farflats.exact import FieldMatrix, minimal_polynomial_2cos
from farflats.invariants import normalizer_index, subgroup_order

THEOREM_TYPES = ["A2", "A3", "A4", "B2", "B3", "B4", "D4", "F4", "H3", "H4", "I2(5)", "G2", "I2(7)", "I2(8)"]
COINCIDENTAL_TYPES = ["A3", "A4", "B3", "B4", "H3", "I2(5)", "G2", "I2(7)", "I2(8)"]

TABLE_1 = {
    "A1^2": [11, 12, 12, 10, 45, 15],
    "A2": [8, 7, 7, 8, 30, 10],
    "I2(5)": [4, 4, 4, 6, 18, 6],
    "nfw_se": [23, 23, 23, 24, 93, 31],
}

TABLE_2 = {
    "A1^2": [27, 25, 24, 24, 24, 24, 24, 26, 198, 63],
    "A2": [11, 10, 10, 10, 10, 10, 10, 17, 88, 28],
    "nfw_se": [38, 35, 34, 34, 34, 34, 34, 43, 286, 91],
}

_ = None
TABLE_3_COLUMNS = ["A1", "A1^2", "A2", "I2(5)", "A1xA2", "A1xI2(5)", "A3", "H3", "nfw_se"]
TABLE_3 = {
    ("A0", "{}"): [42, 382, 157, 48, 457, 232, 197, 16, 42],
    ("A0", "G([A0])"): [42, 382, 157, 48, 457, 232, 197, 16, 42],
    ("A0", "u[A0]"): [60, 450, 200, 72, 600, 360, 300, 60, 60],
    ("A1", "{1}"): [_, 11, 8, 4, 33, 24, 26, 7, 23],
    ("A1", "{2}"): [_, 12, 7, 4, 33, 28, 23, 6, 23],
    ("A1", "{3}"): [_, 12, 7, 4, 31, 32, 17, 8, 23],
    ("A1", "{4}"): [_, 10, 8, 6, 30, 29, 21, 8, 24],
    ("A1", "G([A1])"): [_, 45, 30, 18, 127, 113, 87, 29, 93],
    ("A1", "u[A1]"): [1, 15, 10, 6, 40, 36, 30, 15, 31],
    ("A1^2", "{1,3}"): [_, _, _, _, 3, 4, 2, 1, 10],
    ("A1^2", "{1,4}"): [_, _, _, _, 3, 3, 2, 2, 10],
    ("A1^2", "{2,4}"): [_, _, _, _, 4, 3, 1, 2, 10],
    ("A1^2", "G([A1^2])"): [_, _, _, _, 10, 10, 5, 5, 30],
    ("A1^2", "u[A1^2]"): [_, 1, 0, 0, 4, 4, 2, 2, 12],
    ("A2", "{2,3}"): [_, _, _, _, 3, 0, 5, 2, 10],
    ("A2", "{3,4}"): [_, _, _, _, 2, 0, 5, 3, 10],
    ("A2", "G([A2])"): [_, _, _, _, 5, 0, 10, 5, 20],
    ("A2", "u[A2]"): [_, _, 1, 0, 3, 0, 6, 3, 12],
    ("I2(5)", "{1,2}"): [_, _, _, _, 0, 4, 0, 4, 8],
    ("I2(5)", "G([I2(5)])"): [_, _, _, _, 0, 4, 0, 4, 8],
    ("I2(5)", "u[I2(5)]"): [_, _, _, 1, 0, 5, 0, 5, 10],
}


def compare(T, expected, columns, group_of=lambda key: None, label_of=lambda key: key):
    """Cells of T that differ from the expected grid, as readable strings."""
    bad = []
    for key, row in expected.items():
        for col, want in zip(columns, row):
            if want is None:
                continue
            cell = T.cell(label_of(key), col, group_of(key))
            if cell is None or cell.value != want:
                bad.append(f"{key}/{col}: got {cell.value if cell else None}, want {want}")
    return bad


def test_criterion_1_h4_core_rank_one(ws, record):
    t0 = time.perf_counter()
    h4 = ws("H4")
    T = tables.core_rank_table(h4, 1)
    secs = time.perf_counter() - t0
    bad = compare(T, TABLE_1, T.columns)
    bold = [T.cell(y, "G([A1])").route for y in TABLE_1]
    ok = not bad and bold == ["thm"] * 4 and secs <= 600
    record(1, ok, f"H4 core rank 1, 24 cells, {secs:.1f}s" + (f"; mismatches {bad}" if bad else ""))
    assert ok, bad


def test_criterion_2_h4_full_table(ws, record):
    t0 = time.perf_counter()
    h4 = ws("H4")
    T = tables.full_table(h4)
    bad = compare(T, TABLE_3, TABLE_3_COLUMNS, group_of=lambda k: k[0], label_of=lambda k: k[1])
    assert T.columns == TABLE_3_COLUMNS
    # every full-support rank-3 subgroup has some core; the one that is not
    # full support is the standard parabolic generated by its support
    od = h4.orbit_data
    sanity = []
    totals = [(g, lab) for g, lab, _ in T.rows if lab.startswith("G(")]
    for Y in od.at_codim(3):
        total = sum(T.cell(lab, Y.label, g).value for g, lab in totals)
        u = h4.os_matrix[od.by_label("A0").id, Y.id]
        if total != u - 1:
            sanity.append(f"[{Y.label}]: {total} != {u} - 1")
    a3 = [T.cell(f"G([{x}])", "A3", x).value for x in ("A0", "A1", "A1^2", "A2")]
    secs = time.perf_counter() - t0
    ok = not bad and not sanity and a3 == [197, 87, 5, 10] and sum(a3) == 299 and secs <= 1800
    record(2, ok, f"H4 all cores, {sum(len([c for c in r if c is not None]) for r in TABLE_3.values())} cells, "
                  f"rank-3 totals = u - 1 for 4 types, {secs:.1f}s" + (f"; {bad + sanity}" if bad or sanity else ""))
    assert ok, bad + sanity


def test_criterion_3_main_theorem(ws, record):
    t0 = time.perf_counter()
    pairs, failures = 0, []
    for symbol in THEOREM_TYPES:
        w = ws(symbol)
        for rep in fw.main_theorem_reports(w):
            pairs += 1
            if not rep.match:
                failures.append(f"{symbol} {rep}")
        for X in w.orbit_data:
            if X.codim + 1 < w.rank:
                rep = fw.nfw_se(w, X.id)
                pairs += 1
                if not rep.match:
                    failures.append(f"{symbol} {rep}")
    secs = time.perf_counter() - t0
    ok = not failures and secs <= 900
    record(3, ok, f"{pairs} identities over {len(THEOREM_TYPES)} types, {secs:.1f}s"
           + (f"; {failures}" if failures else ""))
    assert ok, failures


def test_criterion_4_full_support_reflections(ws, record):
    spots = {"A2": 1, "A3": 1, "B2": 2, "H3": 8, "H4": 42}
    failures = []
    for symbol in THEOREM_TYPES:
        rep = fw.full_support_reflections(ws(symbol))
        if not rep.match or (symbol in spots and rep.lhs != spots[symbol]):
            failures.append(f"{symbol}: {rep}")
    ok = not failures
    record(4, ok, f"{len(THEOREM_TYPES)} types, spot values {spots}" + (f"; {failures}" if failures else ""))
    assert ok, failures


def test_criterion_5_refined_reflection_counts(ws, record):
    got, failures = {}, []
    for symbol in ("B3", "F4"):
        w = ws(symbol)
        hyper = w.orbit_data.at_codim(1)
        assert len(hyper) == 2
        for T in hyper:
            rep = fw.full_support_reflections_by_class(w, T.id)
            got[f"{symbol}[{T.label}]"] = rep.lhs
            if not rep.match:
                failures.append(str(rep))
    ok = not failures
    record(5, ok, str(got) + (f"; {failures}" if failures else ""))
    assert ok, failures


def test_criterion_6_double_counting(ws, record):
    t0 = time.perf_counter()
    reps = []
    for symbol in ("A3", "B3", "H3"):
        w = Workspace(symbol)
        reps += [(symbol, fw.double_counting_check(w, T.label)) for T in w.orbit_data.at_codim(1)]
    b4 = Workspace("B4")
    full = fw.double_counting_check(b4)
    reps.append(("B4", full))
    secs = time.perf_counter() - t0
    failures = [f"{s} {r}" for s, r in reps if not r.match]
    ok = not failures and len(b4.chambers()) == 384 and secs <= 120
    record(6, ok, f"{len(reps)} checks incl. B4 over 384 chambers, {secs:.1f}s"
           + (f"; {failures}" if failures else ""))
    assert ok, failures


def test_criterion_7_beta_two_ways(ws, record):
    failures, n = [], 0
    for symbol in ("A3", "B3", "H3", "B4"):
        w = ws(symbol)
        b = beta(w.lattice)
        for T in w.orbit_data.at_codim(1):
            n += 1
            via = fw.beta_via_chambers(w, T.representative)
            if via != b:
                failures.append(f"{symbol}[{T.label}]: {via} != {b}")
    ok = not failures
    record(7, ok, f"{n} hyperplane orbits" + (f"; {failures}" if failures else ""))
    assert ok, failures


def test_criterion_8_averages(ws, record):
    want = {"A2": Fraction(1), "B3": Fraction(3), "H3": Fraction(8)}
    got = {s: fw.average_faraway(ws(s)) for s in want}
    ok = all(got[s].match and got[s].lhs == want[s] for s in want)
    record(8, ok, ", ".join(f"{s} -> {got[s].lhs}" for s in want))
    assert ok


def coincidental_reports(ws):
    per_core, means = [], []
    for symbol in COINCIDENTAL_TYPES:
        w = ws(symbol)
        od = w.orbit_data
        for x, y in fw.theorem_pairs(w):
            means.append((symbol, fw.coincidental_mean_check(w, x, y)))
            for J in combinations(range(w.rank), od[x].codim):
                if od.orbit_of[w.std_flat(J)] == x:
                    per_core.append((symbol, fw.coincidental_check(w, J, y)))
    return per_core, means


@pytest.mark.xfail(strict=True, reason="the per-core product formula fails in every listed type of rank >= 3; "
                                       "it holds only on average over the cores of one type")
def test_criterion_9_coincidental_formula(ws, record):
    per_core, means = coincidental_reports(ws)
    bad = [f"{s} {r.identity}: {r.lhs} vs {r.rhs}" for s, r in per_core if not r.match]
    bad_means = [f"{s} {r}" for s, r in means if not r.match]
    ok = not bad
    record(9, ok, f"{len(per_core) - len(bad)}/{len(per_core)} (I,[Y]) pairs exact; "
                  f"counterexamples {bad[:3]}{' ...' if len(bad) > 3 else ''}; "
                  f"mean over cores of each type exact for {len(means) - len(bad_means)}/{len(means)}")
    assert not bad_means
    assert ok, bad


def test_criterion_9_mean_form_holds(ws):
    per_core, means = coincidental_reports(ws)
    assert all(r.match for _, r in means)
    # the smallest counterexample, checked by hand on the roots of A3
    a3 = ws("A3")
    A2 = a3.parabolic_type("A2").id
    assert [len(fw.enumerate_g(a3, fw.GQuery(A2, core=1 << s))) for s in range(3)] == [1, 0, 1]


def test_criterion_10_e8_core_rank_one(ws, record):
    t0 = time.perf_counter()
    e8 = ws("E8", 2)
    T = tables.core_rank_table(e8, 1)
    secs = time.perf_counter() - t0
    bad = compare(T, TABLE_2, T.columns)
    H = e8.parabolic_type("A1")
    os_data = e8.os_exponents(H)
    bold = {y: T.cell(y, "G([A1])").route for y in TABLE_2}
    ok = not bad and all(r == "thm" for r in bold.values()) and os_data.provenance == "bundled" and secs <= 7200
    record(10, ok, f"E8 core rank 1 at codim <= 2, exponents of A^H {os_data.exponents} "
                   f"({os_data.provenance}), {secs:.1f}s" + (f"; {bad}" if bad else ""))
    assert ok, bad


F5 = minimal_polynomial_2cos(5)
elements = st.tuples(*[st.fractions(max_denominator=20) for _ in range(F5.degree)]).map(lambda c: F5(list(c)))


@settings(max_examples=60, deadline=None)
@given(elements, elements, elements)
def test_criterion_11_field_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    if a:
        assert a * a.inverse() == F5.one
    assert (a - b).sign() == (0 if a == b else (1 if float(a) > float(b) else -1))


@settings(max_examples=40, deadline=None)
@given(st.lists(st.lists(st.integers(-3, 3), min_size=4, max_size=4), min_size=1, max_size=5))
def test_criterion_11_kernel_rank(rows):
    M = FieldMatrix(F5, [[F5(x) * F5.theta ** (i % 2) for i, x in enumerate(r)] for r in rows])
    K = M.kernel()
    assert M.rank() + len(K) == 4
    for v in K:
        assert all(not sum((M[i, j] * v[j] for j in range(4)), F5.zero) for i in range(M.nrows))


def test_criterion_11_property_suites(ws, record):
    t0 = time.perf_counter()
    checks = 0
    for symbol in ["A1", "A4", "B4", "D4", "D5", "F4", "H3", "H4", "I2(5)", "G2", "E6", "E7", "E8", "A1xB3"]:
        t = parse_type(symbol)
        rs = generate_root_system(t)
        for dt in degree_table(t):
            assert 2 * dt.reflections == dt.coxeter_number * dt.factor.rank
            checks += 1
        assert rs.N == sum(dt.reflections for dt in degree_table(t))
    for symbol in ("A3", "B3", "H3", "D4"):
        w = ws(symbol)
        group = enumerate_group(w.roots)
        od = orbits(w.lattice)
        for T in od:
            stab = sum(1 for g in group if g.act_mask(w.lattice.flats[T.representative].mask)
                       == w.lattice.flats[T.representative].mask)
            wx, _ = subgroup_order(w.lattice, T.representative)
            assert T.size * stab == w.roots.order
            assert stab == wx * normalizer_index(w.lattice, od, T.id)
            checks += 1
    for symbol in ("A3", "B3", "H3"):
        w = ws(symbol)
        P = w.lattice.hyperplanes
        for g in w.group:
            assert fw.faraway_planes(w, g) == fw.nearest_faraway_flats(w, g, 0, P)
            # associated faces are unique; the direct sweep raises otherwise
            direct = fw.nearest_faraway_direct(w, g)
            for J in range(1 << w.rank):
                if bin(J).count("1") < w.rank:
                    assert fw.nearest_faraway_flats(w, g, J) == sorted(z for z, f in direct.items() if f == J)
            checks += 1
    secs = time.perf_counter() - t0
    ok = secs <= 120
    record(11, ok, f"{checks} structural checks plus field and kernel property tests, {secs:.1f}s")
    assert ok
