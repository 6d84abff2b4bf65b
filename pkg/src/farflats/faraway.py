"""Full-support parabolic subgroups, faraway planes and nearest faraway flats.

Every counting identity returns a :class:`CountReport` holding an enumerated
left side and, where a closed formula applies, its right side.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from . import invariants as inv
from .arrangement import Chamber, Face, bits, cone_trivial, fm_feasible, _flat_kernel, mask_of, restriction
from .coxeter import CoxeterType, GroupElement
from .errors import CorrectnessAlarm
from .workspace import Workspace, as_workspace

__all__ = [
    "CoreSupport",
    "CountReport",
    "GQuery",
    "core_and_support",
    "is_faraway",
    "faraway_planes",
    "nearest_faraway_flats",
    "nearest_faraway_direct",
    "double_counting_check",
    "beta_via_chambers",
    "g_sets",
    "nfw_se",
    "full_support_reflections",
    "full_support_reflections_by_class",
    "average_faraway",
    "coincidental_check",
    "coincidental_mean_check",
    "reduce_reducible",
    "theorem_pairs",
    "main_theorem_reports",
]


@dataclass(frozen=True)
class CoreSupport:
    flat: int          # root mask
    core: int          # bitmask over S
    support: int       # bitmask over S
    crosschecked: bool = False

    def is_full_support(self, rank: int) -> bool:
        return self.support == (1 << rank) - 1


@dataclass
class CountReport:
    identity: str
    lhs: int | Fraction
    rhs: int | Fraction | None = None
    notes: list = field(default_factory=list)
    provenance: dict = field(default_factory=dict)
    seconds: float = 0.0

    @property
    def match(self) -> bool | None:
        return None if self.rhs is None else self.lhs == self.rhs

    def to_dict(self) -> dict:
        def num(x):
            if isinstance(x, Fraction):
                return str(x) if x.denominator != 1 else x.numerator
            return x
        return {
            "identity": self.identity,
            "lhs": num(self.lhs),
            "rhs": num(self.rhs),
            "match": self.match,
            "notes": list(self.notes),
            "provenance": dict(self.provenance),
            "seconds": round(self.seconds, 3),
        }

    def __str__(self):
        if self.rhs is None:
            return f"{self.identity}: {self.lhs} (enumeration only)"
        verdict = "PASS" if self.match else "FAIL"
        return f"{self.identity}: lhs={self.lhs} rhs={self.rhs} {verdict}"


@dataclass(frozen=True)
class GQuery:
    """Which parabolic subgroups to count: a target type [Y] and either an
    explicit core I (bitmask over S) or a core type [X]."""

    target: object
    core: int | None = None
    core_type: object = None

    def __post_init__(self):
        if (self.core is None) == (self.core_type is None):
            raise ValueError("give exactly one of core and core_type")


def _timed(fn):
    def wrapper(*args, **kw):
        t0 = time.perf_counter()
        rep = fn(*args, **kw)
        rep.seconds = time.perf_counter() - t0
        return rep
    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


def _as_mask(J) -> int:
    return J if isinstance(J, int) else mask_of(J)


# -- core and support --------------------------------------------------------

def _combinatorial(ws: Workspace, mask: int) -> tuple[int, int]:
    rs = ws.roots
    core = 0
    support = 0
    sup = rs.supports
    for b in bits(mask):
        if b < rs.rank:
            core |= 1 << b
        support |= sup[b]
    return core, support


def _geometric(ws: Workspace, mask: int) -> tuple[int, int]:
    """Core from the smallest face of C0 whose span holds X; support from the
    face X ∩ C0, both by exact linear algebra and cone feasibility."""
    rs = ws.roots
    n = rs.rank
    basis = _flat_kernel(rs, mask)
    full = (1 << n) - 1
    if not basis:
        return full, full
    F = rs.field
    G = rs.gram.rows
    a = [[sum((G[s][t] * x[t] for t in range(n)), F.zero) for x in basis] for s in range(n)]
    core = sum(1 << s for s in range(n) if all(c.is_zero() for c in a[s]))
    ineqs = [(a[t], F.zero) for t in range(n)]
    support = 0
    for s in range(n):
        if s in bits(core) or not fm_feasible(F, len(basis), [(a[s], F.one)], ineqs):
            support |= 1 << s
    return core, support


def core_and_support(ws, flat) -> CoreSupport:
    """Core I and support J of the parabolic subgroup fixing a flat.

    ``flat`` is a Flat or the root mask of one.  The root-support rule is
    always used; on sampled flats the geometric route and the cone test are
    run as well and any disagreement raises :class:`CorrectnessAlarm`.
    """
    ws = as_workspace(ws)
    mask = flat if isinstance(flat, int) else flat.mask
    hit = ws.core_cache.get(mask)
    if hit is not None:
        return hit
    core, support = _combinatorial(ws, mask)
    checked = False
    if ws.should_crosscheck(mask):
        g_core, g_support = _geometric(ws, mask)
        if (g_core, g_support) != (core, support):
            raise CorrectnessAlarm(
                f"core/support disagree on flat {sorted(bits(mask))}: "
                f"roots give ({core:b},{support:b}), cones give ({g_core:b},{g_support:b})")
        if (support == ws.full_mask) != cone_trivial(ws.roots, mask):
            raise CorrectnessAlarm(f"full support and cone test disagree on {sorted(bits(mask))}")
        checked = True
        ws.checked += 1
    out = CoreSupport(mask, core, support, checked)
    ws.core_cache[mask] = out
    return out


def core_of_flat(ws: Workspace, flat_id: int) -> CoreSupport:
    return core_and_support(ws, ws.lattice.flats[flat_id].mask)


def is_faraway(ws: Workspace, mask: int) -> bool:
    """X ∩ C0 = {0}, i.e. W_X has full support."""
    return core_and_support(ws, mask).support == ws.full_mask


# -- faraway planes and nearest faraway flats --------------------------------

def _element(C) -> GroupElement:
    if isinstance(C, Chamber):
        return C.element
    if isinstance(C, Face):
        if C.walls:
            raise ValueError("expected a chamber (a face with no walls)")
        return C.element
    if isinstance(C, GroupElement):
        return C
    raise TypeError(f"expected a chamber, got {type(C).__name__}")


def faraway_planes(ws, C, P=None) -> list:
    """Hyperplanes in P (default: all) meeting the chamber C only at 0."""
    ws = as_workspace(ws)
    L = ws.lattice
    g = _element(C).inverse()
    P = L.hyperplanes if P is None else P
    return sorted(h for h in P if is_faraway(ws, g.act_mask(L.flats[h].mask)))


def _check_q(ws, Q):
    L = ws.lattice
    if Q is None:
        return [i for i, f in enumerate(L.flats) if f.dim > 0]
    Q = list(Q)
    if any(L.flats[z].dim == 0 for z in Q):
        raise ValueError("the zero flat is never a nearest faraway flat; remove it from Q")
    return Q


def nearest_faraway_flats(ws, C, F, Q=None) -> list:
    """Nearest faraway flats of C in Q whose associated face is F.

    F is a face of C, given as a Face or as a wall set.  Computed through the
    restriction to span(F): the answers are the hyperplanes Z of that
    restriction lying in Q with Z ∩ F = {0}.
    """
    ws = as_workspace(ws)
    w = _element(C)
    if isinstance(F, Face):
        if F.element != w:
            raise ValueError("F is not given as a face of C")
        J = F.walls
    else:
        J = _as_mask(F)
    Q = set(_check_q(ws, Q))
    L = ws.lattice
    span = Face(w, J).span(ws.roots)
    R = restriction(L, L.find(span))
    g = w.inverse()
    return sorted(z for z in R.hyperplanes
                  if z in Q and is_faraway(ws, g.act_mask(L.flats[z].mask)))


def nearest_faraway_direct(ws, C, Q=None) -> dict:
    """Direct-definition scan: for each faraway flat in Q find the faces of C
    whose span contains it, keep it when the smallest has dimension dim+1.
    Returns {flat id: wall set of its associated face}."""
    ws = as_workspace(ws)
    rs = ws.roots
    n = rs.rank
    L = ws.lattice
    g = _element(C).inverse()
    std = {}
    for k in range(n + 1):
        for J in combinations(range(n), k):
            std[mask_of(J)] = ws.lattice.flats[ws.std_flat(J)].mask if k <= L.max_codim else None
    out = {}
    for z in _check_q(ws, Q):
        y = g.act_mask(L.flats[z].mask)
        if not cone_trivial(rs, y):
            continue
        covering = [J for J, m in std.items() if m is not None and m & ~y == 0]
        top = max(bin(J).count("1") for J in covering)
        best = [J for J in covering if bin(J).count("1") == top]
        if len(best) != 1:
            raise CorrectnessAlarm(f"flat {z} has {len(best)} minimal covering faces")
        if n - top == L.flats[z].dim + 1:
            out[z] = best[0]
    return out


# -- chamber sweeps ----------------------------------------------------------

def _hyperplanes_of(ws, x):
    L = ws.lattice
    return L.hyperplanes if x is None or x == 0 else restriction(L, x).hyperplanes


def _chambers_of(ws, x):
    return ws.chambers() if x is None or x == 0 else ws.restricted_chambers(x)


def _beta_of(ws, x) -> tuple[int, str]:
    L = ws.lattice
    x = 0 if x is None else x
    R = restriction(L, x)
    if R.is_complete:
        return inv.beta(R), "computed"
    if x == 0:
        return _beta_from_exponents(_exponents(ws)), "degree table"
    data = ws.os_exponents(ws.type_of(x))
    return data.beta, data.provenance


def _beta_from_exponents(e) -> int:
    out = 1
    for x in sorted(e)[1:]:
        out *= x - 1
    return out


def _exponents(ws) -> tuple:
    tables = ws.roots.degree_tables
    return tuple(sorted(e for dt in tables for e in dt.exponents))


def _faraway_count(ws, face: Face, P) -> int:
    g = face.element.inverse()
    L = ws.lattice
    return sum(1 for h in P if is_faraway(ws, g.act_mask(L.flats[h].mask)))


def _resolve_planes(ws, P, x):
    hyper = _hyperplanes_of(ws, x)
    if P is None:
        return list(hyper)
    if isinstance(P, (str, inv.ParabolicType)):
        T = ws.parabolic_type(P)
        return [h for h in hyper if ws.orbit_data.orbit_of[h] == T.id]
    P = list(P)
    bad = set(P) - set(hyper)
    if bad:
        raise ValueError(f"not hyperplanes of the arrangement: {sorted(bad)}")
    return P


@_timed
def double_counting_check(ws, P=None, x=None) -> CountReport:
    """Sum over chambers of the faraway planes in P against 2|P|beta."""
    ws = as_workspace(ws)
    name = P if isinstance(P, str) else getattr(P, "label", None)
    P = _resolve_planes(ws, P, x)
    chambers = _chambers_of(ws, x)
    lhs = sum(_faraway_count(ws, c, P) for c in chambers)
    b, how = _beta_of(ws, x)
    where = f"[{name}]" if name else "all planes"
    if x not in (None, 0):
        where += f" in A^{x}"
    return CountReport(f"double counting, {where}", lhs, 2 * len(P) * b,
                       notes=[f"{len(chambers)} chambers, |P| = {len(P)}, beta = {b}"],
                       provenance={"beta": how})


def beta_via_chambers(ws, H: int, x=None) -> int:
    """Half the number of chambers meeting H only at 0, by the cone test."""
    ws = as_workspace(ws)
    if H not in _hyperplanes_of(ws, x):
        raise ValueError(f"flat {H} is not a hyperplane of the arrangement")
    mask = ws.lattice.flats[H].mask
    count = sum(1 for c in _chambers_of(ws, x)
                if cone_trivial(ws.roots, mask, c.element, c.walls))
    if count % 2:
        raise CorrectnessAlarm(f"odd number ({count}) of chambers avoid hyperplane {H}")
    return count // 2


@_timed
def average_faraway(ws, x=None) -> CountReport:
    """Mean number of faraway planes per chamber against the exponent product."""
    ws = as_workspace(ws)
    P = list(_hyperplanes_of(ws, x))
    chambers = _chambers_of(ws, x)
    lhs = Fraction(sum(_faraway_count(ws, c, P) for c in chambers), len(chambers))
    if x in (None, 0) and not ws.lattice.is_complete:
        eps, how = _exponents(ws), "degree table"
    elif x in (None, 0):
        eps, how = inv.os_exponents(ws.lattice, 0).exponents, "computed"
    else:
        d = ws.os_exponents(ws.type_of(x))
        eps, how = d.exponents, d.provenance
    rhs = Fraction(len(P))
    for e in eps[1:]:
        rhs *= Fraction(e - 1, e + 1)
    regions = 1
    for e in eps:
        regions *= e + 1
    notes = [f"{len(chambers)} chambers"]
    if regions != len(chambers):
        raise CorrectnessAlarm(f"found {len(chambers)} chambers, exponents predict {regions}")
    return CountReport("average faraway planes", lhs, rhs, notes=notes, provenance={"exponents": how})


# -- full-support parabolic subgroups ----------------------------------------

def _core_flat_type(ws, core: int) -> int:
    return ws.orbit_data.orbit_of[ws.std_flat(core)]


def enumerate_g(ws, q: GQuery) -> list:
    """Flat ids of type q.target whose subgroup has full support and the
    requested core, in canonical order."""
    T = ws.parabolic_type(q.target)
    ws.require(T.codim)
    full = ws.full_mask
    want_type = ws.parabolic_type(q.core_type).id if q.core_type is not None else None
    out = []
    for z in T.members:
        cs = core_of_flat(ws, z)
        if cs.support != full:
            continue
        if q.core is not None:
            if cs.core == q.core:
                out.append(z)
        elif _core_flat_type(ws, cs.core) == want_type:
            out.append(z)
    return out


def _theorem_rhs(ws, X, Y) -> tuple[Fraction, dict]:
    u = ws.os_matrix[X.id, Y.id]
    idx = ws.normalizer_index(X)
    data = ws.os_exponents(X)
    rhs = Fraction(2 * u * data.beta, idx)
    return rhs, {"u": u, "normalizer index": idx, "os exponents": list(data.exponents),
                 "os exponents route": data.provenance}


def _num(x: Fraction):
    return x.numerator if x.denominator == 1 else x


@dataclass
class GSetResult:
    flats: list
    report: CountReport


def g_sets(ws, q: GQuery) -> GSetResult:
    """Full-support parabolic subgroups of type [Y] with a given core.

    With a core type [X] of dimension dim Y + 1 the count is compared with
    the closed formula; with an explicit core in the same regime the set is
    compared elementwise with the nearest faraway flats of the matching face
    of C0.  Other shapes are enumeration only.
    """
    ws = as_workspace(ws)
    t0 = time.perf_counter()
    Y = ws.parabolic_type(q.target)
    flats = enumerate_g(ws, q)
    n = ws.rank
    Ydim = n - Y.codim
    if q.core is not None:
        k = bin(q.core).count("1")
        name = f"G({{{','.join(str(s + 1) for s in bits(q.core))}}})[{Y.label}]"
        rep = CountReport(name, len(flats))
        if Y.codim == k + 1 and Ydim >= 1:
            nf = nearest_faraway_flats(ws, GroupElement.identity(ws.roots.N), q.core, Y.members)
            if nf != flats:
                raise CorrectnessAlarm(f"{name}: enumeration and nearest faraway flats differ")
            rep.notes.append("equals the nearest faraway flats of C0 at face C0^I")
    else:
        X = ws.parabolic_type(q.core_type)
        name = f"G([{X.label}])[{Y.label}]"
        rep = CountReport(name, len(flats))
        if Y.codim == X.codim + 1 and Ydim >= 1 and ws.type.is_irreducible:
            rhs, prov = _theorem_rhs(ws, X, Y)
            rep.rhs = _num(rhs)
            rep.provenance.update(prov)
    rep.seconds = time.perf_counter() - t0
    return GSetResult(flats, rep)


@_timed
def nfw_se(ws, core) -> CountReport:
    """Full-support simple extensions of a core: summed over all target types
    one codimension deeper.  ``core`` is a parabolic type (label, id or
    ParabolicType) or an explicit bitmask wrapped in a frozenset/tuple."""
    ws = as_workspace(ws)
    n = ws.rank
    if isinstance(core, (tuple, list, frozenset, set)):
        I = mask_of(core)
        k = len(set(core))
        targets = [T for T in ws.orbit_data if T.codim == k + 1 and T.codim < n]
        lhs = sum(len(enumerate_g(ws, GQuery(T.id, core=I))) for T in targets)
        name = f"nfw_se({{{','.join(str(s + 1) for s in sorted(core))}}})"
        return CountReport(name, lhs)
    X = ws.parabolic_type(core)
    if X.codim + 1 >= n:
        raise ValueError(f"[{X.label}] has dimension {n - X.codim}; simple extensions would fix only 0")
    targets = ws.orbit_data.at_codim(X.codim + 1)
    lhs = sum(len(enumerate_g(ws, GQuery(T.id, core_type=X.id))) for T in targets)
    rep = CountReport(f"nfw_se([{X.label}])", lhs)
    if ws.type.is_irreducible:
        size = len(restriction(ws.lattice, X.representative).hyperplanes)
        idx = ws.normalizer_index(X)
        data = ws.os_exponents(X)
        rep.rhs = _num(Fraction(2 * size * data.beta, idx))
        rep.provenance.update({"|A^X|": size, "normalizer index": idx,
                               "os exponents": list(data.exponents),
                               "os exponents route": data.provenance})
    return rep


def _irreducible(ws):
    if not ws.type.is_irreducible:
        raise ValueError(f"{ws.type} is reducible; use reduce_reducible")
    return ws.roots.degree_tables[0]


@_timed
def full_support_reflections(ws) -> CountReport:
    """Number of full-support reflections against n h / |W| * prod (e_i - 1)."""
    ws = as_workspace(ws)
    dt = _irreducible(ws)
    lhs = sum(1 for h in ws.lattice.hyperplanes if core_of_flat(ws, h).support == ws.full_mask)
    e = sorted(dt.exponents)
    rhs = Fraction(ws.rank * dt.coxeter_number, dt.order)
    for x in e[1:]:
        rhs *= x - 1
    return CountReport(f"full-support reflections of {ws.type}", lhs, _num(rhs),
                       provenance={"exponents": "degree table"})


@_timed
def full_support_reflections_by_class(ws, H) -> CountReport:
    """Full-support reflections in one conjugacy class against
    prod_{i<n} (h - 1 - e_i) / [N(H):W_H]."""
    ws = as_workspace(ws)
    dt = _irreducible(ws)
    T = ws.parabolic_type(H)
    if T.codim != 1:
        raise ValueError(f"[{T.label}] is not a hyperplane type")
    n, h = ws.rank, dt.coxeter_number
    e = sorted(dt.exponents)
    if any(e[i] + e[n - 1 - i] != h for i in range(n)):
        raise CorrectnessAlarm(f"exponents {e} of {ws.type} are not symmetric about h/2")
    lhs = sum(1 for z in T.members if core_of_flat(ws, z).support == ws.full_mask)
    idx = ws.normalizer_index(T)
    num = 1
    for x in e[:-1]:
        num *= h - 1 - x
    return CountReport(f"full-support reflections of type [{T.label}] in {ws.type}", lhs,
                       _num(Fraction(num, idx)),
                       notes=["exponent duality verified"],
                       provenance={"normalizer index": idx, "exponents": "degree table"})


COINCIDENTAL = {"A", "B", "I"}


@_timed
def coincidental_check(ws, I, Y) -> CountReport:
    """|G(I)[Y]| against u_{[V^I],[Y]} * prod_{i=2}^{n-|I|} (e_i - 1)/(e_i + 1)."""
    ws = as_workspace(ws)
    dt = _irreducible(ws)
    f = ws.type.factors[0]
    if not (f.family in COINCIDENTAL or (f.family == "H" and f.rank == 3)):
        raise ValueError(f"{ws.type} is not of coincidental type")
    I = _as_mask(I)
    k = bin(I).count("1")
    T = ws.parabolic_type(Y)
    if T.codim != k + 1 or T.codim >= ws.rank + 1:
        raise ValueError(f"[{T.label}] has rank {T.codim}, need |I| + 1 = {k + 1}")
    flats = enumerate_g(ws, GQuery(T.id, core=I))
    X = ws.type_of(ws.std_flat(I))
    rhs = Fraction(ws.os_matrix[X.id, T.id])
    e = sorted(dt.exponents)
    for x in e[1:ws.rank - k]:
        rhs *= Fraction(x - 1, x + 1)
    name = f"coincidental G({{{','.join(str(s + 1) for s in bits(I))}}})[{T.label}]"
    return CountReport(name, len(flats), _num(rhs), provenance={"exponents": "degree table"})


@_timed
def coincidental_mean_check(ws, X, Y) -> CountReport:
    """Mean of |G(I)[Y]| over the cores I with V^I of type [X], against the
    same exponent product as :func:`coincidental_check`."""
    ws = as_workspace(ws)
    dt = _irreducible(ws)
    X = ws.parabolic_type(X)
    T = ws.parabolic_type(Y)
    if T.codim != X.codim + 1:
        raise ValueError(f"[{T.label}] must have rank one more than [{X.label}]")
    n = ws.rank
    cores = [mask_of(J) for J in combinations(range(n), X.codim)
             if ws.orbit_data.orbit_of[ws.std_flat(J)] == X.id]
    total = sum(len(enumerate_g(ws, GQuery(T.id, core=I))) for I in cores)
    rhs = Fraction(ws.os_matrix[X.id, T.id])
    e = sorted(dt.exponents)
    for x in e[1:n - X.codim]:
        rhs *= Fraction(x - 1, x + 1)
    return CountReport(f"mean over cores of type [{X.label}] of G(I)[{T.label}]",
                       _num(Fraction(total, len(cores))), _num(rhs),
                       notes=[f"{len(cores)} cores"], provenance={"exponents": "degree table"})


# -- reducible groups ----------------------------------------------------------

_FACTOR_WS: dict = {}


def _factor_workspace(f) -> Workspace:
    key = str(f)
    ws = _FACTOR_WS.get(key)
    if ws is None:
        ws = _FACTOR_WS[key] = Workspace(CoxeterType((f,)), crosscheck="none")
    return ws


def _root_key(rs, coords, offset, total):
    v = [0.0] * total
    for i, c in enumerate(coords):
        v[offset + i] = float(c)
    return tuple(round(x, 9) for x in v)


@_timed
def reduce_reducible(ws, I, target=None) -> CountReport:
    """Full-support simple extensions of <I> in a product group, counted
    directly and as a sum over factors (the other factors forced full)."""
    ws = as_workspace(ws)
    I = _as_mask(I)
    k = bin(I).count("1")
    n = ws.rank
    if k + 1 > n:
        raise ValueError("I is already all of S")
    T = ws.parabolic_type(target) if target is not None else None
    L = ws.lattice
    od = ws.orbit_data
    full = ws.full_mask

    def wanted(z):
        return T is None or od.orbit_of[z] == T.id

    direct = sorted(z for z in L.level(k + 1)
                    if L.flats[z].dim >= 1 and wanted(z)
                    and core_of_flat(ws, z).support == full and core_of_flat(ws, z).core == I)

    rs = ws.roots
    index = {_root_key(rs, r, 0, n): i for i, r in enumerate(rs.roots)}
    total = 0
    parts = []
    offset = 0
    offsets = []
    for f in ws.type.factors:
        offsets.append(offset)
        offset += f.rank
    for i, f in enumerate(ws.type.factors):
        o = offsets[i]
        block = ((1 << f.rank) - 1) << o
        if (I | block) != full:
            parts.append(0)
            continue
        fws = _factor_workspace(f)
        Ii = (I & block) >> o
        ki = bin(Ii).count("1")
        if ki + 1 > f.rank:
            parts.append(0)
            continue
        others = 0
        for b, r in enumerate(rs.roots):
            if not rs.supports[b] & block:
                others |= 1 << b
        fmap = [index[_root_key(rs, r, o, n)] for r in fws.roots.roots]
        count = 0
        fL = fws.lattice
        for z in fL.level(ki + 1):
            if fL.flats[z].dim == 0 and f.rank == ki + 1 and len(ws.type.factors) == 1:
                continue
            cs = core_of_flat(fws, z)
            if cs.support != fws.full_mask or cs.core != Ii:
                continue
            pm = others
            for b in bits(fL.flats[z].mask):
                pm |= 1 << fmap[b]
            pz = L.find(pm)
            if L.flats[pz].dim >= 1 and wanted(pz):
                count += 1
        parts.append(count)
        total += count
    label = f"[{T.label}]" if T else "all types"
    return CountReport(f"reducible G({{{','.join(str(s + 1) for s in bits(I))}}}) {label}",
                       len(direct), total,
                       notes=[f"per-factor counts {parts}"])


def theorem_pairs(ws) -> list:
    """All ([X], [Y]) with codim Y = codim X + 1 and Y not the zero flat."""
    ws = as_workspace(ws)
    n = ws.rank
    od = ws.orbit_data
    return [(X.id, Y.id) for X in od for Y in od.at_codim(X.codim + 1)
            if Y.codim < n and X.codim + 1 <= ws.lattice.max_codim]


def main_theorem_reports(ws) -> list:
    """g_sets reports for every valid pair of an irreducible group."""
    ws = as_workspace(ws)
    _irreducible(ws)
    return [g_sets(ws, GQuery(y, core_type=x)).report for x, y in theorem_pairs(ws)]
