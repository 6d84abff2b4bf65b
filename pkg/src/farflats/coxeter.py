"""Finite Coxeter groups: type symbols, root systems and group elements.

Simple roots are normalised to B(a_s, a_s) = 1 with B(a_s, a_t) =
-cos(pi/m_st); every positive root is stored by its coordinates in the basis
of simple roots.  Group elements act on the positive roots as signed
permutations, which is all the combinatorics downstream needs.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import cached_property, reduce
from itertools import combinations

import numpy as np

from . import data
from .errors import CorrectnessAlarm, ResourceLimitError, TypeParseError
from .exact import AlgebraicNumber, FieldMatrix, minimal_polynomial_2cos
from .intvec import IntegerRing

__all__ = [
    "Factor",
    "CoxeterType",
    "DegreeTable",
    "RootSystem",
    "GroupElement",
    "Subgroup",
    "parse_type",
    "coxeter_matrix",
    "degree_table",
    "generate_root_system",
    "reflection_element",
    "enumerate_group",
    "reflection_subgroup",
    "subsystem_label",
]


# -- type symbols -----------------------------------------------------------

@dataclass(frozen=True, order=True)
class Factor:
    family: str
    rank: int
    m: int | None = None

    def __str__(self):
        if self.family == "I":
            return "G2" if self.m == 6 else f"I2({self.m})"
        return f"{self.family}{self.rank}"

    @property
    def degrees(self):
        return data.degrees(self.family, self.rank, self.m)


@dataclass(frozen=True)
class CoxeterType:
    factors: tuple

    @property
    def rank(self) -> int:
        return sum(f.rank for f in self.factors)

    @property
    def is_irreducible(self) -> bool:
        return len(self.factors) == 1

    def __str__(self):
        return "x".join(map(str, self.factors))


_FACTOR = re.compile(r"I2\((\d+)\)|([A-HJ-Z])(\d+)")


def parse_type(symbol: str) -> CoxeterType:
    """Parse ``FACTOR ('x' FACTOR)*``, e.g. ``"H4"``, ``"A2xB3"``, ``"I2(7)"``."""
    if not isinstance(symbol, str) or not symbol:
        raise TypeParseError("empty type symbol", str(symbol), 0)
    pos = 0
    factors = []
    while True:
        mt = _FACTOR.match(symbol, pos)
        if not mt:
            raise TypeParseError("expected a type factor", symbol, pos)
        factors.append(_validate_factor(mt, symbol, pos))
        pos = mt.end()
        if pos == len(symbol):
            break
        if symbol[pos] != "x":
            raise TypeParseError("expected 'x' between factors", symbol, pos)
        pos += 1
    return CoxeterType(tuple(factors))


def _validate_factor(mt, symbol, pos) -> Factor:
    if mt.group(1) is not None:
        m = int(mt.group(1))
        canonical = {2: "A1xA1", 3: "A2", 4: "B2", 6: "G2"}
        if m in canonical:
            raise TypeParseError(f"I2({m}) is not canonical, write {canonical[m]}", symbol, pos)
        if m < 2:
            raise TypeParseError("dihedral label must be >= 2", symbol, pos)
        return Factor("I", 2, m)
    fam, n = mt.group(2), int(mt.group(3))
    ok = {
        "A": n >= 1,
        "B": n >= 2,
        "D": n >= 4,
        "E": 6 <= n <= 8,
        "F": n == 4,
        "G": n == 2,
        "H": n in (3, 4),
    }
    if fam not in ok:
        raise TypeParseError(f"unknown family {fam!r}", symbol, pos)
    if not ok[fam]:
        raise TypeParseError(f"rank {n} out of range for family {fam}", symbol, pos)
    if fam == "G":
        return Factor("I", 2, 6)
    return Factor(fam, n)


def _factor_edges(f: Factor):
    """Edges (s, t, m) with m >= 3, 0-based, Bourbaki numbering."""
    n = f.rank
    path = [(i, i + 1, 3) for i in range(n - 1)]
    if f.family == "A":
        return path
    if f.family == "B":
        return path[:-1] + [(n - 2, n - 1, 4)]
    if f.family == "D":
        return [(i, i + 1, 3) for i in range(n - 2)] + [(n - 3, n - 1, 3)]
    if f.family == "E":
        return [(0, 2, 3), (2, 3, 3), (1, 3, 3)] + [(i, i + 1, 3) for i in range(3, n - 1)]
    if f.family == "F":
        return [(0, 1, 3), (1, 2, 4), (2, 3, 3)]
    if f.family == "H":
        return [(0, 1, 5)] + [(i, i + 1, 3) for i in range(1, n - 1)]
    if f.family == "I":
        return [(0, 1, f.m)]
    raise ValueError(f)


def coxeter_matrix(t: CoxeterType) -> tuple:
    n = t.rank
    M = [[1 if i == j else 2 for j in range(n)] for i in range(n)]
    off = 0
    for f in t.factors:
        for s, u, m in _factor_edges(f):
            M[off + s][off + u] = M[off + u][off + s] = m
        off += f.rank
    return tuple(map(tuple, M))


@dataclass(frozen=True)
class DegreeTable:
    """Degrees, exponents, Coxeter number and order of an irreducible type."""

    factor: Factor
    degrees: tuple

    @property
    def exponents(self):
        return tuple(d - 1 for d in self.degrees)

    @property
    def coxeter_number(self):
        return self.degrees[-1]

    @property
    def order(self):
        return data.group_order(self.degrees)

    @property
    def reflections(self):
        return sum(self.exponents)


def degree_table(t: CoxeterType) -> list[DegreeTable]:
    return [DegreeTable(f, f.degrees) for f in t.factors]


def group_order(t: CoxeterType) -> int:
    return math.prod(d.order for d in degree_table(t))


# -- group elements ---------------------------------------------------------

class GroupElement:
    """Signed permutation of the positive roots.

    ``images[i] = +(j+1)`` means w(beta_i) = beta_j and ``-(j+1)`` means
    w(beta_i) = -beta_j.  ``word`` is an optional reduced word and plays no
    part in equality.
    """

    __slots__ = ("images", "word", "_hash")

    def __init__(self, images, word=None):
        self.images = tuple(images)
        self.word = word
        self._hash = hash(self.images)

    @classmethod
    def identity(cls, N):
        return cls(range(1, N + 1), ())

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        a = self.images
        return GroupElement(tuple(a[x - 1] if x > 0 else -a[-x - 1] for x in other.images))

    def inverse(self) -> "GroupElement":
        out = [0] * len(self.images)
        for i, x in enumerate(self.images):
            if x > 0:
                out[x - 1] = i + 1
            else:
                out[-x - 1] = -(i + 1)
        word = tuple(reversed(self.word)) if self.word is not None else None
        return GroupElement(out, word)

    def act(self, i: int) -> tuple[int, int]:
        """(sign, j) with w(beta_i) = sign * beta_j."""
        x = self.images[i]
        return (1, x - 1) if x > 0 else (-1, -x - 1)

    def act_mask(self, mask: int) -> int:
        """Image of a set of positive-root indices (signs dropped)."""
        out = 0
        im = self.images
        while mask:
            low = mask & -mask
            i = low.bit_length() - 1
            out |= 1 << (abs(im[i]) - 1)
            mask ^= low
        return out

    @property
    def length(self) -> int:
        return sum(1 for x in self.images if x < 0)

    def is_identity(self) -> bool:
        return all(x == i + 1 for i, x in enumerate(self.images))

    def __eq__(self, other):
        return isinstance(other, GroupElement) and self.images == other.images

    def __hash__(self):
        return self._hash

    def __repr__(self):
        w = "".join(str(s + 1) for s in self.word) if self.word is not None else "?"
        return f"GroupElement(word={w or 'e'})"


# -- root systems -----------------------------------------------------------

class RootSystem:
    """Positive roots of a finite Coxeter group in simple-root coordinates.

    The first ``rank`` roots are the simple roots.  Roots are ordered breadth
    first from the simple roots, each layer sorted by coordinates.
    """

    def __init__(self, ctype: CoxeterType):
        self.type = ctype
        self.coxeter_matrix = coxeter_matrix(ctype)
        self.rank = n = ctype.rank
        labels = {m for row in self.coxeter_matrix for m in row if m >= 4}
        M = reduce(lambda a, b: a * b // math.gcd(a, b), labels, 1) if labels else 3
        self.field = F = minimal_polynomial_2cos(M)
        # twice the Gram matrix, entries in Z[theta]
        self.gram2 = FieldMatrix(F, [
            [F(2) if i == j else -F.two_cos_pi_over(self.coxeter_matrix[i][j]) for j in range(n)]
            for i in range(n)
        ])
        self.gram = FieldMatrix(F, [[x / 2 for x in row] for row in self.gram2.rows])
        self._generate()

    # generation ---------------------------------------------------------
    def _reflect_simple(self, beta, t):
        c = sum((beta[s] * self.gram2.rows[s][t] for s in range(self.rank)), self.field.zero)
        out = list(beta)
        out[t] = out[t] - c
        return tuple(out)

    def _generate(self):
        n, F = self.rank, self.field
        expected = sum(d.reflections for d in degree_table(self.type))
        simple = [tuple(F.one if i == j else F.zero for i in range(n)) for j in range(n)]
        roots = list(simple)
        index = {r: i for i, r in enumerate(roots)}
        parent = [None] * n
        layer = list(range(n))
        while layer:
            found = {}
            for i in layer:
                for t in range(n):
                    if i == t:
                        continue
                    img = self._reflect_simple(roots[i], t)
                    if img == roots[i] or img in index or img in found:
                        continue
                    found[img] = (i, t)
            layer = []
            for img in sorted(found, key=_coord_key):
                index[img] = len(roots)
                roots.append(img)
                parent.append(found[img])
                layer.append(index[img])
            if len(roots) > expected:
                raise CorrectnessAlarm(f"{self.type}: root generation exceeded N={expected}")
        if len(roots) != expected:
            raise CorrectnessAlarm(f"{self.type}: generated {len(roots)} roots, expected {expected}")
        self.roots = tuple(roots)
        self.index = index
        self.parent = tuple(parent)
        self.N = len(roots)

        simple_refl = []
        for t in range(n):
            images = []
            for i, r in enumerate(roots):
                if i == t:
                    images.append(-(t + 1))
                else:
                    images.append(index[self._reflect_simple(r, t)] + 1)
            simple_refl.append(GroupElement(images, (t,)))
        self.simple_reflections = tuple(simple_refl)

    # derived data -------------------------------------------------------
    @cached_property
    def supports(self) -> tuple[int, ...]:
        """Bitmask over S of the nonzero coordinates of each root."""
        return tuple(sum(1 << s for s, c in enumerate(r) if not c.is_zero()) for r in self.roots)

    @property
    def full_mask(self) -> int:
        return (1 << self.rank) - 1

    @cached_property
    def ring(self) -> IntegerRing:
        return IntegerRing(self.field)

    @cached_property
    def functionals(self) -> np.ndarray:
        """(N, n, d) integer array: row i is 2*Gram*beta_i, the functional
        v -> 2B(beta_i, v) in simple-root coordinates."""
        G = self.gram2.rows
        out = []
        for r in self.roots:
            out.append([sum((G[s][t] * r[t] for t in range(self.rank)), self.field.zero)
                        for s in range(self.rank)])
        return np.stack([self.ring.encode_vector(v) for v in out])

    def bilinear(self, u, v) -> AlgebraicNumber:
        G = self.gram.rows
        return sum((u[s] * G[s][t] * v[t] for s in range(self.rank) for t in range(self.rank)
                    if not u[s].is_zero() and not v[t].is_zero()), self.field.zero)

    def reflect(self, beta_index: int, v):
        """Euclidean reflection of a coordinate vector in the hyperplane of a root."""
        beta = self.roots[beta_index]
        c = 2 * self.bilinear(v, beta)
        return tuple(x - c * b for x, b in zip(v, beta))

    @cached_property
    def reflections(self) -> tuple[GroupElement, ...]:
        out = list(self.simple_reflections)
        for i in range(self.rank, self.N):
            p, t = self.parent[i]
            s = self.simple_reflections[t]
            r = s * out[p] * s
            out.append(r)
        return tuple(out)

    @cached_property
    def degree_tables(self):
        return degree_table(self.type)

    @property
    def order(self) -> int:
        return group_order(self.type)

    @cached_property
    def digest(self) -> str:
        import hashlib
        h = hashlib.sha256(str(self.type).encode())
        for r in self.roots:
            h.update(repr([[str(c) for c in x.coefficients] for x in r]).encode())
        return h.hexdigest()[:16]

    def __repr__(self):
        return f"RootSystem({self.type}, N={self.N})"


def _coord_key(root):
    return tuple(tuple(c.coefficients) for c in root)


_ROOT_SYSTEMS: dict = {}


def generate_root_system(t) -> RootSystem:
    """Positive root system for a type (or symbol); cached per type."""
    if isinstance(t, str):
        t = parse_type(t)
    rs = _ROOT_SYSTEMS.get(t)
    if rs is None:
        rs = _ROOT_SYSTEMS[t] = RootSystem(t)
    return rs


def reflection_element(rs: RootSystem, root_index: int) -> GroupElement:
    if not 0 <= root_index < rs.N:
        raise IndexError(f"root index {root_index} out of range 0..{rs.N - 1}")
    return rs.reflections[root_index]


def enumerate_group(rs: RootSystem, limit: int = 10**6) -> list[GroupElement]:
    """All elements by breadth-first right multiplication with simple
    reflections; each element carries its shortlex-minimal reduced word."""
    order = rs.order
    if order > limit:
        raise ResourceLimitError(f"W({rs.type})", order, limit)
    e = GroupElement.identity(rs.N)
    seen = {e: e}
    out = [e]
    k = 0
    while k < len(out):
        w = out[k]
        k += 1
        for t, s in enumerate(rs.simple_reflections):
            ws = w * s
            if ws not in seen:
                ws.word = w.word + (t,)
                seen[ws] = ws
                out.append(ws)
    if len(out) != order:
        raise CorrectnessAlarm(f"enumerated {len(out)} elements, degree table says {order}")
    return out


# -- reflection subgroups ---------------------------------------------------

@dataclass(frozen=True)
class Subgroup:
    roots: frozenset
    simple: tuple
    order: int
    rank: int
    label: str


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def reflection_closure(rs: RootSystem, roots) -> frozenset:
    closed = set(roots)
    todo = list(closed)
    while todo:
        b = todo.pop()
        rb = rs.reflections[b]
        for g in list(closed):
            _, j = rb.act(g)
            if j not in closed:
                closed.add(j)
                todo.append(j)
    return frozenset(closed)


def simple_subsystem(rs: RootSystem, closed) -> tuple:
    """Simple roots of a closed positive subsystem: beta is simple iff its
    reflection sends no other root of the subsystem to a negative root."""
    out = []
    for b in sorted(closed):
        rb = rs.reflections[b]
        if all(rb.images[g] > 0 for g in closed if g != b):
            out.append(b)
    return tuple(out)


def reflection_subgroup(rs: RootSystem, roots, limit: int = 10**6) -> Subgroup:
    """Close a set of positive roots under mutual reflections and enumerate
    the generated group acting on that closed set."""
    closed = reflection_closure(rs, roots)
    simple = simple_subsystem(rs, closed)
    idx = sorted(closed)
    pos = {g: k for k, g in enumerate(idx)}
    gens = []
    for b in simple:
        im = rs.reflections[b].images
        gens.append(tuple((pos[abs(im[g]) - 1] + 1) * (1 if im[g] > 0 else -1) for g in idx))
    label, degs = _label_and_degrees(rs, simple)
    expected = math.prod(degs)
    if expected > limit:
        raise ResourceLimitError("reflection subgroup", expected, limit)
    e = tuple(range(1, len(idx) + 1))
    seen = {e}
    frontier = [e]
    while frontier:
        nxt = []
        for w in frontier:
            for g in gens:
                wg = tuple(w[x - 1] if x > 0 else -w[-x - 1] for x in g)
                if wg not in seen:
                    seen.add(wg)
                    nxt.append(wg)
        frontier = nxt
    if len(seen) != expected:
        raise CorrectnessAlarm(f"subgroup {label}: enumerated {len(seen)}, degrees give {expected}")
    return Subgroup(closed, simple, len(seen), len(simple), label)


def subsystem_label(rs: RootSystem, roots) -> str:
    """Isomorphism type of the reflection group generated by a closed root set."""
    closed = reflection_closure(rs, roots)
    return _label_and_degrees(rs, simple_subsystem(rs, closed))[0]


def _pair_label(rs: RootSystem, a: int, b: int) -> int:
    val = -2 * rs.bilinear(rs.roots[a], rs.roots[b])   # = 2cos(pi/m)
    x = max(-1.0, min(1.0, float(val) / 2))
    m = round(math.pi / math.acos(x)) if x < 1 else 0
    try:
        ok = m >= 2 and val == rs.field.two_cos_pi_over(m)
    except ValueError:
        ok = False
    if not ok:
        raise CorrectnessAlarm(f"roots {a}, {b} do not form a Coxeter angle")
    return m


def _label_and_degrees(rs: RootSystem, simple) -> tuple[str, tuple]:
    nodes = list(simple)
    if not nodes:
        return "A0", ()
    edges = {}
    for a, b in combinations(nodes, 2):
        m = _pair_label(rs, a, b)
        if m >= 3:
            edges[(a, b)] = m
    comps = _components(nodes, edges)
    factors = sorted(_classify(c, edges) for c in comps)
    names = [str(f) for f in factors]
    parts = []
    for name in dict.fromkeys(names):
        k = names.count(name)
        parts.append(name if k == 1 else f"{name}^{k}")
    degs = tuple(sorted(d for f in factors for d in f.degrees))
    return "x".join(parts), degs


def _components(nodes, edges):
    adj = {v: set() for v in nodes}
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    seen, comps = set(), []
    for v in nodes:
        if v in seen:
            continue
        stack, comp = [v], []
        seen.add(v)
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        comps.append(comp)
    return comps


def _classify(comp, edges) -> Factor:
    k = len(comp)
    es = {e: m for e, m in edges.items() if e[0] in comp}
    labels = sorted(es.values())
    if k == 1:
        return Factor("A", 1)
    if k == 2:
        m = labels[0]
        return {3: Factor("A", 2), 4: Factor("B", 2)}.get(m, Factor("I", 2, m))
    deg = {v: 0 for v in comp}
    for a, b in es:
        deg[a] += 1
        deg[b] += 1
    if len(es) != k - 1:
        raise CorrectnessAlarm("Coxeter graph of a finite subsystem is not a tree")
    big = [m for m in labels if m > 3]
    branch = [v for v in comp if deg[v] == 3]
    if not big and not branch:
        return Factor("A", k)
    if branch:
        arms = sorted(_arm_lengths(branch[0], es))
        if arms[:2] == [1, 1]:
            return Factor("D", k)
        return Factor("E", k)
    (m,) = big
    (edge,) = [e for e, x in es.items() if x == m]
    at_end = any(deg[v] == 1 for v in edge)
    if m == 4:
        return Factor("B", k) if at_end else Factor("F", 4)
    if m == 5:
        return Factor("H", k)
    raise CorrectnessAlarm(f"unexpected label {m} in rank-{k} component")


def _arm_lengths(centre, es):
    adj = {}
    for a, b in es:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    out = []
    for start in adj[centre]:
        prev, cur, n = centre, start, 1
        while True:
            nxt = [y for y in adj[cur] if y != prev]
            if not nxt:
                break
            prev, cur, n = cur, nxt[0], n + 1
        out.append(n)
    return out
