"""Flats, intersection lattices, chambers and faces of reflection arrangements.

A flat is identified by its saturated root set: the positive roots whose
hyperplanes contain it, stored as a bitmask over root indices.  Geometry is
only needed to saturate new intersections (integer arithmetic over Z[theta])
and to decide whether a flat meets a closed chamber or face only at the
origin (exact Fourier-Motzkin over the field).
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .coxeter import GroupElement, RootSystem
from .errors import InsufficientDepthError, ResourceLimitError
from .exact import FieldMatrix, kernel, sign

__all__ = [
    "Flat",
    "IntersectionLattice",
    "Restriction",
    "Chamber",
    "Face",
    "flat_from_roots",
    "build_lattice",
    "restriction",
    "cone_trivial",
    "cone_trivial_rays",
    "face",
    "fm_feasible",
    "bits",
    "mask_of",
]


def bits(mask: int):
    """Indices of the set bits, increasing."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


@dataclass(frozen=True)
class Flat:
    """A flat given by its saturated set of positive-root indices."""

    mask: int
    codim: int
    ambient_rank: int = field(compare=False)

    @property
    def dim(self) -> int:
        return self.ambient_rank - self.codim

    @property
    def root_set(self) -> tuple:
        return tuple(bits(self.mask))

    def contains(self, other: "Flat") -> bool:
        """True if ``other`` is a subspace of this flat."""
        return self.mask & ~other.mask == 0

    def sort_key(self):
        return (self.codim, self.root_set)

    def __repr__(self):
        return f"Flat(dim={self.dim}, roots={list(self.root_set)})"


# -- saturation over Z[theta] -----------------------------------------------

def _identity_basis(rs: RootSystem):
    n, d = rs.rank, rs.field.degree
    B = np.zeros((n, n, d), dtype=np.int64)
    for s in range(n):
        B[s, s, 0] = 1
    return B


def _intersect(rs: RootSystem, basis, beta: int):
    """Basis of (span basis) intersected with the hyperplane of ``beta``."""
    ring = rs.ring
    k = basis.shape[0]
    if k == 0:
        return basis
    v = ring.pair(rs.functionals[beta][None], basis)[0]
    nz = [j for j in range(k) if v[j].any()]
    if not nz:
        return basis
    j0 = nz[0]
    out = []
    for j in range(k):
        if j == j0:
            continue
        if v[j].any():
            x = ring.mul(v[j0], basis[j]) - ring.mul(v[j], basis[j0])
        else:
            x = basis[j]
        out.append(ring.content_reduce(x))
    if not out:
        return basis[:0]
    return np.stack(out) if all(o.dtype == out[0].dtype for o in out) else \
        np.stack([o.astype(object) for o in out])


def _saturate(rs: RootSystem, basis) -> int:
    if basis.shape[0] == 0:
        return (1 << rs.N) - 1
    P = rs.ring.pair(rs.functionals, basis)
    zero = ~P.reshape(rs.N, -1).astype(bool).any(axis=1)
    return int.from_bytes(np.packbits(zero, bitorder="little").tobytes(), "little")


def _basis_for(rs: RootSystem, roots):
    B = _identity_basis(rs)
    for b in roots:
        B = _intersect(rs, B, b)
    return B


def flat_from_roots(rs: RootSystem, roots) -> Flat:
    """The flat cut out by the hyperplanes of ``roots``, saturated."""
    B = _basis_for(rs, roots)
    return Flat(_saturate(rs, B), rs.rank - B.shape[0], rs.rank)


# -- lattice ----------------------------------------------------------------

def _children(rs: RootSystem, parent_mask: int, basis):
    covered = parent_mask
    out = []
    for b in range(rs.N):
        if covered >> b & 1:
            continue
        cb = _intersect(rs, basis, b)
        cm = _saturate(rs, cb)
        covered |= cm
        out.append((cm, cb))
    return out


def _children_chunk(args):
    rs, items = args
    return [(pm, _children(rs, pm, b)) for pm, b in items]


class IntersectionLattice:
    """Flats of a reflection arrangement graded by codimension.

    ``flats`` is in canonical order (codimension, then sorted root indices);
    ``parents[i]`` lists the flats covering flat ``i`` (one codimension less).
    """

    def __init__(self, rs: RootSystem, max_codim: int, levels, parents, bases=None):
        self.roots = rs
        self.max_codim = max_codim
        self.flats = [f for lvl in levels for f in lvl]
        self.id_of = {f.mask: i for i, f in enumerate(self.flats)}
        self.levels = []
        k = 0
        for lvl in levels:
            self.levels.append(list(range(k, k + len(lvl))))
            k += len(lvl)
        self.parents = parents
        self._bases = bases if bases is not None else {}

    @property
    def rank(self) -> int:
        return self.roots.rank

    @property
    def is_complete(self) -> bool:
        return self.max_codim == self.rank

    def __len__(self):
        return len(self.flats)

    def __getitem__(self, i) -> Flat:
        return self.flats[i]

    def level(self, codim: int) -> list[int]:
        if codim > self.max_codim:
            raise InsufficientDepthError(codim, self.max_codim)
        return self.levels[codim]

    @property
    def hyperplanes(self) -> list[int]:
        return self.level(1)

    def whitney_numbers(self) -> list[int]:
        return [len(l) for l in self.levels]

    def find(self, mask: int) -> int:
        return self.id_of[mask]

    def basis(self, i: int):
        b = self._bases.get(i)
        if b is None:
            b = self._bases[i] = _basis_for(self.roots, self.flats[i].root_set)
        return b

    @cached_property
    def children(self) -> list[list[int]]:
        out = [[] for _ in self.flats]
        for i, ps in enumerate(self.parents):
            for p in ps:
                out[p].append(i)
        return out

    @cached_property
    def ancestors(self) -> list[int]:
        """Bitset (over flat ids) of the flats strictly containing each flat."""
        anc = [0] * len(self.flats)
        for i, ps in enumerate(self.parents):
            a = 0
            for p in ps:
                a |= anc[p] | (1 << p)
            anc[i] = a
        return anc

    def below(self, x: int) -> list[int]:
        """Ids of flats contained in flat ``x`` (including ``x``), by codimension."""
        bit = 1 << x
        anc = self.ancestors
        c = self.flats[x].codim
        out = [x]
        for lvl in self.levels[c + 1:]:
            out.extend(z for z in lvl if anc[z] & bit)
        return out

    def __repr__(self):
        return f"IntersectionLattice({self.roots.type}, levels={self.whitney_numbers()})"


def build_lattice(rs: RootSystem, max_codim: int | None = None, workers: int = 1,
                  max_flats: int = 2_000_000) -> IntersectionLattice:
    """Flats of codimension <= ``max_codim``, level by level: intersect every
    flat with every hyperplane not containing it, saturate, deduplicate."""
    n = rs.rank
    if max_codim is None:
        max_codim = n
    if not 0 <= max_codim <= n:
        raise ValueError(f"max_codim must lie in 0..{n}")
    top = Flat(0, 0, n)
    levels = [[top]]
    parents = [()]
    bases = {0: _identity_basis(rs)}
    cur_bases = [bases[0]]
    total = 1
    pool = ProcessPoolExecutor(workers) if workers > 1 else None
    try:
        for k in range(1, max_codim + 1):
            prev = levels[-1]
            items = [(f.mask, b) for f, b in zip(prev, cur_bases)]
            if pool is None:
                results = [(pm, _children(rs, pm, b)) for pm, b in items]
            else:
                size = max(1, len(items) // (4 * workers))
                chunks = [(rs, items[i:i + size]) for i in range(0, len(items), size)]
                results = [r for part in pool.map(_children_chunk, chunks) for r in part]
            found = {}
            par = {}
            for pm, kids in results:
                for cm, cb in kids:
                    if cm not in found:
                        found[cm] = cb
                        par[cm] = []
                    par[cm].append(pm)
            total += len(found)
            if total > max_flats:
                raise ResourceLimitError(f"flats up to codimension {k}", total, max_flats)
            order = sorted(found, key=lambda m: tuple(bits(m)))
            levels.append([Flat(m, k, n) for m in order])
            offset = sum(len(l) for l in levels[:-1])
            prev_offset = offset - len(prev)
            prev_id = {f.mask: prev_offset + i for i, f in enumerate(prev)}
            for i, m in enumerate(order):
                parents.append(tuple(sorted(prev_id[p] for p in par[m])))
                bases[offset + i] = found[m]
            cur_bases = [found[m] for m in order]
    finally:
        if pool is not None:
            pool.shutdown()
    return IntersectionLattice(rs, max_codim, levels, parents, bases)


# -- restrictions -----------------------------------------------------------

@dataclass
class Restriction:
    """The arrangement A^X on a flat X: flats of L contained in X, graded by
    codimension relative to X."""

    lattice: IntersectionLattice
    flat: int
    levels: list

    @property
    def rank(self) -> int:
        return self.lattice.flats[self.flat].dim

    @property
    def hyperplanes(self) -> list[int]:
        return self.levels[1] if len(self.levels) > 1 else []

    @property
    def is_complete(self) -> bool:
        return len(self.levels) == self.rank + 1

    def flats(self):
        return [z for lvl in self.levels for z in lvl]


def restriction(L: IntersectionLattice, x: int | Flat) -> Restriction:
    if isinstance(x, Flat):
        x = L.find(x.mask)
    X = L.flats[x]
    need = min(X.codim + 1, L.rank)
    if L.max_codim < need:
        raise InsufficientDepthError(need, L.max_codim)
    below = L.below(x)
    levels = [[] for _ in range(min(L.max_codim, L.rank) - X.codim + 1)]
    for z in below:
        levels[L.flats[z].codim - X.codim].append(z)
    return Restriction(L, x, levels)


# -- chambers and faces -----------------------------------------------------

@dataclass(frozen=True)
class Chamber:
    """The chamber w*C0 of a reflection arrangement."""

    element: GroupElement

    def sign_vector(self) -> tuple:
        """Sign of each positive root on the chamber's interior."""
        inv = self.element.inverse()
        return tuple(1 if x > 0 else -1 for x in inv.images)


@dataclass(frozen=True)
class Face:
    """The face w*C0^J, where C0^J = C0 intersected with the walls in J."""

    element: GroupElement
    walls: int   # bitmask over simple reflections

    def dim(self, rank: int) -> int:
        return rank - bin(self.walls).count("1")

    def span(self, rs: RootSystem) -> int:
        """Root mask of the flat spanned by the face."""
        std = flat_from_roots(rs, list(bits(self.walls))).mask
        return self.element.act_mask(std)

    def sign_vector(self, rs: RootSystem) -> tuple:
        inv = self.element.inverse()
        std = flat_from_roots(rs, list(bits(self.walls))).mask
        out = []
        for x in inv.images:
            j = abs(x) - 1
            out.append(0 if std >> j & 1 else (1 if x > 0 else -1))
        return tuple(out)


def face(C: Chamber, walls) -> Face:
    if not isinstance(walls, int):
        walls = mask_of(walls)
    return Face(C.element, walls)


def span_dim(F: Face, rank: int) -> int:
    """Dimension of the span of a face; faces of a simplicial cone have
    dim = rank - |walls|."""
    return F.dim(rank)


# -- exact cone feasibility -------------------------------------------------

def fm_feasible(field, nvars: int, equalities, inequalities) -> bool:
    """Decide whether {c : a.c = b for equalities, a.c >= b for inequalities}
    is nonempty, by substitution and Fourier-Motzkin elimination."""
    eqs = [(list(a), b) for a, b in equalities]
    ineqs = [(list(a), b) for a, b in inequalities]
    while eqs:
        a, b = eqs.pop()
        j = next((j for j in range(nvars) if not a[j].is_zero()), None)
        if j is None:
            if not b.is_zero():
                return False
            continue
        inv = a[j].inverse()
        a = [x * inv for x in a]
        b = b * inv

        def sub(row):
            r, rb = row
            f = r[j]
            if f.is_zero():
                return row
            return [x - f * y for x, y in zip(r, a)], rb - f * b

        eqs = [sub(r) for r in eqs]
        ineqs = [sub(r) for r in ineqs]

    rows = _normalise(ineqs)
    if rows is None:
        return False
    live = set(j for a, _ in rows for j in range(nvars) if not a[j].is_zero())
    while live:
        best = None
        for j in live:
            p = sum(1 for a, _ in rows if sign(a[j]) > 0)
            q = sum(1 for a, _ in rows if sign(a[j]) < 0)
            cost = p * q - p - q
            if best is None or cost < best[0]:
                best = (cost, j)
        j = best[1]
        pos, neg, keep = [], [], []
        for a, b in rows:
            s = sign(a[j])
            (pos if s > 0 else neg if s < 0 else keep).append((a, b))
        for ap, bp in pos:
            for an, bn in neg:
                fp, fn = -an[j], ap[j]   # both positive
                keep.append(([fp * x + fn * y for x, y in zip(ap, an)], fp * bp + fn * bn))
        rows = _normalise(keep)
        if rows is None:
            return False
        live = set(k for a, _ in rows for k in range(nvars) if not a[k].is_zero())
    return True


def _normalise(rows):
    """Scale each inequality so its first nonzero coefficient is +-1, drop
    duplicates; None if some constant inequality 0 >= b fails."""
    seen = {}
    for a, b in rows:
        lead = next((x for x in a if not x.is_zero()), None)
        if lead is None:
            if sign(b) > 0:
                return None
            continue
        f = lead.inverse()
        if sign(f) < 0:
            f = -f
        a2 = tuple(x * f for x in a)
        seen.setdefault((a2, b * f), None)
    return [(list(a), b) for a, b in seen]


def _flat_kernel(rs: RootSystem, mask: int):
    G = rs.gram.rows
    rows = []
    for b in bits(mask):
        beta = rs.roots[b]
        rows.append([sum((G[s][t] * beta[t] for t in range(rs.rank)), rs.field.zero)
                     for s in range(rs.rank)])
    if not rows:
        F = rs.field
        return [tuple(F.one if i == j else F.zero for i in range(rs.rank)) for j in range(rs.rank)]
    return kernel(FieldMatrix(rs.field, rows, rs.rank))


def cone_trivial(rs: RootSystem, x_mask: int, element: GroupElement | None = None,
                 walls: int = 0) -> bool:
    """Decide X meets the closed face w*C0^J only at the origin (J=0: the chamber).

    Reduces to the fundamental chamber via w^-1 X, parametrises X by an exact
    kernel basis x_1..x_d and tests feasibility of
    {sum_j c_j <a_s, x_j> >= 0 (s not in J), = 0 (s in J), sum over s = 1}.
    """
    if element is not None:
        x_mask = element.inverse().act_mask(x_mask)
    basis = _flat_kernel(rs, x_mask)
    if not basis:
        return True
    F = rs.field
    G = rs.gram.rows
    n = rs.rank
    # a[s][j] = B(alpha_s, x_j)
    a = [[sum((G[s][t] * x[t] for t in range(n)), F.zero) for x in basis] for s in range(n)]
    eqs, ineqs = [], []
    for s in range(n):
        (eqs if walls >> s & 1 else ineqs).append((a[s], F.zero))
    total = [sum((a[s][j] for s in range(n)), F.zero) for j in range(len(basis))]
    eqs.append((total, F.one))
    return not fm_feasible(F, len(basis), eqs, ineqs)


def cone_trivial_rays(rs: RootSystem, x_mask: int, word=()) -> bool:
    """Independent check of X ∩ wC0 = {0}: build the extreme rays w*omega_t of
    the simplicial cone explicitly and ask for a nonnegative, nonzero
    combination of them lying in X."""
    F = rs.field
    n = rs.rank
    Ginv = rs.gram.inverse().rows
    rays = [tuple(Ginv[s][t] for s in range(n)) for t in range(n)]
    G2 = rs.gram2.rows
    for s in reversed(tuple(word)):
        new = []
        for v in rays:
            c = sum((G2[s][t] * v[t] for t in range(n)), F.zero)
            v = list(v)
            v[s] = v[s] - c
            new.append(tuple(v))
        rays = new
    eqs = []
    for b in bits(x_mask):
        beta = rs.roots[b]
        eqs.append(([rs.bilinear(beta, r) for r in rays], F.zero))
    eqs.append(([F.one] * n, F.one))
    unit = [[F.one if i == j else F.zero for i in range(n)] for j in range(n)]
    ineqs = [(u, F.zero) for u in unit]
    return not fm_feasible(F, n, eqs, ineqs)
