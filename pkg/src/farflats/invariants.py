"""Möbius function, characteristic polynomials, beta invariants, parabolic
types and Orlik-Solomon data of reflection arrangements and restrictions."""
from __future__ import annotations

import hashlib
from collections import Counter
from dataclasses import dataclass
from itertools import combinations

from . import data
from .arrangement import IntersectionLattice, Restriction, bits, flat_from_roots, restriction
from .coxeter import reflection_subgroup, subsystem_label
from .errors import CorrectnessAlarm, InsufficientDepthError, ResourceLimitError

__all__ = [
    "IntPolynomial",
    "ParabolicType",
    "OrbitData",
    "OSData",
    "OSMatrix",
    "mobius",
    "interval_mobius",
    "characteristic_polynomial",
    "region_count",
    "beta",
    "orbits",
    "os_exponents",
    "os_matrix",
    "nu",
    "normalizer_index",
    "subgroup_order",
]


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial, coefficients low -> high."""

    coefficients: tuple

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, t):
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * t + c
        return acc

    def derivative(self) -> "IntPolynomial":
        c = self.coefficients
        return IntPolynomial(tuple(i * c[i] for i in range(1, len(c))) or (0,))

    @classmethod
    def from_roots(cls, roots) -> "IntPolynomial":
        c = [1]
        for r in roots:
            c = [0] + c
            for i in range(len(c) - 1):
                c[i] -= r * c[i + 1]
        return cls(tuple(c))

    def positive_integer_roots(self) -> tuple:
        """All roots, by trial division over 1..|constant term|.

        Raises CorrectnessAlarm if the polynomial does not split into linear
        factors with positive integer roots.
        """
        c = list(self.coefficients)
        roots = []
        while len(c) > 1:
            if c[0] == 0:
                raise CorrectnessAlarm(f"{self} has root 0")
            for r in range(1, abs(c[0]) + 1):
                if abs(c[0]) % r:
                    continue
                q, rem = _divide_linear(c, r)
                if rem == 0:
                    roots.append(r)
                    c = q
                    break
            else:
                raise CorrectnessAlarm(f"{self} does not split over the positive integers")
        return tuple(sorted(roots))

    def __str__(self):
        terms = []
        for i, a in reversed(list(enumerate(self.coefficients))):
            if a:
                mon = "" if i == 0 else "t" if i == 1 else f"t^{i}"
                coef = str(a) if (abs(a) != 1 or i == 0) else ("-" if a < 0 else "")
                terms.append(f"{coef}{mon}")
        return " + ".join(terms).replace("+ -", "- ") or "0"


def _divide_linear(c, r):
    """Synthetic division of sum c_i t^i by (t - r)."""
    n = len(c) - 1
    q = [0] * n
    acc = 0
    for i in range(n, 0, -1):
        acc = acc * r + c[i]
        q[i - 1] = acc
    rem = acc * r + c[0]
    return q, rem


# -- Möbius function and characteristic polynomials ------------------------

def interval_mobius(L: IntersectionLattice, x: int = 0) -> dict:
    """mu(X, Z) for every flat Z contained in X (order: reverse inclusion)."""
    below = L.below(x)
    inside = 0
    for z in below:
        inside |= 1 << z
    anc = L.ancestors
    mu = {x: 1}
    for z in below[1:]:
        mu[z] = -sum(mu[y] for y in bits(anc[z] & inside))
    return mu


def mobius(L: IntersectionLattice) -> list:
    """mu(V, X) for every flat X of the lattice."""
    mu = interval_mobius(L, 0)
    return [mu[i] for i in range(len(L))]


def _as_restriction(obj) -> Restriction:
    if isinstance(obj, Restriction):
        return obj
    if isinstance(obj, IntersectionLattice):
        return restriction(obj, 0)
    raise TypeError(f"expected a lattice or restriction, got {type(obj).__name__}")


def characteristic_polynomial(obj) -> IntPolynomial:
    """chi(A, t) = sum over flats X of mu(V, X) t^dim(X) (for a restriction
    A^X: over flats inside X with the interval Möbius function)."""
    R = _as_restriction(obj)
    L = R.lattice
    if not R.is_complete:
        X = L.flats[R.flat]
        raise InsufficientDepthError(L.rank, L.max_codim) if X.dim else None
    mu = interval_mobius(L, R.flat)
    coeffs = [0] * (R.rank + 1)
    for z, m in mu.items():
        coeffs[L.flats[z].dim] += m
    return IntPolynomial(tuple(coeffs))


def region_count(obj) -> int:
    """Number of chambers, (-1)^rank chi(-1)."""
    R = _as_restriction(obj)
    return (-1) ** R.rank * characteristic_polynomial(R)(-1)


def beta(obj) -> int:
    """Crapo's beta invariant (-1)^(rank-1) chi'(1)."""
    R = _as_restriction(obj)
    chi = characteristic_polynomial(R)
    return (-1) ** (R.rank - 1) * chi.derivative()(1)


# -- parabolic types ---------------------------------------------------------

@dataclass(frozen=True)
class ParabolicType:
    id: int
    codim: int
    representative: int     # flat id
    members: tuple          # flat ids
    label: str
    subgroup_order: int

    @property
    def size(self) -> int:
        return len(self.members)


class OrbitData:
    """W-orbits of flats (parabolic types) of a lattice."""

    def __init__(self, types, orbit_of):
        self.types = types
        self.orbit_of = orbit_of
        self._by_label = {t.label: t for t in types}

    def __len__(self):
        return len(self.types)

    def __iter__(self):
        return iter(self.types)

    def __getitem__(self, i) -> ParabolicType:
        return self.types[i]

    def of(self, flat_id: int) -> ParabolicType:
        return self.types[self.orbit_of[flat_id]]

    def by_label(self, label: str) -> ParabolicType:
        try:
            return self._by_label[label]
        except KeyError:
            raise KeyError(f"no parabolic type {label!r}; have {sorted(self._by_label)}") from None

    def at_codim(self, k: int) -> list:
        return [t for t in self.types if t.codim == k]


def orbits(L: IntersectionLattice) -> OrbitData:
    """Orbits of the W-action on flats, generated by simple reflections acting
    on root sets.  Types are numbered by codimension, then subgroup order,
    then label, then representative."""
    rs = L.roots
    gens = rs.simple_reflections
    orbit_of = [-1] * len(L)
    raw = []
    for i, X in enumerate(L.flats):
        if orbit_of[i] >= 0:
            continue
        members = [i]
        orbit_of[i] = len(raw)
        k = 0
        while k < len(members):
            m = L.flats[members[k]].mask
            k += 1
            for g in gens:
                j = L.id_of[g.act_mask(m)]
                if orbit_of[j] < 0:
                    orbit_of[j] = len(raw)
                    members.append(j)
        members.sort()
        label = subsystem_label(rs, X.root_set)
        order = _label_order(label)
        raw.append((X.codim, order, label, members[0], tuple(members)))
    raw.sort()
    # disambiguate isomorphic but distinct orbits
    counts = Counter(r[2] for r in raw)
    suffix = {}
    for lab, c in counts.items():
        if c > 1:
            same = sorted((r for r in raw if r[2] == lab), key=lambda r: (len(r[4]), r[3]))
            for k, r in enumerate(same):
                suffix[r[3]] = "'" * (k + 1)
    types = []
    orbit_of = [-1] * len(L)
    for tid, (codim, order, label, rep, members) in enumerate(raw):
        types.append(ParabolicType(tid, codim, rep, members, label + suffix.get(rep, ""), order))
        for z in members:
            orbit_of[z] = tid
    return OrbitData(types, orbit_of)


def _label_order(label: str) -> int:
    from .coxeter import parse_type
    if label == "A0":
        return 1
    total = 1
    for part in label.split("x"):
        base, _, power = part.partition("^")
        f = parse_type(base).factors[0]
        total *= data.group_order(f.degrees) ** int(power or 1)
    return total


# -- Orlik-Solomon data ------------------------------------------------------

@dataclass(frozen=True)
class OSData:
    exponents: tuple
    provenance: str          # "computed" | "bundled"

    @property
    def beta(self) -> int:
        out = 1
        for b in self.exponents[1:]:
            out *= b - 1
        return out


def os_exponents(L: IntersectionLattice, x: int, orbit_data: OrbitData | None = None) -> OSData:
    """Roots of chi(A^X, t): computed by factoring when the lattice is
    complete, else looked up in the bundled tables."""
    X = L.flats[x]
    if X.dim == 0:
        return OSData((), "computed")
    if L.is_complete:
        chi = characteristic_polynomial(restriction(L, x))
        return OSData(chi.positive_integer_roots(), "computed")
    label = orbit_data.of(x).label if orbit_data else subsystem_label(L.roots, X.root_set)
    key = (str(L.roots.type), label)
    if key in data.BUNDLED_OS_EXPONENTS:
        return OSData(data.BUNDLED_OS_EXPONENTS[key], "bundled")
    raise InsufficientDepthError(L.rank, L.max_codim)


@dataclass(frozen=True)
class OSMatrix:
    """u[X][Y] = number of flats of type Y inside a fixed flat of type X."""

    types: tuple
    entries: tuple

    def __getitem__(self, xy):
        x, y = xy
        return self.entries[x][y]

    def row(self, x) -> tuple:
        return self.entries[x]


def os_matrix(L: IntersectionLattice, od: OrbitData) -> OSMatrix:
    rows = []
    for T in od.types:
        row = [0] * len(od)
        for z in L.below(T.representative):
            row[od.orbit_of[z]] += 1
        rows.append(tuple(row))
    return OSMatrix(tuple(od.types), tuple(rows))


def standard_flat(L: IntersectionLattice, J) -> int:
    """Id of the flat V^J fixed by the standard parabolic subgroup <J>."""
    if isinstance(J, int):
        J = list(bits(J))
    f = flat_from_roots(L.roots, list(J))
    return L.find(f.mask)


def nu(L: IntersectionLattice, od: OrbitData) -> list:
    """nu[t] = number of subsets J of S whose standard flat has type t."""
    out = [0] * len(od)
    n = L.rank
    for k in range(min(n, L.max_codim) + 1):
        for J in combinations(range(n), k):
            out[od.orbit_of[standard_flat(L, J)]] += 1
    return out


def subgroup_order(L: IntersectionLattice, x: int, limit: int = 10**6) -> tuple[int, str]:
    """|W_X| by enumeration of the reflection subgroup, falling back to the
    degree product of its isomorphism type beyond ``limit``."""
    try:
        return reflection_subgroup(L.roots, L.flats[x].root_set, limit).order, "enumerated"
    except ResourceLimitError:
        return _label_order(subsystem_label(L.roots, L.flats[x].root_set)), "degree table"


def normalizer_index(L: IntersectionLattice, od: OrbitData, t: int) -> int:
    """[N(X):W_X] = |W| / (|orbit of X| * |W_X|)."""
    T = od[t]
    wx, _ = subgroup_order(L, T.representative)
    num = L.roots.order
    den = T.size * wx
    if num % den:
        raise CorrectnessAlarm(f"|W| not divisible by |[X]|*|W_X| for {T.label}")
    return num // den


def crosscheck_digest(mask: int) -> int:
    """Deterministic byte derived from a flat's canonical root set."""
    return hashlib.sha256(mask.to_bytes((mask.bit_length() + 7) // 8 or 1, "little")).digest()[0]
