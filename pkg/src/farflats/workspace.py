"""A per-group bundle of lazily built, cached structures."""
from __future__ import annotations

from functools import cached_property

from . import invariants as inv
from .arrangement import Face, IntersectionLattice, bits, build_lattice, flat_from_roots
from .coxeter import CoxeterType, enumerate_group, generate_root_system, parse_type
from .errors import InsufficientDepthError

CROSSCHECK_MODES = ("auto", "all", "none")


class Workspace:
    """Root system, lattice, orbits and group of one Coxeter type.

    ``crosscheck`` controls how often the geometric cone test is run next to
    the root-support rule: ``auto`` checks every flat in rank <= 3 and a
    deterministic 1-in-16 sample above; ``all`` and ``none`` do what they say.
    """

    def __init__(self, ctype, max_codim: int | None = None, limit: int = 10**6,
                 workers: int = 1, crosscheck: str = "auto", lattice: IntersectionLattice | None = None):
        if isinstance(ctype, str):
            ctype = parse_type(ctype)
        if crosscheck not in CROSSCHECK_MODES:
            raise ValueError(f"crosscheck must be one of {CROSSCHECK_MODES}")
        self.type: CoxeterType = ctype
        self.roots = generate_root_system(ctype)
        n = self.roots.rank
        if max_codim is None:
            max_codim = n
        if not 0 <= max_codim <= n:
            raise ValueError(f"max_codim must lie in 0..{n}")
        self.max_codim = max_codim
        self.limit = limit
        self.workers = workers
        self.crosscheck = crosscheck
        self._lattice = lattice
        self.core_cache: dict = {}
        self.checked = 0

    @property
    def rank(self) -> int:
        return self.roots.rank

    @property
    def lattice(self) -> IntersectionLattice:
        if self._lattice is None:
            self._lattice = build_lattice(self.roots, self.max_codim, workers=self.workers)
        return self._lattice

    @cached_property
    def orbit_data(self) -> inv.OrbitData:
        return inv.orbits(self.lattice)

    @cached_property
    def os_matrix(self) -> inv.OSMatrix:
        return inv.os_matrix(self.lattice, self.orbit_data)

    @cached_property
    def group(self) -> list:
        return enumerate_group(self.roots, self.limit)

    @cached_property
    def full_mask(self) -> int:
        return (1 << self.rank) - 1

    def require(self, codim: int):
        if codim > self.lattice.max_codim:
            raise InsufficientDepthError(codim, self.lattice.max_codim)

    def std_flat(self, J) -> int:
        """Flat id of V^J."""
        if isinstance(J, int):
            J = bits(J)
        J = list(J)
        self.require(len(J))
        return self.lattice.find(flat_from_roots(self.roots, J).mask)

    def type_of(self, flat_id: int) -> inv.ParabolicType:
        return self.orbit_data.of(flat_id)

    def parabolic_type(self, key) -> inv.ParabolicType:
        """Look a type up by label, orbit id or ParabolicType."""
        if isinstance(key, inv.ParabolicType):
            return key
        if isinstance(key, int):
            return self.orbit_data[key]
        return self.orbit_data.by_label(key)

    def os_exponents(self, t) -> inv.OSData:
        T = self.parabolic_type(t)
        return inv.os_exponents(self.lattice, T.representative, self.orbit_data)

    def normalizer_index(self, t) -> int:
        return inv.normalizer_index(self.lattice, self.orbit_data, self.parabolic_type(t).id)

    def should_crosscheck(self, mask: int) -> bool:
        if self.crosscheck == "all":
            return True
        if self.crosscheck == "none":
            return False
        return self.rank <= 3 or inv.crosscheck_digest(mask) % 16 == 0

    def chambers(self) -> list:
        """Chambers of the full arrangement as faces with no walls."""
        return [Face(g, 0) for g in self.group]

    def restricted_chambers(self, x: int) -> list:
        """Chambers of A^X, realised as the faces wC0^J of A whose span is X,
        one per distinct sign vector."""
        rs = self.roots
        X = self.lattice.flats[x]
        k = X.codim
        if k == 0:
            return self.chambers()
        seen = {}
        std_cache = {}
        from itertools import combinations
        for g in self.group:
            inv_g = g.inverse()
            y = inv_g.act_mask(X.mask)
            for J in combinations(range(self.rank), k):
                Jm = sum(1 << s for s in J)
                std = std_cache.get(Jm)
                if std is None:
                    std = std_cache[Jm] = flat_from_roots(rs, list(J)).mask
                if std != y:
                    continue
                key = tuple(0 if std >> (abs(v) - 1) & 1 else (1 if v > 0 else -1) for v in inv_g.images)
                if key not in seen:
                    seen[key] = Face(g, Jm)
        return list(seen.values())

    def __repr__(self):
        return f"Workspace({self.type}, max_codim={self.max_codim})"


def as_workspace(obj, **kw) -> Workspace:
    return obj if isinstance(obj, Workspace) else Workspace(obj, **kw)
