"""Exact computations with finite Coxeter groups, their reflection
arrangements and the parabolic subgroups of full support."""
from .arrangement import (Chamber, Face, Flat, IntersectionLattice, build_lattice, cone_trivial,
                          face, flat_from_roots, restriction)
from .coxeter import (CoxeterType, GroupElement, RootSystem, enumerate_group, generate_root_system,
                      parse_type, reflection_element, reflection_subgroup)
from .errors import (CorrectnessAlarm, InsufficientDepthError, ResourceLimitError, StaleCacheError,
                     TypeParseError)
from .exact import AlgebraicNumber, NumberField, minimal_polynomial_2cos
from .faraway import (CountReport, GQuery, average_faraway, beta_via_chambers, full_support_reflections,
                      full_support_reflections_by_class, coincidental_check, coincidental_mean_check, core_and_support,
                      double_counting_check, faraway_planes, g_sets, nearest_faraway_direct,
                      nearest_faraway_flats, nfw_se, reduce_reducible)
from .invariants import (beta, characteristic_polynomial, mobius, nu, orbits, os_exponents, os_matrix,
                         region_count)
from .workspace import Workspace

__version__ = "0.1.0"

__all__ = [
    "AlgebraicNumber",
    "Chamber",
    "CorrectnessAlarm",
    "CountReport",
    "CoxeterType",
    "Face",
    "Flat",
    "GQuery",
    "GroupElement",
    "InsufficientDepthError",
    "IntersectionLattice",
    "NumberField",
    "ResourceLimitError",
    "RootSystem",
    "StaleCacheError",
    "TypeParseError",
    "Workspace",
    "average_faraway",
    "beta",
    "beta_via_chambers",
    "build_lattice",
    "characteristic_polynomial",
    "coincidental_check",
    "coincidental_mean_check",
    "cone_trivial",
    "core_and_support",
    "double_counting_check",
    "enumerate_group",
    "face",
    "faraway_planes",
    "flat_from_roots",
    "full_support_reflections",
    "full_support_reflections_by_class",
    "g_sets",
    "generate_root_system",
    "minimal_polynomial_2cos",
    "mobius",
    "nearest_faraway_direct",
    "nearest_faraway_flats",
    "nfw_se",
    "nu",
    "orbits",
    "os_exponents",
    "os_matrix",
    "parse_type",
    "reduce_reducible",
    "reflection_element",
    "reflection_subgroup",
    "region_count",
    "restriction",
]
