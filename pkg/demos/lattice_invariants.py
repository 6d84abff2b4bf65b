"""
Intersection lattices and their invariants
==========================================

The flats of a reflection arrangement are saturated sets of roots. From
the lattice we get the Moebius function, the characteristic polynomial,
the number of chambers and the beta invariant, and the same quantities for
the arrangement restricted to a flat.
"""

import numpy as np

from farflats import beta, build_lattice, characteristic_polynomial, generate_root_system, orbits
from farflats import os_exponents, region_count, restriction

L = build_lattice(generate_root_system("H4"))
print("flats by codimension:", L.whitney_numbers())

chi = characteristic_polynomial(L)
print("chi(t) coefficients, low to high:", chi.coefficients)
print("integer roots:", chi.positive_integer_roots())
print("chambers:", region_count(L), " beta:", beta(L))

# numpy agrees on the roots of chi, in floating point
print("numpy roots:", np.sort(np.roots(chi.coefficients[::-1]).real).round(6))

# restrict to a hyperplane: 31 planes, and exponents (1, 11, 19)
H = L.hyperplanes[0]
R = restriction(L, H)
print("restriction to a hyperplane, flats by codimension:", [len(l) for l in R.levels])
print("its exponents:", os_exponents(L, H).exponents, " beta:", beta(R))

# orbits of flats under the group, with their subsystem labels
od = orbits(L)
for T in od:
    if 0 < T.codim < L.rank:
        print(f"codim {T.codim}  [{T.label}]  {T.size} flats")
