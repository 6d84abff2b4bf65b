"""
Simple extensions of rank-one cores in E8
=========================================

The group E8 has about 7e8 elements, so nothing here enumerates it. The
lattice is built to codimension 2, counts come from root sets alone, and
the closed formula uses exponents of the restriction to a hyperplane that
ship with the package (flagged as such in the report).
"""

import time

from farflats import Workspace
from farflats import tables

t0 = time.perf_counter()
ws = Workspace("E8", max_codim=2)
print("flats to codimension 2:", ws.lattice.whitney_numbers())

H = ws.parabolic_type("A1")
data = ws.os_exponents(H)
print("exponents of the hyperplane restriction:", data.exponents, f"({data.provenance})")

T = tables.core_rank_table(ws, 1)
print(tables.render(T, "markdown"))
print(f"{time.perf_counter() - t0:.1f}s")
