"""
Parabolic subgroups of full support in H4
=========================================

Each parabolic subgroup has a core (the largest standard parabolic inside
it) and a support (the smallest standard parabolic containing it). We count
the ones whose support is everything, refined by core, and compare the
totals over a core type with the closed formula.
"""

from farflats import GQuery, Workspace
from farflats import faraway as fw
from farflats import tables

ws = Workspace("H4")

print(tables.render(tables.core_rank_table(ws, 1), "markdown"))

# one cell by hand: targets of type A2 containing the second simple root
A2 = ws.parabolic_type("A2")
res = fw.g_sets(ws, GQuery(A2.id, core=0b0010))
print(res.report)
for z in res.flats[:3]:
    cs = fw.core_and_support(ws, ws.lattice.flats[z])
    print(" roots", [r + 1 for r in ws.lattice.flats[z].root_set], "core", bin(cs.core), "support", bin(cs.support))

# summed over the four cores of type A1 the count follows the formula
print(fw.g_sets(ws, GQuery(A2.id, core_type="A1")).report)
print(fw.full_support_reflections(ws))

# the whole picture, every core against every target type
print(tables.render(tables.full_table(ws), "markdown"))
