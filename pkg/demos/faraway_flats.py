"""
Faraway planes and nearest faraway flats
========================================

A hyperplane is faraway from a chamber when it meets the closed chamber
only at the origin. We count these for every chamber of B3 and check that
the average depends only on the exponents, then look at flats that are
faraway from a chamber but close to one of its faces.
"""

from collections import Counter
from itertools import combinations

from farflats import Workspace, face
from farflats import faraway as fw
from farflats.arrangement import mask_of

ws = Workspace("B3")
counts = Counter(len(fw.faraway_planes(ws, w)) for w in ws.group)
print("faraway planes per chamber:", dict(sorted(counts.items())))
print(fw.average_faraway(ws))
print(fw.double_counting_check(ws))

# nonzero flats faraway from C0 and nearest to one of its faces, sorted
# by that face (a face with k walls has dimension n - k)
e = ws.group[0]
n = ws.rank
for k in range(n - 1):
    for J in combinations(range(n), k):
        found = fw.nearest_faraway_flats(ws, e, mask_of(J))
        print(f"walls {[s + 1 for s in J]}: {len(found)} nearest faraway flats")

# at the full chamber, nearest faraway hyperplanes are the faraway planes
print(fw.faraway_planes(ws, e) == fw.nearest_faraway_flats(ws, e, face(ws.chambers()[0], 0),
                                                           ws.lattice.hyperplanes))
