"""
Root systems of finite Coxeter groups
=====================================

Roots are stored exactly, as coordinates in the simple-root basis over the
field generated by 2cos(pi/m). Here we look at H3, whose coordinates involve
the golden ratio, and compare with a floating point picture.
"""

import numpy as np

from farflats import enumerate_group, generate_root_system

rs = generate_root_system("H3")
print(rs.type, "rank", rs.rank, "positive roots", rs.N, "order", rs.order)
print("coefficient field:", rs.field)

# one exact root; t stands for 2cos(pi/5), the golden ratio
print("a root in exact coordinates:", rs.roots[4])

# all positive roots as a float array; every root of H3 has the same length
R = np.array([[float(c) for c in r] for r in rs.roots])
print(R[:6].round(4))
G = np.array([[float(rs.gram[i, j]) for j in range(rs.rank)] for i in range(rs.rank)])
lengths = np.einsum("ij,jk,ik->i", R, G, R)
print("B(alpha, alpha) over all positive roots:", np.unique(lengths.round(12)))

# group elements act as signed permutations of the positive roots
W = enumerate_group(rs)
lengths = np.bincount([w.length for w in W])
print("elements by length:", lengths.tolist())
print("longest element has length N:", len(lengths) - 1 == rs.N)

# degrees and the identity 2N = h n
for dt in rs.degree_tables:
    print(dt.factor, "degrees", dt.degrees, "h =", dt.coxeter_number)
