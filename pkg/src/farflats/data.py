"""Bundled classical constants: degrees of finite Coxeter groups and a few
Orlik-Solomon exponent lists that are too expensive to recompute here.

Every entry that can be recomputed at small rank is checked against the
computed value in the test suite.
"""
from __future__ import annotations

from math import prod


def degrees(family: str, rank: int, m: int | None = None) -> tuple[int, ...]:
    """Degrees d_1 <= ... <= d_n of an irreducible finite Coxeter group."""
    n = rank
    if family == "A":
        return tuple(range(2, n + 2))
    if family == "B":
        return tuple(range(2, 2 * n + 1, 2))
    if family == "D":
        return tuple(sorted(list(range(2, 2 * n - 1, 2)) + [n]))
    if family == "I":
        return (2, m)
    try:
        return _EXCEPTIONAL[(family, n)]
    except KeyError:
        raise ValueError(f"no degree data for {family}{n}") from None


_EXCEPTIONAL = {
    ("E", 6): (2, 5, 6, 8, 9, 12),
    ("E", 7): (2, 6, 8, 10, 12, 14, 18),
    ("E", 8): (2, 8, 12, 14, 18, 20, 24, 30),
    ("F", 4): (2, 6, 8, 12),
    ("H", 3): (2, 6, 10),
    ("H", 4): (2, 12, 20, 30),
}


def group_order(degs) -> int:
    return prod(degs)


# Orlik-Solomon exponents of A^H for a hyperplane H (all reflections conjugate
# in the simply laced E types).  Consistency with the orbit-stabilizer data is
# checked at run time: nu_[H] * [N(H):W_H] == prod(b_i + 1).
BUNDLED_OS_EXPONENTS = {
    ("E6", "A1"): (1, 4, 5, 7, 8),
    ("E7", "A1"): (1, 5, 7, 9, 11, 13),
    ("E8", "A1"): (1, 7, 11, 13, 17, 19, 23),
}
