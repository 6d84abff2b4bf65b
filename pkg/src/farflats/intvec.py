"""Vectors over Z[theta] as integer numpy arrays.

An element of Z[theta] is a length-``d`` integer vector in the power basis;
a vector in Z[theta]^n has shape ``(n, d)``.  Products contract against the
structure tensor ``T[i, j, k]`` (theta^i * theta^j = sum_k T[i,j,k] theta^k).
Arrays are int64 while entries stay small and switch to Python ints
(``dtype=object``) past a safety bound, so results are always exact.
"""
from __future__ import annotations

from functools import reduce
from math import gcd

import numpy as np

from .exact import AlgebraicNumber, NumberField

_SAFE = 1 << 24


class IntegerRing:
    """Arithmetic helpers for Z[theta] inside a :class:`NumberField`."""

    def __init__(self, field: NumberField):
        self.field = field
        d = self.d = field.degree
        T = np.zeros((d, d, d), dtype=np.int64)
        for i in range(d):
            for j in range(d):
                ei = [0] * d
                ej = [0] * d
                ei[i] = ej[j] = 1
                c = field._mul_coeffs(tuple(map(int, ei)), tuple(map(int, ej)))
                for k, v in enumerate(c):
                    T[i, j, k] = int(v)
        self.T = T
        self._Tobj = T.astype(object)

    def _tensor(self, *arrays):
        if any(a.dtype == object for a in arrays):
            return self._Tobj
        return self.T

    @staticmethod
    def widen(*arrays):
        if any(a.dtype != object and a.size and int(np.abs(a).max()) > _SAFE for a in arrays):
            return tuple(a.astype(object) for a in arrays)
        return arrays

    def encode(self, x: AlgebraicNumber) -> np.ndarray:
        if not x.is_integral():
            raise ValueError(f"{x!r} is not in Z[theta]")
        return np.array([int(c) for c in x.coefficients], dtype=np.int64)

    def encode_vector(self, v) -> np.ndarray:
        return np.stack([self.encode(x) for x in v])

    def decode(self, a) -> AlgebraicNumber:
        return self.field([int(c) for c in a])

    def mul(self, a, b):
        a, b = self.widen(a, b)
        return np.einsum("...i,...j,ijk->...k", a, b, self._tensor(a, b))

    def pair(self, Z, B):
        """Entry ``[r, j]`` is sum_s Z[r, s] * B[j, s], an element of Z[theta].

        ``Z``: (N, n, d) functionals, ``B``: (k, n, d) vectors -> (N, k, d).
        """
        Z, B = self.widen(Z, B)
        return np.einsum("Nsi,ksj,ijl->Nkl", Z, B, self._tensor(Z, B))

    @staticmethod
    def content_reduce(v):
        """Divide a vector by the gcd of all its integer entries."""
        flat = [int(x) for x in np.asarray(v).ravel()]
        g = reduce(gcd, flat, 0)
        if g > 1:
            v = v // g
        if v.dtype == object and all(abs(int(x)) <= _SAFE for x in v.ravel()):
            v = v.astype(np.int64)
        return v
