"""Exact arithmetic over Q and the real fields Q(2cos(pi/m)).

Elements of ``Q(theta_m)`` are stored in the power basis ``1, theta, ...,
theta^(d-1)`` with :class:`fractions.Fraction` coefficients, so equality is
coefficient equality.  Signs are decided under the real embedding that sends
``theta`` to ``2cos(pi/m)`` by interval evaluation on a rational isolating
interval, refined by bisection until the value interval excludes zero.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

Rational = Fraction

__all__ = [
    "Rational",
    "NumberField",
    "AlgebraicNumber",
    "FieldMatrix",
    "minimal_polynomial_2cos",
    "cyclotomic_polynomial",
    "dickson",
    "sign",
    "kernel",
    "rank",
]


# -- integer polynomials, coefficient lists low -> high ---------------------

def _trim(p):
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _pmul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _pdivexact(a, b):
    """Quotient of integer polynomials; ``b`` monic and dividing ``a``."""
    a = list(a)
    q = [0] * (len(a) - len(b) + 1)
    for k in range(len(q) - 1, -1, -1):
        c = a[k + len(b) - 1]
        q[k] = c
        if c:
            for j, y in enumerate(b):
                a[k + j] -= c * y
    if any(a[: len(b) - 1]):
        raise ArithmeticError("polynomial division is not exact")
    return _trim(q)


def _peval(p, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple:
    """Integer coefficients (low -> high) of the n-th cyclotomic polynomial."""
    if n < 1:
        raise ValueError("n must be positive")
    p = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            p = _pdivexact(p, cyclotomic_polynomial(d))
    return tuple(p)


@lru_cache(maxsize=None)
def dickson(k: int) -> tuple:
    """Polynomial D_k with D_k(x + 1/x) = x^k + x^-k (so D_k(2cos t) = 2cos kt)."""
    if k == 0:
        return (2,)
    if k == 1:
        return (0, 1)
    a, b = dickson(k - 1), dickson(k - 2)
    out = [0] + list(a)
    for i, c in enumerate(b):
        out[i] -= c
    return tuple(_trim(out))


def _totient(n):
    return sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


# -- number fields ----------------------------------------------------------

class NumberField:
    """The real field Q(theta) with theta = 2cos(pi/m).

    Use :func:`minimal_polynomial_2cos` to obtain instances; fields are cached
    per ``m`` so identity comparison is field equality.
    """

    __slots__ = ("m", "minimal_polynomial", "degree", "isolating_interval",
                 "_reduction", "_theta_float")

    def __init__(self, m: int, minpoly: Sequence[int], interval):
        self.m = m
        self.minimal_polynomial = tuple(minpoly)
        self.degree = len(minpoly) - 1
        self.isolating_interval = (Fraction(interval[0]), Fraction(interval[1]))
        self._theta_float = 2 * math.cos(math.pi / m)
        d = self.degree
        # theta^k for d <= k <= 2d-2 in the power basis
        red = {}
        cur = [-c for c in self.minimal_polynomial[:d]]
        for k in range(d, 2 * d - 1):
            red[k] = tuple(cur)
            top = cur[-1]
            cur = [0] + cur[:-1]
            cur = [c - top * a for c, a in zip(cur, self.minimal_polynomial[:d])]
        self._reduction = red

    def __repr__(self):
        return f"NumberField(m={self.m}, minpoly={list(self.minimal_polynomial)})"

    def __reduce__(self):
        return (minimal_polynomial_2cos, (self.m,))

    # constructors ---------------------------------------------------------
    def __call__(self, value) -> "AlgebraicNumber":
        if isinstance(value, AlgebraicNumber):
            if value.field is not self:
                raise ValueError("element belongs to a different field")
            return value
        if isinstance(value, (int, Fraction)):
            return AlgebraicNumber(self, (Fraction(value),) + (Fraction(0),) * (self.degree - 1))
        coeffs = tuple(Fraction(c) for c in value)
        if len(coeffs) != self.degree:
            raise ValueError(f"expected {self.degree} coefficients, got {len(coeffs)}")
        return AlgebraicNumber(self, coeffs)

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    @property
    def theta(self) -> "AlgebraicNumber":
        if self.degree == 1:
            return self(-self.minimal_polynomial[0])
        return self([0, 1] + [0] * (self.degree - 2))

    def two_cos(self, k: int) -> "AlgebraicNumber":
        """2cos(k*pi/m) as an element of this field."""
        return self.evaluate(dickson(k), self.theta)

    def two_cos_pi_over(self, q: int) -> "AlgebraicNumber":
        """2cos(pi/q); requires q | m or q in {1, 2, 3}."""
        if q == 1:
            return self(-2)
        if q == 2:
            return self(0)
        if q == 3:
            return self(1)
        if self.m % q:
            raise ValueError(f"2cos(pi/{q}) does not lie in Q(2cos(pi/{self.m}))")
        return self.two_cos(self.m // q)

    def evaluate(self, poly: Sequence, x: "AlgebraicNumber") -> "AlgebraicNumber":
        acc = self.zero
        for c in reversed(poly):
            acc = acc * x + c
        return acc

    def _mul_coeffs(self, a, b):
        d = self.degree
        if d == 1:
            return (a[0] * b[0],)
        prod = [Fraction(0)] * (2 * d - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        out = prod[:d]
        for k in range(d, 2 * d - 1):
            c = prod[k]
            if c:
                for i, r in enumerate(self._reduction[k]):
                    out[i] += c * r
        return tuple(out)


@lru_cache(maxsize=None)
def minimal_polynomial_2cos(m: int) -> NumberField:
    """Field data for theta = 2cos(pi/m): monic minimal polynomial and an
    isolating interval.

    The polynomial comes from halving the 2m-th cyclotomic polynomial: it is
    palindromic, so x^-k Phi(x) is a polynomial in y = x + 1/x.
    """
    if not isinstance(m, int) or m < 2:
        raise ValueError(f"m must be an integer >= 2, got {m!r}")
    phi = cyclotomic_polynomial(2 * m)
    k = (len(phi) - 1) // 2
    poly = [0]
    poly[0] = phi[k]
    for j in range(1, k + 1):
        c = phi[k + j]
        dj = dickson(j)
        if len(poly) < len(dj):
            poly += [0] * (len(dj) - len(poly))
        for i, a in enumerate(dj):
            poly[i] += c * a
    poly = _trim(poly)
    assert poly[-1] == 1 and len(poly) - 1 == max(1, _totient(2 * m) // 2)

    theta = 2 * math.cos(math.pi / m)
    if len(poly) == 2:
        root = Fraction(-poly[0])
        return NumberField(m, poly, (root, root))
    conj = [2 * math.cos(j * math.pi / m) for j in range(1, m) if math.gcd(j, 2 * m) == 1]
    gap = min(abs(a - b) for a in conj for b in conj if a != b)
    half = Fraction(min(gap / 4, 1e-3)).limit_denominator(10**6)
    centre = Fraction(theta).limit_denominator(10**12)
    lo, hi = centre - half, centre + half
    if _peval(poly, lo) * _peval(poly, hi) >= 0:
        raise ArithmeticError(f"failed to isolate 2cos(pi/{m})")
    return NumberField(m, poly, (lo, hi))


# -- field elements ---------------------------------------------------------

class AlgebraicNumber:
    """Exact element of a :class:`NumberField`, immutable."""

    __slots__ = ("field", "coefficients")

    def __init__(self, field: NumberField, coefficients: Sequence[Fraction]):
        self.field = field
        self.coefficients = tuple(coefficients)

    # coercion
    def _coerce(self, other):
        if isinstance(other, AlgebraicNumber):
            if other.field is not self.field:
                raise ValueError("cannot mix elements of different fields")
            return other.coefficients
        if isinstance(other, (int, Fraction)):
            return (Fraction(other),) + (Fraction(0),) * (self.field.degree - 1)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return AlgebraicNumber(self.field, tuple(a + b for a, b in zip(self.coefficients, o)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return AlgebraicNumber(self.field, tuple(a - b for a, b in zip(self.coefficients, o)))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return AlgebraicNumber(self.field, tuple(-a for a in self.coefficients))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return AlgebraicNumber(self.field, tuple(a * other for a in self.coefficients))
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return AlgebraicNumber(self.field, self.field._mul_coeffs(self.coefficients, o))

    __rmul__ = __mul__

    def inverse(self) -> "AlgebraicNumber":
        if self.is_zero():
            raise ZeroDivisionError("division by zero in number field")
        d = self.field.degree
        if d == 1:
            return AlgebraicNumber(self.field, (1 / self.coefficients[0],))
        # columns: self * theta^j; solve for the preimage of 1
        cols = []
        basis = [tuple(Fraction(int(i == j)) for i in range(d)) for j in range(d)]
        for e in basis:
            cols.append(self.field._mul_coeffs(self.coefficients, e))
        aug = [[cols[j][i] for j in range(d)] + [Fraction(int(i == 0))] for i in range(d)]
        sol = _solve_square(aug)
        return AlgebraicNumber(self.field, sol)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return AlgebraicNumber(self.field, tuple(a / other for a in self.coefficients))
        if isinstance(other, AlgebraicNumber):
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        acc, base = self.field.one, self
        while k:
            if k & 1:
                acc = acc * base
            base = base * base
            k >>= 1
        return acc

    def is_zero(self) -> bool:
        return not any(self.coefficients)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        o = self._coerce(other) if isinstance(other, (AlgebraicNumber, int, Fraction)) else None
        if o is None:
            return NotImplemented
        return self.coefficients == o

    def __hash__(self):
        if not any(self.coefficients[1:]):
            return hash(self.coefficients[0])
        return hash((self.field.m, self.coefficients))

    def __lt__(self, other):
        return sign(self - other) < 0

    def __le__(self, other):
        return sign(self - other) <= 0

    def __gt__(self, other):
        return sign(self - other) > 0

    def __ge__(self, other):
        return sign(self - other) >= 0

    def __float__(self):
        t = self.field._theta_float
        return float(sum(float(c) * t**i for i, c in enumerate(self.coefficients)))

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coefficients)

    def sign(self) -> int:
        return sign(self)

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coefficients):
            if c:
                terms.append(str(c) if i == 0 else f"{c}*t^{i}" if i > 1 else f"{c}*t")
        return f"<{' + '.join(terms) or '0'} in Q(2cos(pi/{self.field.m}))>"


def _solve_square(aug):
    n = len(aug)
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return tuple(aug[r][n] for r in range(n))


def _interval_value(coeffs, lo, hi):
    # theta > 0 on the isolating interval, so theta^k is monotone
    vlo = vhi = Fraction(0)
    plo = phi = Fraction(1)
    for c in coeffs:
        if c:
            a, b = c * plo, c * phi
            vlo += min(a, b)
            vhi += max(a, b)
        plo *= lo
        phi *= hi
    return vlo, vhi


def sign(x: AlgebraicNumber) -> int:
    """Exact sign of ``x`` under the real embedding theta -> 2cos(pi/m)."""
    c = x.coefficients
    if not any(c):
        return 0
    f = x.field
    if f.degree == 1:
        return 1 if c[0] > 0 else -1
    lo, hi = f.isolating_interval
    p = f.minimal_polynomial
    s_lo = 1 if _peval(p, lo) > 0 else -1
    while True:
        vlo, vhi = _interval_value(c, lo, hi)
        if vlo > 0:
            return 1
        if vhi < 0:
            return -1
        mid = (lo + hi) / 2
        s_mid = _peval(p, mid)
        if (s_mid > 0) == (s_lo > 0):
            lo = mid
        else:
            hi = mid


# -- linear algebra ---------------------------------------------------------

class FieldMatrix:
    """Rectangular matrix of :class:`AlgebraicNumber` entries over one field."""

    __slots__ = ("field", "rows", "ncols")

    def __init__(self, field: NumberField, rows: Iterable[Sequence], ncols: int | None = None):
        self.field = field
        self.rows = tuple(tuple(field(x) for x in row) for row in rows)
        if ncols is None:
            if not self.rows:
                raise ValueError("ncols is required for an empty matrix")
            ncols = len(self.rows[0])
        if any(len(r) != ncols for r in self.rows):
            raise ValueError("ragged matrix")
        self.ncols = ncols

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __matmul__(self, other: "FieldMatrix") -> "FieldMatrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        cols = list(zip(*other.rows)) if other.rows else []
        out = []
        for r in self.rows:
            out.append([sum((a * b for a, b in zip(r, c)), self.field.zero) for c in cols])
        return FieldMatrix(self.field, out, other.ncols)

    def transpose(self) -> "FieldMatrix":
        return FieldMatrix(self.field, list(zip(*self.rows)) if self.rows else [], self.nrows)

    def rref(self):
        """Reduced row echelon form and the pivot columns."""
        rows = [list(r) for r in self.rows]
        pivots = []
        r = 0
        for col in range(self.ncols):
            piv = next((i for i in range(r, len(rows)) if not rows[i][col].is_zero()), None)
            if piv is None:
                continue
            rows[r], rows[piv] = rows[piv], rows[r]
            inv = rows[r][col].inverse()
            rows[r] = [x * inv for x in rows[r]]
            for i in range(len(rows)):
                if i != r and not rows[i][col].is_zero():
                    f = rows[i][col]
                    rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
            pivots.append(col)
            r += 1
            if r == len(rows):
                break
        return FieldMatrix(self.field, rows[:r], self.ncols), tuple(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel(self) -> list:
        return kernel(self)

    def inverse(self) -> "FieldMatrix":
        n = self.nrows
        if n != self.ncols:
            raise ValueError("matrix is not square")
        one, zero = self.field.one, self.field.zero
        aug = FieldMatrix(self.field, [list(r) + [one if i == j else zero for j in range(n)]
                                       for i, r in enumerate(self.rows)])
        red, piv = aug.rref()
        if piv[:n] != tuple(range(n)) or len(piv) < n:
            raise ZeroDivisionError("singular matrix")
        return FieldMatrix(self.field, [r[n:] for r in red.rows], n)

    def __repr__(self):
        return f"FieldMatrix({self.nrows}x{self.ncols} over m={self.field.m})"


def kernel(M: FieldMatrix) -> list:
    """Basis of the right null space of ``M`` in reduced canonical form.

    The basis vectors are the rows of a matrix in reduced row echelon form, so
    equal subspaces always produce identical bases.
    """
    red, pivots = M.rref()
    free = [c for c in range(M.ncols) if c not in pivots]
    if not free:
        return []
    F = M.field
    vecs = []
    for f in free:
        v = [F.zero] * M.ncols
        v[f] = F.one
        for row, p in zip(red.rows, pivots):
            v[p] = -row[f]
        vecs.append(v)
    canon, _ = FieldMatrix(F, vecs, M.ncols).rref()
    return [tuple(r) for r in canon.rows]


def rank(M: FieldMatrix) -> int:
    return M.rank()
