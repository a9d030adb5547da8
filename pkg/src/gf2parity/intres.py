"""Exact integer resultants, discriminants, and their residues mod 8.

Polynomials live over Z with arbitrary precision coefficients. The
resultant is the determinant of the Sylvester matrix, computed exactly by
fraction-free (Bareiss) elimination; mod-8 queries may take an
elimination shortcut that pivots only on odd entries and falls back to
the exact path otherwise. Z/8Z is not a field, so naive modular
elimination would be unsound; the shortcut is correct because every
division it performs is by a unit, and the test suite gates it against
the exact determinant.

Leading zero coefficients are representable only through an explicitly
declared degree, which is the padding device used for resultants of a
monic polynomial against a shorter second argument.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class Residue8:
    """An element of Z/8Z."""

    value: int

    def __post_init__(self):
        if not 0 <= self.value < 8:
            raise ValueError("residue must lie in 0..7")

    @classmethod
    def reduce(cls, v: int) -> Residue8:
        return cls(v % 8)

    def __int__(self) -> int:
        return self.value


class IntPoly:
    """Integer polynomial; coeffs[i] is the coefficient of x^i.

    Trailing zero coefficients are stripped, so the stored tuple ends at
    the true leading term. declared_degree, when given, must be at least
    the actual degree and marks the polynomial as zero-padded up to that
    degree for Sylvester matrix construction.
    """

    __slots__ = ("coeffs", "declared_degree")

    def __init__(self, coeffs=(), declared_degree: int | None = None):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)
        if declared_degree is not None:
            if declared_degree < 0:
                raise ValueError("declared degree must be nonnegative")
            if cs and declared_degree < len(cs) - 1:
                raise ValueError(
                    f"declared degree {declared_degree} is below the actual degree {len(cs) - 1}")
        self.declared_degree = declared_degree

    @classmethod
    def from_pairs(cls, pairs, declared_degree: int | None = None) -> IntPoly:
        """Build from (degree, coefficient) pairs."""
        pairs = list(pairs)
        size = max((d for d, _ in pairs), default=-1) + 1
        cs = [0] * size
        for d, c in pairs:
            if d < 0:
                raise ValueError(f"negative degree {d}")
            if cs[d] != 0:
                raise ValueError(f"duplicate degree {d}")
            cs[d] = int(c)
        return cls(cs, declared_degree)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Actual degree; the zero polynomial has none."""
        if not self.coeffs:
            raise ValueError("the zero polynomial has no degree")
        return len(self.coeffs) - 1

    @property
    def effective_degree(self) -> int:
        """Declared degree when set, else the actual degree."""
        if self.declared_degree is not None:
            return self.declared_degree
        return self.degree

    def coeff(self, i: int) -> int:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def derivative(self) -> IntPoly:
        return IntPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def __add__(self, other: IntPoly) -> IntPoly:
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(self.coeff(i) + other.coeff(i) for i in range(n))

    def __sub__(self, other: IntPoly) -> IntPoly:
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(self.coeff(i) - other.coeff(i) for i in range(n))

    def __neg__(self) -> IntPoly:
        return IntPoly(-c for c in self.coeffs)

    def __mul__(self, other: IntPoly) -> IntPoly:
        if self.is_zero or other.is_zero:
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("IntPoly", self.coeffs))

    def __str__(self) -> str:
        return format_int_poly(self)

    def __repr__(self) -> str:
        if self.declared_degree is not None:
            return f"IntPoly({list(self.coeffs)}, declared_degree={self.declared_degree})"
        return f"IntPoly({list(self.coeffs)})"


def parse_int_poly(text: str) -> IntPoly:
    """Parse "21:1,7:1,0:1" style degree:coefficient pairs; "0" is zero."""
    s = "".join(text.split())
    if s == "0" or not s:
        return IntPoly()
    pairs = []
    for token in s.split(","):
        d, sep, c = token.partition(":")
        if not sep:
            raise ValueError(f"bad pair '{token}'")
        try:
            pairs.append((int(d), int(c)))
        except ValueError:
            raise ValueError(f"bad pair '{token}'") from None
    return IntPoly.from_pairs(pairs)


def format_int_poly(f: IntPoly) -> str:
    """Inverse of parse_int_poly, descending degrees, zero terms dropped."""
    pairs = [f"{d}:{c}" for d in range(len(f.coeffs) - 1, -1, -1)
             if (c := f.coeff(d))]
    return ",".join(pairs) if pairs else "0"


def monic_divmod(g: IntPoly, f: IntPoly) -> tuple[IntPoly, IntPoly]:
    """Quotient and remainder of g by monic f, exact over Z."""
    n = f.degree
    if f.coeff(n) != 1:
        raise ValueError("divisor must be monic")
    r = list(g.coeffs)
    q = [0] * max(len(r) - n, 1)
    while len(r) > n and any(r):
        while r and r[-1] == 0:
            r.pop()
        if len(r) <= n:
            break
        k = len(r) - 1 - n
        c = r[-1]
        q[k] = c
        for i in range(n + 1):
            r[k + i] -= c * f.coeff(i)
    return IntPoly(q), IntPoly(r)


class IntMatrix:
    """Dense integer matrix stored row-major."""

    __slots__ = ("n_rows", "n_cols", "entries")

    def __init__(self, n_rows: int, n_cols: int, entries):
        es = tuple(int(e) for e in entries)
        if len(es) != n_rows * n_cols:
            raise ValueError("entry count does not match the shape")
        self.n_rows = n_rows
        self.n_cols = n_cols
        self.entries = es

    @classmethod
    def from_rows(cls, rows) -> IntMatrix:
        rows = [list(r) for r in rows]
        n_cols = len(rows[0]) if rows else 0
        if any(len(r) != n_cols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), n_cols, [e for r in rows for e in r])

    def at(self, i: int, j: int) -> int:
        return self.entries[i * self.n_cols + j]

    def to_rows(self) -> list[list[int]]:
        c = self.n_cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.n_rows)]

    def __eq__(self, other) -> bool:
        return (isinstance(other, IntMatrix) and self.n_rows == other.n_rows
                and self.n_cols == other.n_cols and self.entries == other.entries)

    def __repr__(self) -> str:
        return f"IntMatrix({self.n_rows}x{self.n_cols})"


def sylvester(f: IntPoly, g: IntPoly) -> IntMatrix:
    """Sylvester matrix of (f, g), f-coefficient rows above g-coefficient rows.

    With n = deg f and m the effective degree of g, the matrix is
    (n+m) x (n+m): m rows carry the coefficients of f from the leading
    term down, each shifted one column right of the previous, then n rows
    carry those of g likewise. Zero-padding of g (a declared degree above
    the actual one, equivalently a vanishing leading entry) is allowed
    only when f is monic, where it provably leaves the determinant alone.
    """
    if f.is_zero and f.declared_degree is None:
        raise ValueError("zero polynomial on the first argument")
    n = f.effective_degree
    a = [f.coeff(n - j) for j in range(n + 1)]
    if a[0] == 0:
        raise ValueError("first argument has a zero leading coefficient")
    if g.is_zero and g.declared_degree is None:
        raise ValueError("zero second argument needs a declared degree")
    m = g.effective_degree
    b = [g.coeff(m - j) for j in range(m + 1)]
    if b[0] == 0 and a[0] != 1:
        raise ValueError("zero-padding the second argument requires a monic first argument")
    size = n + m
    rows = []
    for k in range(m):
        rows.append([0] * k + a + [0] * (size - k - n - 1))
    for k in range(n):
        rows.append([0] * k + b + [0] * (size - k - m - 1))
    return IntMatrix.from_rows(rows) if size else IntMatrix(0, 0, ())


def det_exact(m: IntMatrix) -> int:
    """Exact determinant by Bareiss fraction-free elimination.

    Pivots are the first nonzero entry found scanning the current column
    downward; a row swap flips the sign. All divisions are exact.
    """
    if m.n_rows != m.n_cols:
        raise ValueError("determinant of a non-square matrix")
    n = m.n_rows
    if n == 0:
        return 1
    a = m.to_rows()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pk = a[k]
        piv = pk[k]
        for i in range(k + 1, n):
            ri = a[i]
            cik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * piv - cik * pk[j]) // prev
            ri[k] = 0
        prev = piv
    return sign * a[n - 1][n - 1]


def _det_mod8_unit_pivot(m: IntMatrix) -> int | None:
    """Determinant mod 8 by elimination with odd pivots, or None.

    Entries are reduced mod 8 up front; uint8 arithmetic then runs mod
    256, which projects onto mod 8 at the end. Odd pivots are units mod
    256, so every division is exact. A column with no odd entry left
    means the remaining minor is even and this path gives up.
    """
    n = m.n_rows
    if n == 0:
        return 1
    a = np.array([e % 8 for e in m.entries], dtype=np.uint8).reshape(n, n)
    det = 1
    sign = 1
    for k in range(n):
        odd = np.flatnonzero(a[k:, k] & 1)
        if odd.size == 0:
            return None
        p = k + int(odd[0])
        if p != k:
            a[[k, p]] = a[[p, k]]
            sign = -sign
        piv = int(a[k, k])
        det = det * piv % 256
        if k + 1 < n:
            mult = a[k + 1:, k] * np.uint8(pow(piv, -1, 256))
            a[k + 1:, k:] -= np.outer(mult, a[k, k:])
    return sign * det % 8


def det_mod8(m: IntMatrix) -> Residue8:
    """Determinant mod 8, via the unit-pivot shortcut when it applies."""
    if m.n_rows != m.n_cols:
        raise ValueError("determinant of a non-square matrix")
    v = _det_mod8_unit_pivot(m)
    if v is None:
        v = det_exact(m) % 8
    return Residue8(v)


def resultant(f: IntPoly, g: IntPoly) -> int:
    """Exact resultant of f and g."""
    return det_exact(sylvester(f, g))


def resultant_mod8(f: IntPoly, g: IntPoly) -> Residue8:
    """Resultant reduced into 0..7."""
    return det_mod8(sylvester(f, g))


def discriminant_int(f: IntPoly) -> int:
    """Discriminant of monic f, degree >= 2: (-1)^(n(n-1)/2) res(f, f')."""
    n = f.degree if not f.is_zero else -1
    if n < 2:
        raise ValueError("discriminant needs degree at least 2")
    if f.coeff(n) != 1:
        raise ValueError("discriminant is implemented for monic polynomials")
    r = resultant(f, f.derivative())
    return -r if (n * (n - 1) // 2) % 2 else r


def discriminant_mod8(f: IntPoly) -> Residue8:
    """Discriminant of monic f reduced into 0..7."""
    n = f.degree if not f.is_zero else -1
    if n < 2:
        raise ValueError("discriminant needs degree at least 2")
    if f.coeff(n) != 1:
        raise ValueError("discriminant is implemented for monic polynomials")
    r = det_mod8(sylvester(f, f.derivative())).value
    if (n * (n - 1) // 2) % 2:
        r = -r % 8
    return Residue8(r)
