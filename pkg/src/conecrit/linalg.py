"""Exact integer linear algebra.

Everything here works on Python ints, so there is no overflow and no
rounding: Smith normal form with unimodular transforms, Bareiss
determinants and a division-free characteristic polynomial.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

__all__ = [
    "IntMatrix",
    "IntPoly",
    "SnfResult",
    "smith_normal_form",
    "gcd_minors_diagonal",
    "determinant",
    "cofactor_determinant",
    "char_poly",
    "eval_abs_at_minus_n",
    "GCD_MINORS_MAX_DIM",
]

GCD_MINORS_MAX_DIM = 6


class IntMatrix:
    """Dense immutable matrix of arbitrary-precision integers."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, rows: Iterable[Iterable[int]], cols: int | None = None):
        data = tuple(tuple(int(x) for x in row) for row in rows)
        if cols is None:
            cols = len(data[0]) if data else 0
        for row in data:
            if len(row) != cols:
                raise ValueError("ragged rows: expected %d columns, got %d" % (cols, len(row)))
        self.rows = len(data)
        self.cols = cols
        self._data = data

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> IntMatrix:
        cols = rows if cols is None else cols
        return cls([[0] * cols for _ in range(rows)], cols)

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n)

    @classmethod
    def ones(cls, rows: int, cols: int | None = None) -> IntMatrix:
        cols = rows if cols is None else cols
        return cls([[1] * cols for _ in range(rows)], cols)

    @classmethod
    def diagonal(cls, entries: Sequence[int]) -> IntMatrix:
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)], n)

    @classmethod
    def block_diag(cls, *blocks: IntMatrix) -> IntMatrix:
        rows = sum(b.rows for b in blocks)
        cols = sum(b.cols for b in blocks)
        out = [[0] * cols for _ in range(rows)]
        r0 = c0 = 0
        for b in blocks:
            for i, row in enumerate(b._data):
                out[r0 + i][c0:c0 + b.cols] = row
            r0 += b.rows
            c0 += b.cols
        return cls(out, cols)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, idx):
        if isinstance(idx, tuple):
            i, j = idx
            return self._data[i][j]
        return self._data[idx]

    def tolist(self) -> list[list[int]]:
        return [list(row) for row in self._data]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self._data)

    def diag(self) -> list[int]:
        return [self._data[i][i] for i in range(min(self.rows, self.cols))]

    @property
    def T(self) -> IntMatrix:
        return IntMatrix(zip(*self._data), self.rows) if self.cols else IntMatrix.zeros(0, self.rows)

    def _check_same_shape(self, other: IntMatrix) -> None:
        if self.shape != other.shape:
            raise ValueError("shape mismatch: %s vs %s" % (self.shape, other.shape))

    def __add__(self, other: IntMatrix) -> IntMatrix:
        self._check_same_shape(other)
        return IntMatrix(
            ([a + b for a, b in zip(r, s)] for r, s in zip(self._data, other._data)), self.cols
        )

    def __sub__(self, other: IntMatrix) -> IntMatrix:
        self._check_same_shape(other)
        return IntMatrix(
            ([a - b for a, b in zip(r, s)] for r, s in zip(self._data, other._data)), self.cols
        )

    def __neg__(self) -> IntMatrix:
        return IntMatrix(([-a for a in r] for r in self._data), self.cols)

    def __mul__(self, scalar: int) -> IntMatrix:
        return IntMatrix(([scalar * a for a in r] for r in self._data), self.cols)

    __rmul__ = __mul__

    def __matmul__(self, other):
        if isinstance(other, IntMatrix):
            if self.cols != other.rows:
                raise ValueError("cannot multiply %s by %s" % (self.shape, other.shape))
            cols = list(zip(*other._data)) if other.rows else [()] * other.cols
            return IntMatrix(
                ([sum(a * b for a, b in zip(row, col)) for col in cols] for row in self._data),
                other.cols,
            )
        vec = list(other)
        if len(vec) != self.cols:
            raise ValueError("vector of length %d does not match %d columns" % (len(vec), self.cols))
        return [sum(a * b for a, b in zip(row, vec)) for row in self._data]

    def hstack(self, other: IntMatrix) -> IntMatrix:
        if self.rows != other.rows:
            raise ValueError("row count mismatch: %d vs %d" % (self.rows, other.rows))
        return IntMatrix((r + s for r, s in zip(self._data, other._data)), self.cols + other.cols)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> IntMatrix:
        return IntMatrix(([self._data[i][j] for j in cols] for i in rows), len(cols))

    def delete(self, row: int, col: int) -> IntMatrix:
        keep_r = [i for i in range(self.rows) if i != row]
        keep_c = [j for j in range(self.cols) if j != col]
        return self.submatrix(keep_r, keep_c)

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self._data))

    def __repr__(self) -> str:
        return "IntMatrix(%r)" % (self.tolist(),)

    def __str__(self) -> str:
        if not self.rows:
            return "[]"
        width = max((len(str(x)) for row in self._data for x in row), default=1)
        return "\n".join("[" + " ".join(str(x).rjust(width) for x in row) + "]" for row in self._data)


@dataclass(frozen=True)
class SnfResult:
    """``U @ A @ V == S`` with ``S`` diagonal, ``U`` and ``V`` unimodular."""

    S: IntMatrix
    U: IntMatrix
    V: IntMatrix

    @property
    def diag(self) -> list[int]:
        return self.S.diag()


@dataclass(frozen=True)
class IntPoly:
    """Integer polynomial, ``coeffs[i]`` is the coefficient of ``x**i``."""

    coeffs: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else "x^%d" % i)
            mag = abs(c)
            body = str(mag) if not mono else (mono if mag == 1 else "%d*%s" % (mag, mono))
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        if not terms:
            return "0"
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += " %s %s" % (sign, body)
        return out


def smith_normal_form(a: IntMatrix) -> SnfResult:
    """Smith normal form by repeated min-pivot gcd elimination.

    Each stage moves the smallest nonzero entry of the trailing block to the
    pivot, clears its row and column, and re-runs if some trailing entry is
    not a multiple of the pivot. That guarantees ``d1 | d2 | ...`` on exit.
    """
    m, n = a.shape
    s = a.tolist()
    u = IntMatrix.identity(m).tolist()
    v = IntMatrix.identity(n).tolist()

    def swap_rows(i, j):
        s[i], s[j] = s[j], s[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in s:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, q):
        # row[dst] += q * row[src]
        if q:
            rs, rd = s[src], s[dst]
            for c in range(n):
                rd[c] += q * rs[c]
            us, ud = u[src], u[dst]
            for c in range(m):
                ud[c] += q * us[c]

    def add_col(src, dst, q):
        if q:
            for row in s:
                row[dst] += q * row[src]
            for row in v:
                row[dst] += q * row[src]

    for t in range(min(m, n)):
        while True:
            best = None
            for i in range(t, m):
                row = s[i]
                for j in range(t, n):
                    x = row[j]
                    if x and (best is None or abs(x) < best[0]):
                        best = (abs(x), i, j)
            if best is None:
                break
            _, pi, pj = best
            if pi != t:
                swap_rows(t, pi)
            if pj != t:
                swap_cols(t, pj)

            p = s[t][t]
            dirty = False
            for i in range(t + 1, m):
                if s[i][t]:
                    add_row(t, i, -(s[i][t] // p))
                    dirty = dirty or s[i][t] != 0
            for j in range(t + 1, n):
                if s[t][j]:
                    add_col(t, j, -(s[t][j] // p))
                    dirty = dirty or s[t][j] != 0
            if dirty:
                continue

            bad = next(
                (i for i in range(t + 1, m) if any(s[i][j] % p for j in range(t + 1, n))),
                None,
            )
            if bad is None:
                break
            add_row(bad, t, 1)
        if s[t][t] < 0:
            s[t] = [-x for x in s[t]]
            u[t] = [-x for x in u[t]]
        if s[t][t] == 0:
            break

    return SnfResult(IntMatrix(s, n), IntMatrix(u, m), IntMatrix(v, n))


def determinant(a: IntMatrix) -> int:
    """Bareiss fraction-free elimination."""
    if not a.is_square():
        raise ValueError("determinant of non-square %dx%d matrix" % a.shape)
    n = a.rows
    if n == 0:
        return 1
    m = a.tolist()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k]), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        pivot = m[k][k]
        for i in range(k + 1, n):
            mi = m[i]
            mk = m[k]
            f = mi[k]
            for j in range(k + 1, n):
                mi[j] = (pivot * mi[j] - f * mk[j]) // prev
            mi[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def cofactor_determinant(a: IntMatrix) -> int:
    """Laplace expansion along the first row. Exponential; small sizes only."""
    if not a.is_square():
        raise ValueError("determinant of non-square %dx%d matrix" % a.shape)
    return _laplace(a.tolist())


def _laplace(m: list[list[int]]) -> int:
    n = len(m)
    if n == 0:
        return 1
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    total = 0
    for j, x in enumerate(m[0]):
        if x:
            minor = [row[:j] + row[j + 1:] for row in m[1:]]
            total += (-1) ** j * x * _laplace(minor)
    return total


def gcd_minors_diagonal(a: IntMatrix, max_dim: int = GCD_MINORS_MAX_DIM) -> list[int]:
    """Invariant factors as ratios of gcds of i x i minors.

    Independent of :func:`smith_normal_form`; minors go through cofactor
    expansion rather than elimination.
    """
    if not a.is_square():
        raise ValueError("gcd of minors needs a square matrix, got %dx%d" % a.shape)
    n = a.rows
    if n > max_dim:
        raise ValueError("dimension %d exceeds oracle bound %d" % (n, max_dim))
    m = a.tolist()
    out = []
    prev = 1
    for size in range(1, n + 1):
        g = 0
        if prev:
            for rows in itertools.combinations(range(n), size):
                sub_rows = [m[r] for r in rows]
                for cols in itertools.combinations(range(n), size):
                    g = gcd(g, _laplace([[row[c] for c in cols] for row in sub_rows]))
                    if g == 1:
                        break
                if g == 1:
                    break
        out.append(g // prev if prev and g else 0)
        prev = g
    return out


def char_poly(a: IntMatrix) -> IntPoly:
    """``det(xI - A)`` by Berkowitz's algorithm; no divisions at all.

    The leading principal submatrix grows one row/column at a time, and each
    step multiplies the running coefficient vector by a lower-triangular
    Toeplitz matrix built from ``R @ A_{r-1}**j @ c``.
    """
    if not a.is_square():
        raise ValueError("characteristic polynomial of non-square %dx%d matrix" % a.shape)
    n = a.rows
    m = a.tolist()
    poly = [1]  # descending coefficients of the leading r x r block
    for r in range(n):
        arr = m[r][r]
        col = [m[i][r] for i in range(r)]
        row = m[r][:r]
        toeplitz = [1, -arr]
        vec = col
        for _ in range(r):
            toeplitz.append(-sum(x * y for x, y in zip(row, vec)))
            vec = [sum(m[i][j] * vec[j] for j in range(r)) for i in range(r)]
        # (r+2) x (r+1) Toeplitz times poly (length r+1)
        poly = [
            sum(toeplitz[i - j] * poly[j] for j in range(min(i, r) + 1))
            for i in range(r + 2)
        ]
    return IntPoly(tuple(reversed(poly)))


def eval_abs_at_minus_n(p: IntPoly, n: int) -> int:
    return abs(p(-n))
