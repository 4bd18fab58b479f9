"""Dense matrices over the rationals, with exact Gaussian elimination."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from ..errors import NotSquare, ShapeMismatch, Singular


def to_rational(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction.

    Floats are rejected: a float literal has usually already lost the value
    the caller meant.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


class Matrix:
    """Immutable rows x cols matrix of Fractions.

    Zero-row and zero-column matrices are ordinary values; they show up as
    the maps into or out of a zero vector space.
    """

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, rows: int, cols: int, data: Iterable[Iterable] = ()):
        if rows < 0 or cols < 0:
            raise ShapeMismatch(f"negative shape {rows}x{cols}")
        grid = tuple(tuple(to_rational(x) for x in row) for row in data)
        if rows == 0:
            if grid:
                raise ShapeMismatch(f"expected 0 rows, got {len(grid)}")
        elif cols == 0 and not grid:
            grid = ((),) * rows
        if len(grid) != rows or any(len(r) != cols for r in grid):
            raise ShapeMismatch(f"entries do not form a {rows}x{cols} grid")
        self.rows = rows
        self.cols = cols
        self._data = grid

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], ncols: int | None = None) -> Matrix:
        rows = [list(r) for r in rows]
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        return cls(len(rows), ncols, rows)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], nrows: int) -> Matrix:
        columns = [list(c) for c in columns]
        for c in columns:
            if len(c) != nrows:
                raise ShapeMismatch(f"column of length {len(c)}, expected {nrows}")
        return cls(nrows, len(columns), [[c[i] for c in columns] for i in range(nrows)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> Matrix:
        return cls(rows, cols, [[0] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n: int) -> Matrix:
        return cls(n, n, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def scalar(cls, n: int, c) -> Matrix:
        c = to_rational(c)
        return cls(n, n, [[c if i == j else 0 for j in range(n)] for i in range(n)])

    # -- access -------------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self._data[i][j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self._data[i]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(r[j] for r in self._data)

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self._data]

    def columns(self) -> list[tuple[Fraction, ...]]:
        return [self.column(j) for j in range(self.cols)]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return all(x == 0 for r in self._data for x in r)

    # -- algebra ------------------------------------------------------------

    @property
    def T(self) -> Matrix:
        return Matrix(self.cols, self.rows, [self.column(j) for j in range(self.cols)])

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self):
        return hash((self.rows, self.cols, self._data))

    def _check_same_shape(self, other: Matrix):
        if self.shape != other.shape:
            raise ShapeMismatch(f"{self.shape} vs {other.shape}")

    def __add__(self, other: Matrix) -> Matrix:
        self._check_same_shape(other)
        return Matrix(self.rows, self.cols,
                      [[a + b for a, b in zip(r, s)] for r, s in zip(self._data, other._data)])

    def __sub__(self, other: Matrix) -> Matrix:
        self._check_same_shape(other)
        return Matrix(self.rows, self.cols,
                      [[a - b for a, b in zip(r, s)] for r, s in zip(self._data, other._data)])

    def __neg__(self) -> Matrix:
        return Matrix(self.rows, self.cols, [[-a for a in r] for r in self._data])

    def scale(self, c) -> Matrix:
        c = to_rational(c)
        return Matrix(self.rows, self.cols, [[c * a for a in r] for r in self._data])

    def __matmul__(self, other: Matrix) -> Matrix:
        if self.cols != other.rows:
            raise ShapeMismatch(f"cannot multiply {self.shape} by {other.shape}")
        ocols = other.columns()
        return Matrix(self.rows, other.cols,
                      [[sum((a * b for a, b in zip(r, c)), Fraction(0)) for c in ocols]
                       for r in self._data])

    def apply(self, v: Sequence) -> tuple[Fraction, ...]:
        if len(v) != self.cols:
            raise ShapeMismatch(f"vector of length {len(v)} for {self.shape} matrix")
        return tuple(sum((a * b for a, b in zip(r, v)), Fraction(0)) for r in self._data)

    def hstack(self, *others: Matrix) -> Matrix:
        blocks = (self,) + others
        for b in blocks:
            if b.rows != self.rows:
                raise ShapeMismatch("hstack: row counts differ")
        return Matrix(self.rows, sum(b.cols for b in blocks),
                      [sum((b._data[i] for b in blocks), ()) for i in range(self.rows)])

    def vstack(self, *others: Matrix) -> Matrix:
        blocks = (self,) + others
        for b in blocks:
            if b.cols != self.cols:
                raise ShapeMismatch("vstack: column counts differ")
        return Matrix(sum(b.rows for b in blocks), self.cols,
                      [r for b in blocks for r in b._data])

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> Matrix:
        return Matrix(len(rows), len(cols), [[self._data[i][j] for j in cols] for i in rows])

    def select_columns(self, cols: Sequence[int]) -> Matrix:
        return self.submatrix(range(self.rows), cols)

    def pretty(self) -> str:
        return "[" + ", ".join("[" + ", ".join(format_rational(x) for x in r) + "]"
                               for r in self._data) + "]"

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols}: {self.pretty()})"


def block_diag(a: Matrix, b: Matrix) -> Matrix:
    rows = [list(r) + [Fraction(0)] * b.cols for r in a.tolist()]
    rows += [[Fraction(0)] * a.cols + list(r) for r in b.tolist()]
    return Matrix(a.rows + b.rows, a.cols + b.cols, rows)


def rref(A: Matrix) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row echelon form and the pivot column indices."""
    m = A.tolist()
    pivots = []
    r = 0
    for c in range(A.cols):
        if r == A.rows:
            break
        p = next((i for i in range(r, A.rows) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(A.rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return Matrix(A.rows, A.cols, m), tuple(pivots)


def rank(A: Matrix) -> int:
    return len(rref(A)[1])


def kernel_basis(A: Matrix) -> Matrix:
    """Columns span the null space; one column per free variable, set to 1."""
    R, pivots = rref(A)
    free = [j for j in range(A.cols) if j not in pivots]
    cols = []
    for fj in free:
        v = [Fraction(0)] * A.cols
        v[fj] = Fraction(1)
        for i, pj in enumerate(pivots):
            v[pj] = -R[i, fj]
        cols.append(v)
    return Matrix.from_columns(cols, A.cols)


def column_echelon(A: Matrix) -> Matrix:
    """Reduced column echelon basis of the column space of ``A``.

    This is the canonical spanning matrix used for every subspace in the
    package, so equal subspaces always compare equal as matrices.
    """
    R, pivots = rref(A.T)
    return R.submatrix(range(len(pivots)), range(R.cols)).T


def rref_decompose(A: Matrix) -> tuple[int, Matrix, Matrix]:
    """Return ``(rank, kernel_basis, image_basis)`` of ``A``."""
    image = column_echelon(A)
    return image.cols, kernel_basis(A), image


def invert(A: Matrix) -> Matrix:
    if not A.is_square:
        raise NotSquare(f"cannot invert a {A.rows}x{A.cols} matrix")
    n = A.rows
    R, pivots = rref(A.hstack(Matrix.identity(n)))
    if pivots[:n] != tuple(range(n)):
        raise Singular(f"matrix of size {n} has rank < {n}")
    return R.submatrix(range(n), range(n, 2 * n))


def is_invertible(A: Matrix) -> bool:
    return A.is_square and rank(A) == A.rows


def det(A: Matrix) -> Fraction:
    if not A.is_square:
        raise NotSquare(f"determinant of a {A.rows}x{A.cols} matrix")
    m = A.tolist()
    n = A.rows
    d = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            d = -d
        d *= m[c][c]
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] / m[c][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return d


def solve(A: Matrix, B: Matrix) -> Matrix:
    """Some X with ``A @ X == B``; raises ShapeMismatch when none exists.

    The solution takes free variables equal to zero, so it is deterministic.
    """
    if A.rows != B.rows:
        raise ShapeMismatch(f"solve: {A.shape} against {B.shape}")
    R, pivots = rref(A.hstack(B))
    if any(p >= A.cols for p in pivots):
        raise ShapeMismatch("right-hand side is not in the column space")
    X = [[Fraction(0)] * B.cols for _ in range(A.cols)]
    for i, pj in enumerate(pivots):
        X[pj] = list(R.row(i)[A.cols:])
    return Matrix(A.cols, B.cols, X)


def left_annihilator(A: Matrix) -> Matrix:
    """Matrix P with full row rank and ``P @ A == 0``, whose kernel is col(A)."""
    return kernel_basis(A.T).T
