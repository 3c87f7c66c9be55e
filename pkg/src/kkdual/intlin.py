"""Exact integer linear algebra.

Matrices are immutable, row-major, and hold Python ints, so nothing ever
overflows.  The workhorse is :func:`snf`, a Smith normal form with the
transforming unimodular matrices; kernels and cokernels are read off it.

>>> snf(IntMatrix.from_rows([[2, 4], [6, 8]])).diag
(2, 4)
>>> cokernel(IntMatrix.from_rows([[-2]]))
FgAbGroup(rank=0, torsion=(2,))
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative matrix dimension")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> IntMatrix:
        """Build from a list of rows.  ``cols`` is needed only when there are no rows."""
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged rows")
        return cls(len(rows), cols, tuple(int(x) for r in rows for x in r))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], rows: int) -> IntMatrix:
        cols = [list(c) for c in columns]
        for c in cols:
            if len(c) != rows:
                raise ValueError("ragged columns")
        return cls(rows, len(cols), tuple(cols[j][i] for i in range(rows) for j in range(len(cols))))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntMatrix:
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    @classmethod
    def diagonal(cls, diag: Sequence[int], rows: int | None = None, cols: int | None = None) -> IntMatrix:
        rows = len(diag) if rows is None else rows
        cols = len(diag) if cols is None else cols
        out = [[0] * cols for _ in range(rows)]
        for i, d in enumerate(diag):
            out[i][i] = d
        return cls.from_rows(out, cols)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    def to_rows(self) -> list[list[int]]:
        c = self.cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.rows)]

    def column(self, j: int) -> list[int]:
        return [self.entries[i * self.cols + j] for i in range(self.rows)]

    def columns(self) -> list[list[int]]:
        return [self.column(j) for j in range(self.cols)]

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def T(self) -> IntMatrix:
        return IntMatrix.from_columns(self.to_rows(), self.cols)

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        a = self.to_rows()
        bt = other.columns()
        return IntMatrix.from_rows(
            [[sum(x * y for x, y in zip(r, c)) for c in bt] for r in a], other.cols)

    def __add__(self, other: IntMatrix) -> IntMatrix:
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return IntMatrix(self.rows, self.cols, tuple(x + y for x, y in zip(self.entries, other.entries)))

    def __neg__(self) -> IntMatrix:
        return IntMatrix(self.rows, self.cols, tuple(-x for x in self.entries))

    def __sub__(self, other: IntMatrix) -> IntMatrix:
        return self + (-other)

    def apply(self, v: Sequence[int]) -> list[int]:
        """Matrix-vector product."""
        if len(v) != self.cols:
            raise ValueError("vector length mismatch")
        c = self.cols
        return [sum(self.entries[i * c + j] * v[j] for j in range(c)) for i in range(self.rows)]

    def hstack(self, other: IntMatrix) -> IntMatrix:
        if self.rows != other.rows:
            raise ValueError("row count mismatch")
        return IntMatrix.from_rows(
            [a + b for a, b in zip(self.to_rows(), other.to_rows())], self.cols + other.cols)

    def submatrix(self, rows: Iterable[int], cols: Iterable[int]) -> IntMatrix:
        rows, cols = list(rows), list(cols)
        return IntMatrix.from_rows([[self[i, j] for j in cols] for i in rows], len(cols))

    def is_zero(self) -> bool:
        return not any(self.entries)

    def __repr__(self):
        return f"IntMatrix.from_rows({self.to_rows()!r}, cols={self.cols})"


@dataclass(frozen=True)
class SnfResult:
    """``U @ M @ V == S`` with ``S`` diagonal and ``diag`` a divisor chain."""
    U: IntMatrix
    S: IntMatrix
    V: IntMatrix
    diag: tuple[int, ...]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diag if d)


def snf(m: IntMatrix) -> SnfResult:
    """Smith normal form with transforms.

    Pivots on a smallest nonzero entry of the remaining block, which keeps
    the intermediate entries small.  Diagonal entries come out nonnegative,
    each dividing the next, zeros last.
    """
    r, c = m.rows, m.cols
    a = m.to_rows()
    u = [[int(i == j) for j in range(r)] for i in range(r)]
    # v is kept transposed so column operations are row operations on it
    vt = [[int(i == j) for j in range(c)] for i in range(c)]

    def swap_rows(i, k):
        a[i], a[k] = a[k], a[i]
        u[i], u[k] = u[k], u[i]

    def swap_cols(j, k):
        for row in a:
            row[j], row[k] = row[k], row[j]
        vt[j], vt[k] = vt[k], vt[j]

    def add_row(src, dst, q):  # row dst += q * row src
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + q * y for x, y in zip(u[dst], u[src])]

    def add_col(src, dst, q):  # col dst += q * col src
        for row in a:
            row[dst] += q * row[src]
        vt[dst] = [x + q * y for x, y in zip(vt[dst], vt[src])]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]

    t = 0
    while t < min(r, c):
        pivot = None
        for i in range(t, r):
            for j in range(t, c):
                if a[i][j] and (pivot is None or abs(a[i][j]) < abs(a[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])
        while True:
            p = a[t][t]
            done = True
            for i in range(t + 1, r):
                if a[i][t]:
                    add_row(t, i, -(a[i][t] // p))
                    if a[i][t]:
                        done = False
            for j in range(t + 1, c):
                if a[t][j]:
                    add_col(t, j, -(a[t][j] // p))
                    if a[t][j]:
                        done = False
            if done:
                # pivot clears its row and column; enforce divisibility of the rest
                bad = next(((i, j) for i in range(t + 1, r) for j in range(t + 1, c)
                            if a[i][j] % p), None)
                if bad is None:
                    break
                add_row(bad[0], t, 1)
                continue
            # a remainder smaller than the pivot appeared; move it into place
            best = None
            for i in range(t, r):
                if a[i][t] and (best is None or abs(a[i][t]) < abs(best[2])):
                    best = (i, t, a[i][t])
            for j in range(t, c):
                if a[t][j] and abs(a[t][j]) < abs(best[2]):
                    best = (t, j, a[t][j])
            swap_rows(t, best[0])
            swap_cols(t, best[1])
        if a[t][t] < 0:
            negate_row(t)
        t += 1

    k = min(r, c)
    diag = tuple(a[i][i] for i in range(k))
    return SnfResult(
        U=IntMatrix.from_rows(u, r),
        S=IntMatrix.from_rows(a, c),
        V=IntMatrix.from_columns(vt, c),
        diag=diag,
    )


def rank(m: IntMatrix) -> int:
    return snf(m).rank


def kernel_basis(m: IntMatrix) -> IntMatrix:
    """Columns form a basis of the integer null space ``{x : m x = 0}``."""
    res = snf(m)
    k = res.rank
    # M V = U^-1 S, and S kills exactly the columns past the rank
    return res.V.submatrix(range(m.cols), range(k, m.cols))


def image_basis(m: IntMatrix) -> IntMatrix:
    """Columns form a basis of the column span of ``m``."""
    res = snf(m)
    k = res.rank
    # columns of M V are U^-1 S; the first k are a basis of the image
    mv = m @ res.V
    return mv.submatrix(range(m.rows), range(k))


def cokernel(m: IntMatrix):
    """The group ``Z^rows / (column span of m)`` in canonical form."""
    from .fgab import FgAbGroup

    res = snf(m)
    nonzero = [d for d in res.diag if d]
    torsion = tuple(d for d in nonzero if d != 1)
    return FgAbGroup(m.rows - len(nonzero), torsion)


def det(m: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    if m.rows != m.cols:
        raise ValueError("determinant of a non-square matrix")
    n = m.rows
    a = m.to_rows()
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1] if n else 1
