"""K-theory of named examples.

Spaces enter through reduced K-theory, i.e. as ``C_0(X - pt)``.
"""

from __future__ import annotations

from . import fgab
from .fgab import FgAbGroup
from .intlin import IntMatrix, cokernel, kernel_basis
from .kkobj import GradedGroup, Parity, dual


class InvalidMatrix(ValueError):
    pass


def sphere(n: int) -> GradedGroup:
    if n < 0:
        raise ValueError("sphere dimension must be nonnegative")
    return GradedGroup(fgab.Z, fgab.TRIVIAL) if n % 2 == 0 else GradedGroup(fgab.TRIVIAL, fgab.Z)


def moore(p: int) -> GradedGroup:
    """Reduced K-theory of the mod-p Moore space: ``(Z/p, 0)``."""
    if p < 2:
        raise ValueError(f"Moore space order must be >= 2, got {p}")
    return GradedGroup(FgAbGroup.cyclic(p), fgab.TRIVIAL)


def torus(n: int) -> GradedGroup:
    """K-theory of the n-torus, ``(Z^(2^(n-1)), Z^(2^(n-1)))`` for ``n >= 1``."""
    if n < 0:
        raise ValueError("torus dimension must be nonnegative")
    if n == 0:
        return GradedGroup(fgab.Z, fgab.TRIVIAL)
    half = 2 ** (n - 1)
    return GradedGroup(FgAbGroup.free(half), FgAbGroup.free(half))


def _check_01(a: IntMatrix):
    if a.rows != a.cols:
        raise InvalidMatrix(f"Cuntz-Krieger matrix must be square, got {a.rows}x{a.cols}")
    if a.rows == 0:
        raise InvalidMatrix("Cuntz-Krieger matrix must be nonempty")
    if any(x not in (0, 1) for x in a.entries):
        raise InvalidMatrix("Cuntz-Krieger matrix entries must be 0 or 1")
    rows = a.to_rows()
    if any(not any(r) for r in rows):
        raise InvalidMatrix("Cuntz-Krieger matrix has a zero row")
    if any(not any(c) for c in a.columns()):
        raise InvalidMatrix("Cuntz-Krieger matrix has a zero column")


def cuntz_krieger(a: IntMatrix) -> GradedGroup:
    """``K0 = coker(I - A^t)``, ``K1 = ker(I - A^t)``.

    >>> str(cuntz_krieger(IntMatrix.from_rows([[1, 1, 1]] * 3)))
    '[Z/2 ; 0]'
    """
    _check_01(a)
    m = IntMatrix.identity(a.rows) - a.T
    return GradedGroup(cokernel(m), FgAbGroup.free(kernel_basis(m).cols))


def ck_duality_check(a: IntMatrix) -> bool:
    """True iff ``K*(O_{A^t})`` is the odd dual of ``K*(O_A)``."""
    return cuntz_krieger(a.T) == dual(cuntz_krieger(a), Parity.ODD)


def read_01_matrix(text: str) -> IntMatrix:
    """Parse ``n`` followed by ``n`` lines of ``n`` space-separated 0/1 digits."""
    lines = [ln.split() for ln in text.strip().splitlines() if ln.strip()]
    if not lines or len(lines[0]) != 1:
        raise InvalidMatrix("first line must hold the matrix size n")
    try:
        n = int(lines[0][0])
        rows = [[int(x) for x in ln] for ln in lines[1:]]
    except ValueError as e:
        raise InvalidMatrix(f"non-integer entry: {e}") from e
    if len(rows) != n or any(len(r) != n for r in rows):
        raise InvalidMatrix(f"expected {n} rows of {n} entries")
    m = IntMatrix.from_rows(rows, n)
    _check_01(m)
    return m


def write_01_matrix(a: IntMatrix) -> str:
    return "\n".join([str(a.rows)] + [" ".join(map(str, r)) for r in a.to_rows()]) + "\n"
