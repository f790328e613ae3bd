"""Exact linear algebra: fraction-free determinants of polynomial matrices and
Gaussian elimination over Q or Q(sqrt d)."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from ..errors import SingularMatrix
from .field import inv
from .poly import Poly, _norm


def det_poly_matrix(M: Sequence[Sequence[Poly]]) -> Poly:
    """Determinant by Bareiss fraction-free elimination.

    Every intermediate entry is a minor of ``M``, so each division is exact.
    """
    n = len(M)
    if any(len(row) != n for row in M):
        raise ValueError("matrix must be square")
    if n == 0:
        raise ValueError("empty matrix")
    gens = next((e.gens for row in M for e in row if isinstance(e, Poly)), ())
    A = [[e if isinstance(e, Poly) else Poly.const(e, gens) for e in row] for row in M]
    sign = 1
    prev = Poly.const(1, gens)
    for k in range(n - 1):
        if A[k][k].is_zero():
            for i in range(k + 1, n):
                if not A[i][k].is_zero():
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return Poly.zero(gens)
        akk = A[k][k]
        for i in range(k + 1, n):
            aik = A[i][k]
            for j in range(k + 1, n):
                num = A[i][j] * akk - aik * A[k][j]
                A[i][j] = num if prev.is_constant() and prev.constant_term() == 1 else num.exquo(prev)
            A[i][k] = Poly.zero(gens)
        prev = akk
    d = A[n - 1][n - 1]
    return -d if sign < 0 else d


def det(M: Sequence[Sequence]) -> object:
    """Determinant of a scalar matrix over a field."""
    A = [list(row) for row in M]
    n = len(A)
    result = Fraction(1)
    for k in range(n):
        p = next((i for i in range(k, n) if A[i][k]), None)
        if p is None:
            return 0
        if p != k:
            A[k], A[p] = A[p], A[k]
            result = -result
        piv = A[k][k]
        result = result * piv
        ip = inv(piv)
        for i in range(k + 1, n):
            if A[i][k]:
                f = A[i][k] * ip
                for j in range(k, n):
                    A[i][j] = A[i][j] - f * A[k][j]
    return _norm(result)


def rref(M: Sequence[Sequence]) -> tuple[list[list], list[int]]:
    """Reduced row echelon form and pivot columns."""
    A = [list(row) for row in M]
    rows = len(A)
    cols = len(A[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if A[i][c]), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        ip = inv(A[r][c])
        A[r] = [_norm(x * ip) for x in A[r]]
        for i in range(rows):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [_norm(a - f * b) for a, b in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return A, pivots


def rank(M: Sequence[Sequence]) -> int:
    if not M:
        return 0
    return len(rref(M)[1])


def kernel(M: Sequence[Sequence]) -> list[list]:
    """Basis of the right null space."""
    cols = len(M[0])
    R, pivots = rref(M)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * cols
        v[f] = 1
        for i, p in enumerate(pivots):
            v[p] = _norm(-R[i][f])
        basis.append(v)
    return basis


def inverse(M: Sequence[Sequence]) -> list[list]:
    n = len(M)
    aug = [list(row) + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(M)]
    R, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise SingularMatrix("matrix is singular")
    return [row[n:] for row in R]


def matmul(A: Sequence[Sequence], B: Sequence[Sequence]) -> list[list]:
    return [[_norm(sum((a * b for a, b in zip(row, col)), 0)) for col in zip(*B)] for row in A]


def transpose(A: Sequence[Sequence]) -> list[list]:
    return [list(c) for c in zip(*A)]


def identity(n: int) -> list[list]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def matvec(A: Sequence[Sequence], v: Sequence) -> list:
    return [_norm(sum((a * x for a, x in zip(row, v)), 0)) for row in A]


class SparseEliminator:
    """Incremental rank of sparse rows (dicts column -> value) over a field."""

    def __init__(self):
        self.pivots: dict = {}

    def add(self, row: dict) -> bool:
        """Reduce ``row`` against the basis; return True if it was independent."""
        row = {k: v for k, v in row.items() if v}
        while row:
            col = min(row, key=self._colkey)
            if col in self.pivots:
                prow = self.pivots[col]
                f = row[col]
                for k, v in prow.items():
                    nv = row.get(k, 0) - f * v
                    if nv:
                        row[k] = nv
                    else:
                        row.pop(k, None)
            else:
                ip = inv(row[col])
                self.pivots[col] = {k: v * ip for k, v in row.items()}
                return True
        return False

    @staticmethod
    def _colkey(col):
        return col

    @property
    def rank(self) -> int:
        return len(self.pivots)


def quadratic_form_matrix(q: Poly) -> list[list]:
    """Symmetric matrix A with q = x^T A x (off-diagonal = half the mixed coefficient)."""
    n = q.nvars
    M = [[Fraction(0)] * n for _ in range(n)]
    for e, c in q.terms.items():
        idx = [i for i, k in enumerate(e) for _ in range(k)]
        if len(idx) != 2:
            raise ValueError("not a quadratic form")
        i, j = idx
        if i == j:
            M[i][i] += c
        else:
            M[i][j] += Fraction(c) / 2
            M[j][i] += Fraction(c) / 2
    return [[_norm(x) for x in row] for row in M]


def matrix_quadratic_form(A: Sequence[Sequence], gens: Sequence[str]) -> Poly:
    n = len(A)
    t: dict = {}
    for i in range(n):
        for j in range(n):
            if A[i][j]:
                e = [0] * n
                e[i] += 1
                e[j] += 1
                t[tuple(e)] = t.get(tuple(e), 0) + A[i][j]
    return Poly(t, gens)
