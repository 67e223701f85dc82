"""Exact integer linear algebra helpers.

Vectors are sparse dictionaries from row labels to integers.  Smith normal
forms come from sympy; the bounded nonnegative solver is a depth-first search
with interval pruning, which is all the enumeration code needs.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Hashable, Iterator, Mapping, Sequence

from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_decomp

Vector = Mapping[Hashable, int]


def nonnegative_solutions(
    columns: Sequence[Vector], target: Vector, cap: int
) -> Iterator[tuple[int, ...]]:
    """All y in {0..cap}^n with sum_k y_k * columns[k] == target.

    Solutions are produced in lexicographic order of the coefficient tuple.
    """
    n = len(columns)
    rows = set(target)
    for col in columns:
        rows.update(col)
    rows = sorted(rows, key=repr)
    index = {r: i for i, r in enumerate(rows)}
    m = len(rows)
    dense = [[0] * m for _ in range(n)]
    for k, col in enumerate(columns):
        for r, v in col.items():
            dense[k][index[r]] = v
    goal = [0] * m
    for r, v in target.items():
        goal[index[r]] = v
    # suffix bounds: reachable range of the contributions of variables k..n-1
    low = [[0] * m for _ in range(n + 1)]
    high = [[0] * m for _ in range(n + 1)]
    for k in range(n - 1, -1, -1):
        for r in range(m):
            a = dense[k][r] * cap
            low[k][r] = low[k + 1][r] + min(0, a)
            high[k][r] = high[k + 1][r] + max(0, a)
    residual = list(goal)
    choice = [0] * n

    def feasible(k: int) -> bool:
        lo, hi = low[k], high[k]
        for r in range(m):
            if residual[r] < lo[r] or residual[r] > hi[r]:
                return False
        return True

    def search(k: int):
        if k == n:
            if not any(residual):
                yield tuple(choice)
            return
        col = dense[k]
        for value in range(cap + 1):
            if value:
                for r in range(m):
                    residual[r] -= col[r]
            choice[k] = value
            if feasible(k + 1):
                yield from search(k + 1)
        for r in range(m):
            residual[r] += cap * col[r]
        choice[k] = 0

    if feasible(0):
        yield from search(0)


def rank(matrix: Sequence[Sequence[int]]) -> int:
    """Rank over the rationals."""
    rows = [[Fraction(v) for v in row] for row in matrix]
    if not rows:
        return 0
    width = len(rows[0])
    r = 0
    for c in range(width):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                factor = rows[i][c] / rows[r][c]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return r


def determinant(matrix: Sequence[Sequence[int]]) -> int:
    if not matrix:
        return 1
    return int(Matrix(matrix).det())


def smith_decomposition(matrix: Sequence[Sequence[int]], nrows: int, ncols: int):
    """Return (diagonal entries, S, T) with S * A * T diagonal.

    S and T are unimodular sympy matrices.  Handles empty shapes.
    """
    if nrows == 0:
        return [], Matrix.zeros(0, 0), Matrix.eye(ncols)
    if ncols == 0:
        return [], Matrix.eye(nrows), Matrix.zeros(0, 0)
    A = Matrix(nrows, ncols, lambda i, j: matrix[i][j])
    D, S, T = smith_normal_decomp(A, domain=ZZ)
    diagonal = [int(D[i, i]) for i in range(min(nrows, ncols)) if D[i, i] != 0]
    return diagonal, S, T


def integer_kernel(matrix: Sequence[Sequence[int]], ncols: int) -> list[list[int]]:
    """A Z-basis of {x in Z^ncols : A x = 0}."""
    nrows = len(matrix)
    if ncols == 0:
        return []
    if nrows == 0:
        return [[1 if i == j else 0 for i in range(ncols)] for j in range(ncols)]
    diagonal, _S, T = smith_decomposition(matrix, nrows, ncols)
    r = len(diagonal)
    return [[int(T[i, j]) for i in range(ncols)] for j in range(r, ncols)]
