"""
Exact Linear Algebra

Rank, canonical kernel bases and linear solves over Q. Elimination is
fraction-free (Bareiss) on integer-scaled rows, followed by a rational
back-substitution to reduced row echelon form. Pivots are always the first
nonzero entry of a column, so every result is deterministic.
"""

import logging
from fractions import Fraction
from math import lcm
from typing import List, Optional, Sequence, Tuple

from models.forms import ScalarLike, to_scalar
from models.matrix import ExactMatrix, Vector


logger = logging.getLogger(__name__)


def _integer_rows(rows: Sequence[Sequence[Fraction]]) -> List[List[int]]:
    """Scale every row by the lcm of its denominators"""
    scaled = []
    for row in rows:
        factor = lcm(*(v.denominator for v in row)) if row else 1
        scaled.append([int(v * factor) for v in row])
    return scaled


def bareiss_echelon(rows: Sequence[Sequence[ScalarLike]]) -> Tuple[List[List[int]], List[int], int]:
    """
    Fraction-free row echelon form

    Args:
        rows: Matrix rows with rational entries

    Returns:
        (integer echelon rows, pivot columns, sign of the row permutation)
    """
    work = _integer_rows([[to_scalar(v) for v in row] for row in rows])
    n_rows = len(work)
    n_cols = len(work[0]) if work else 0
    pivots: List[int] = []
    sign = 1
    previous = 1
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        pivot_row = next((i for i in range(r, n_rows) if work[i][c]), None)
        if pivot_row is None:
            continue
        if pivot_row != r:
            work[r], work[pivot_row] = work[pivot_row], work[r]
            sign = -sign
        pivot = work[r][c]
        for i in range(r + 1, n_rows):
            lead = work[i][c]
            for j in range(c + 1, n_cols):
                work[i][j] = (pivot * work[i][j] - lead * work[r][j]) // previous
            work[i][c] = 0
        previous = pivot
        pivots.append(c)
        r += 1
    return work, pivots, sign


def rref(rows: Sequence[Sequence[ScalarLike]]) -> Tuple[List[List[Fraction]], List[int]]:
    """Reduced row echelon form (nonzero rows only) and its pivot columns"""
    echelon, pivots, _ = bareiss_echelon(rows)
    reduced = [[Fraction(v) for v in echelon[i]] for i in range(len(pivots))]
    for idx in reversed(range(len(pivots))):
        c = pivots[idx]
        lead = reduced[idx][c]
        reduced[idx] = [v / lead for v in reduced[idx]]
        for above in range(idx):
            factor = reduced[above][c]
            if factor:
                reduced[above] = [a - factor * b for a, b in zip(reduced[above], reduced[idx])]
    return reduced, pivots


def rank(matrix: ExactMatrix) -> int:
    """Exact rank over Q"""
    if matrix.rows == 0 or matrix.cols == 0:
        return 0
    return len(bareiss_echelon(matrix.to_rows())[1])


def determinant(matrix: ExactMatrix) -> Fraction:
    """Determinant of a square rational matrix"""
    if matrix.rows != matrix.cols:
        raise ValueError(f"Determinant of a non-square {matrix.shape} matrix")
    if matrix.rows == 0:
        return Fraction(1)
    rows = matrix.to_rows()
    scale = Fraction(1)
    for row in rows:
        scale *= lcm(*(v.denominator for v in row))
    echelon, pivots, sign = bareiss_echelon(rows)
    if len(pivots) < matrix.rows:
        return Fraction(0)
    return Fraction(sign * echelon[-1][-1]) / scale


def echelon_basis(vectors: Sequence[Sequence[ScalarLike]]) -> List[Vector]:
    """Canonical basis (reduced echelon rows) of the span of ``vectors``"""
    if not vectors:
        return []
    reduced, _ = rref(vectors)
    return [tuple(row) for row in reduced]


def kernel_basis(matrix: ExactMatrix) -> List[Vector]:
    """
    Right kernel in reduced echelon form

    Each returned vector has its first nonzero coordinate equal to 1 and
    these leading positions strictly increase. The list is empty for a
    trivial kernel.
    """
    n = matrix.cols
    if n == 0:
        return []
    if matrix.rows == 0:
        return [tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)]
    reduced, pivots = rref(matrix.to_rows())
    free = [c for c in range(n) if c not in set(pivots)]
    raw = []
    for f in free:
        vector = [Fraction(0)] * n
        vector[f] = Fraction(1)
        for row, c in zip(reduced, pivots):
            vector[c] = -row[f]
        raw.append(vector)
    logger.debug(f"Kernel of {matrix.rows}x{n} matrix has dimension {len(raw)}")
    return echelon_basis(raw)


def reduce_against(vectors: Sequence[Sequence[ScalarLike]], subspace: Sequence[Sequence[Fraction]]) -> List[Vector]:
    """
    Reduce each vector modulo a subspace given by reduced echelon rows

    The result has a zero in every pivot position of ``subspace``.
    """
    reduced = []
    for vector in vectors:
        current = [to_scalar(v) for v in vector]
        for row in subspace:
            pivot = next(i for i, v in enumerate(row) if v)
            factor = current[pivot]
            if factor:
                current = [a - factor * b for a, b in zip(current, row)]
        reduced.append(tuple(current))
    return reduced


def solve_linear(matrix: ExactMatrix, rhs: Sequence[ScalarLike]) -> Optional[Vector]:
    """
    One exact solution x of matrix * x = rhs

    Free variables are set to zero. Returns None when the system is inconsistent.
    """
    values = [to_scalar(v) for v in rhs]
    if len(values) != matrix.rows:
        raise ValueError(f"Right-hand side of length {len(values)} for {matrix.rows} rows")
    n = matrix.cols
    if matrix.rows == 0:
        return tuple(Fraction(0) for _ in range(n))
    augmented = [list(row) + [b] for row, b in zip(matrix.to_rows(), values)]
    reduced, pivots = rref(augmented)
    if pivots and pivots[-1] == n:
        return None
    solution = [Fraction(0)] * n
    for row, c in zip(reduced, pivots):
        solution[c] = row[n]
    return tuple(solution)


def inverse(matrix: ExactMatrix) -> ExactMatrix:
    """Inverse of an invertible square matrix"""
    size = matrix.rows
    if size != matrix.cols:
        raise ValueError(f"Inverse of a non-square {matrix.shape} matrix")
    augmented = [list(row) + [Fraction(int(i == j)) for j in range(size)]
                 for i, row in enumerate(matrix.to_rows())]
    reduced, pivots = rref(augmented)
    if pivots[:size] != list(range(size)):
        raise ValueError("Matrix is singular")
    return ExactMatrix.from_rows([row[size:] for row in reduced[:size]], size)
