## Exact linear algebra on numpy object arrays of Fraction
import logging
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence

import numpy as np

from common.errors import ShapeMismatch, Singular

logger = logging.getLogger("django")

_to_fraction = np.vectorize(Fraction, otypes=[object])


def fraction_array(data, shape=None) -> np.ndarray:
    """A fresh object array of Fraction, reshaped when `shape` is given"""
    array = np.array(data, dtype=object)
    if array.size:
        array = np.array(_to_fraction(array), dtype=object)
    if shape is not None:
        array = array.reshape(shape)
    return array


def zeros(shape) -> np.ndarray:
    array = np.empty(shape, dtype=object)
    array.fill(Fraction(0))
    return array


def identity_matrix(n: int) -> np.ndarray:
    return np.array([[Fraction(int(i == j)) for j in range(n)] for i in range(n)], dtype=object).reshape(n, n)


def frozen(array: np.ndarray) -> np.ndarray:
    array.setflags(write=False)
    return array


def _check_square(matrix: np.ndarray) -> int:
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise ShapeMismatch("Expected a square matrix", witness=matrix.shape)
    return matrix.shape[0]


def bareiss_rank(matrix: np.ndarray) -> int:
    """Rank by fraction-free elimination; the pivot is the first nonzero entry of each column at or below the current row"""
    if matrix.ndim != 2:
        raise ShapeMismatch("Expected a matrix", witness=matrix.shape)
    rows = [list(row) for row in matrix]
    n_rows, n_cols = matrix.shape
    rank = 0
    previous = Fraction(1)
    for col in range(n_cols):
        if rank == n_rows:
            break
        pivot_row = next((r for r in range(rank, n_rows) if rows[r][col] != 0), None)
        if pivot_row is None:
            continue
        rows[rank], rows[pivot_row] = rows[pivot_row], rows[rank]
        pivot = rows[rank][col]
        for r in range(rank + 1, n_rows):
            factor = rows[r][col]
            rows[r] = [(value * pivot - factor * pivot_value) / previous for value, pivot_value in zip(rows[r], rows[rank])]
        previous = pivot
        rank += 1
    return rank


def determinant(matrix: np.ndarray) -> Fraction:
    n = _check_square(matrix)
    rows = [list(row) for row in matrix]
    sign = 1
    previous = Fraction(1)
    for col in range(n):
        pivot_row = next((r for r in range(col, n) if rows[r][col] != 0), None)
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != col:
            rows[col], rows[pivot_row] = rows[pivot_row], rows[col]
            sign = -sign
        pivot = rows[col][col]
        for r in range(col + 1, n):
            factor = rows[r][col]
            rows[r] = [(value * pivot - factor * pivot_value) / previous for value, pivot_value in zip(rows[r], rows[col])]
        previous = pivot
    if n == 0:
        return Fraction(1)
    return Fraction(sign) * rows[n - 1][n - 1]


def inverse(matrix: np.ndarray) -> np.ndarray:
    """Gauss-Jordan inverse; raises Singular naming the column without a pivot"""
    n = _check_square(matrix)
    x = fraction_array(matrix, (n, n))
    y = identity_matrix(n)
    for i in range(n):
        pivot_row = next((j for j in range(i, n) if x[j, i] != 0), None)
        if pivot_row is None:
            logger.error("Matrix is not invertible, no pivot in column {i}".format(i=i))
            raise Singular("Matrix is not invertible", witness=i)
        if pivot_row != i:
            x[[i, pivot_row]] = x[[pivot_row, i]]
            y[[i, pivot_row]] = y[[pivot_row, i]]
        pivot = x[i, i]
        x[i, :] = x[i, :] / pivot
        y[i, :] = y[i, :] / pivot
        for j in range(n):
            if j != i and x[j, i] != 0:
                factor = x[j, i]
                y[j, :] = y[j, :] - factor * y[i, :]
                x[j, :] = x[j, :] - factor * x[i, :]
    return y


def solve_in_span(vectors: Sequence[np.ndarray], target: np.ndarray) -> Optional[List[Fraction]]:
    """Coefficients c with Σ c_i v_i = target, or None when target is outside the span"""
    target = fraction_array(target).reshape(-1)
    n_rows = target.shape[0]
    n_cols = len(vectors)
    m = [[Fraction(vectors[c].reshape(-1)[r]) for c in range(n_cols)] + [target[r]] for r in range(n_rows)]
    pivot_columns = []
    piv_r = 0
    for piv_c in range(n_cols):
        i_row = next((r for r in range(piv_r, n_rows) if m[r][piv_c] != 0), None)
        if i_row is None:
            continue
        m[piv_r], m[i_row] = m[i_row], m[piv_r]
        fp = m[piv_r][piv_c]
        m[piv_r] = [value / fp for value in m[piv_r]]
        for r in range(n_rows):
            if r != piv_r and m[r][piv_c] != 0:
                fr = m[r][piv_c]
                m[r] = [value - fr * pivot_value for value, pivot_value in zip(m[r], m[piv_r])]
        pivot_columns.append(piv_c)
        piv_r += 1
    if any(m[r][n_cols] != 0 for r in range(piv_r, n_rows)):
        return None
    solution = [Fraction(0)] * n_cols
    for r, c in enumerate(pivot_columns):
        solution[c] = m[r][n_cols]
    return solution


def ordered_product(matrices: Iterable[np.ndarray], n: int) -> np.ndarray:
    """The ordered product of `matrices`, the identity when there are none"""
    product = identity_matrix(n)
    for matrix in matrices:
        product = product.dot(matrix)
    return product
