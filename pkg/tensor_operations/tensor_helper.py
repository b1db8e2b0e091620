import logging
import math
import random
from fractions import Fraction
from typing import List, Sequence, Tuple

import numpy as np

from common.errors import ShapeMismatch

from .data_definitions import GlTensor, SymTensor
from .linear_algebra import determinant, fraction_array, frozen, identity_matrix, inverse, zeros

logger = logging.getLogger("django")

MatrixPair = Tuple[np.ndarray, np.ndarray]


def _check_matrix(matrix: np.ndarray, n: int) -> np.ndarray:
    matrix = fraction_array(matrix)
    if matrix.shape != (n, n):
        raise ShapeMismatch("Expected a {n}x{n} matrix".format(n=n), witness=matrix.shape)
    return matrix


def pair_tensor(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """X⊗Y laid out as [a, b, c, d] = X[a, c] Y[b, d]"""
    return np.multiply.outer(x, y).transpose(0, 2, 1, 3)


def sym_from_pairs(n: int, pairs: Sequence[MatrixPair]) -> SymTensor:
    entries = zeros((n,) * 4)
    for x, y in pairs:
        entries = entries + pair_tensor(_check_matrix(x, n), _check_matrix(y, n))
    return SymTensor(n=n, entries=entries)


def _transform_axis(array: np.ndarray, matrix: np.ndarray, axis: int) -> np.ndarray:
    return np.moveaxis(np.tensordot(matrix, array, axes=([1], [axis])), 0, axis)


def gl_action(h: np.ndarray, r: SymTensor) -> SymTensor:
    """h·R, conjugating both tensor factors by h"""
    h = _check_matrix(h, r.n)
    h_inverse_t = inverse(h).T
    entries = np.array(r.entries, dtype=object)
    for axis, matrix in ((0, h), (1, h), (2, h_inverse_t), (3, h_inverse_t)):
        entries = _transform_axis(entries, matrix, axis)
    return SymTensor(n=r.n, entries=entries)


def rank_factorize(r: SymTensor) -> List[MatrixPair]:
    """Pairs (X_α, Y_α) with R = Σ X_α⊗Y_α, as many as the rank of the n²×n² matrix.

    Fraction-free elimination on the integer matrix L·R, L the common denominator:
    each step pivots on the first nonzero entry in row-major order and the update
    divides exactly by the previous pivot.
    """
    n = r.n
    matrix = r.as_matrix()
    scale = math.lcm(1, *(value.denominator for value in matrix.flat))
    remainder = np.array([[int(value * scale) for value in row] for row in matrix], dtype=object).reshape(matrix.shape)
    previous = 1
    pairs = []
    while True:
        nonzero = np.argwhere(remainder != 0)
        if not len(nonzero):
            break
        p, q = (int(i) for i in nonzero[0])
        pivot = remainder[p, q]
        column = np.array(remainder[:, q], dtype=object)
        row = np.array(remainder[p, :], dtype=object)
        denominator = previous * pivot * scale
        x = fraction_array(column, (n, n))
        y = np.array([Fraction(value, denominator) for value in row], dtype=object).reshape(n, n)
        pairs.append((frozen(x), frozen(y)))
        remainder = (pivot * remainder - np.multiply.outer(column, row)) // previous
        previous = pivot
    logger.debug("Factorized a tensor on gl({n}) into {r} pairs".format(n=n, r=len(pairs)))
    return pairs


def _check_compatible(x: GlTensor, y: GlTensor) -> None:
    if (x.n, x.k) != (y.n, y.k):
        raise ShapeMismatch("Tensors live in different spaces", witness=((x.n, x.k), (y.n, y.k)))


def trace_pair(x: GlTensor, y: GlTensor) -> Fraction:
    """tr(xy) on (Cⁿ)^{⊗k}"""
    _check_compatible(x, y)
    return Fraction(np.sum(x.as_operator() * y.as_operator().T))


def compose_operators(x: GlTensor, y: GlTensor) -> GlTensor:
    """The operator product xy, applying x first along the strands"""
    _check_compatible(x, y)
    return GlTensor.from_operator(x.n, x.k, x.as_operator().dot(y.as_operator()))


def tensor_product(x: GlTensor, y: GlTensor) -> GlTensor:
    if x.n != y.n:
        raise ShapeMismatch("Tensors over different n", witness=(x.n, y.n))
    entries = np.asarray(np.multiply.outer(x.entries, y.entries), dtype=object)
    return GlTensor(n=x.n, k=x.k + y.k, entries=entries)


def identity_operator(n: int, k: int) -> GlTensor:
    return GlTensor.from_operator(n, k, identity_matrix(n**k))


def permutation_operator(n: int, permutation: Sequence[int]) -> GlTensor:
    """Entries Π_i δ(in_π(i), out_i): the strand leaving root π(i) ends at sink i"""
    k = len(permutation)
    entries = zeros((n,) * (2 * k))
    for index in np.ndindex(*entries.shape):
        if all(index[2 * permutation[i]] == index[2 * i + 1] for i in range(k)):
            entries[index] = Fraction(1)
    return GlTensor(n=n, k=k, entries=entries)


def random_matrix(n: int, rng: random.Random, bound: int = 3) -> np.ndarray:
    return fraction_array([[rng.randint(-bound, bound) for _ in range(n)] for _ in range(n)], (n, n))


def random_invertible(n: int, rng: random.Random, bound: int = 3) -> np.ndarray:
    while True:
        candidate = random_matrix(n, rng, bound)
        if determinant(candidate) != 0:
            return candidate


def random_sym_tensor(n: int, rng: random.Random, bound: int = 3) -> SymTensor:
    raw = fraction_array([rng.randint(-bound, bound) for _ in range(n**4)], (n,) * 4)
    return SymTensor(n=n, entries=raw + raw.transpose(1, 0, 3, 2))
