import logging
from typing import Sequence, Tuple

import numpy as np

from algebra_check_operations.data_definitions import WeightSystemOracle
from common.errors import (
    Degenerate,
    JacobiFails,
    NotAdInvariant,
    NotAntisymmetric,
    NotARepresentation,
    NotBracketClosed,
    NotSymmetricForm,
    ShapeMismatch,
    Singular,
)
from partition_function_operations.partition_function_helper import f_of
from tensor_operations.data_definitions import SymTensor
from tensor_operations.linear_algebra import fraction_array, inverse, solve_in_span, zeros
from tensor_operations.tensor_helper import sym_from_pairs

from .data_definitions import MetrizedLieAlgebra, Representation

logger = logging.getLogger("django")


def bracket(g: MetrizedLieAlgebra, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """[x, y] for coordinate vectors in the basis of g"""
    return np.tensordot(y, np.tensordot(x, g.structure, axes=1), axes=1)


def _basis_vector(dim: int, i: int) -> np.ndarray:
    vector = zeros(dim)
    vector[i] = 1
    return vector


def check_metrized(g: MetrizedLieAlgebra) -> None:
    """Raise on the first failing axiom; witnesses are 1-based basis indices"""
    dim = g.dim
    c = g.structure
    for i in range(dim):
        for j in range(dim):
            if np.any(c[i, j, :] != -c[j, i, :]):
                logger.error("Bracket is not antisymmetric on ({i}, {j})".format(i=i + 1, j=j + 1))
                raise NotAntisymmetric("[b_i, b_j] differs from -[b_j, b_i]", witness=(i + 1, j + 1))

    basis = [_basis_vector(dim, i) for i in range(dim)]
    for i in range(dim):
        for j in range(i + 1, dim):
            for l in range(j + 1, dim):
                x, y, z = basis[i], basis[j], basis[l]
                cyclic_sum = bracket(g, x, bracket(g, y, z)) + bracket(g, y, bracket(g, z, x)) + bracket(g, z, bracket(g, x, y))
                if np.any(cyclic_sum != 0):
                    logger.error("Jacobi identity fails on ({i}, {j}, {l})".format(i=i + 1, j=j + 1, l=l + 1))
                    raise JacobiFails("Jacobi identity fails", witness=(i + 1, j + 1, l + 1))

    differing = np.argwhere(g.gram != g.gram.T)
    if len(differing):
        witness = tuple(int(i) + 1 for i in differing[0])
        raise NotSymmetricForm("Gram matrix is not symmetric", witness=witness)

    try:
        inverse(g.gram)
    except Singular as e:
        logger.error("Gram matrix is degenerate")
        raise Degenerate("Gram matrix is degenerate, no pivot in column {col}".format(col=e.witness + 1), witness=e.witness + 1)

    # ⟨[b_i, b_j], b_l⟩ = Σ_p c[i, j, p] gram[p, l] against ⟨b_i, [b_j, b_l]⟩ = Σ_p gram[i, p] c[j, l, p]
    left = np.tensordot(c, g.gram, axes=([2], [0]))
    right = np.tensordot(g.gram, c, axes=([1], [2]))
    for i in range(dim):
        for j in range(dim):
            for l in range(dim):
                if left[i, j, l] != right[i, j, l]:
                    logger.error("Form is not ad-invariant on ({i}, {j}, {l})".format(i=i + 1, j=j + 1, l=l + 1))
                    raise NotAdInvariant("<[b_i, b_j], b_l> differs from <b_i, [b_j, b_l]>", witness=(i + 1, j + 1, l + 1))


def check_representation(g: MetrizedLieAlgebra, rho: Representation) -> None:
    if len(rho.images) != g.dim:
        raise ShapeMismatch("Representation gives {count} images for dimension {dim}".format(count=len(rho.images), dim=g.dim), witness=len(rho.images))
    images = rho.images
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            commutator = images[i].dot(images[j]) - images[j].dot(images[i])
            expected = zeros((rho.n, rho.n))
            for l in range(g.dim):
                if g.structure[i, j, l] != 0:
                    expected = expected + g.structure[i, j, l] * images[l]
            if np.any(commutator != expected):
                logger.error("Representation does not respect the bracket on ({i}, {j})".format(i=i + 1, j=j + 1))
                raise NotARepresentation("rho([b_i, b_j]) differs from [rho(b_i), rho(b_j)]", witness=(i + 1, j + 1))


def casimir_tensor(g: MetrizedLieAlgebra, rho: Representation) -> SymTensor:
    """R(g, ρ) = Σ_i ρ(b_i)⊗ρ(b^i) with b^i the basis dual under the form"""
    check_metrized(g)
    check_representation(g, rho)
    gram_inverse = inverse(g.gram)
    pairs = []
    for i in range(g.dim):
        dual_image = zeros((rho.n, rho.n))
        for j in range(g.dim):
            if gram_inverse[i, j] != 0:
                dual_image = dual_image + gram_inverse[i, j] * rho.images[j]
        pairs.append((rho.images[i], dual_image))
    return sym_from_pairs(rho.n, pairs)


def weight_system(g: MetrizedLieAlgebra, rho: Representation, name: str = "phi") -> WeightSystemOracle:
    return f_of(casimir_tensor(g, rho), name=name)


def change_basis(g: MetrizedLieAlgebra, rho: Representation, p: np.ndarray) -> Tuple[MetrizedLieAlgebra, Representation]:
    """The same data in the basis b'_i = Σ_j p[i, j] b_j"""
    p = fraction_array(p)
    if p.shape != (g.dim, g.dim):
        raise ShapeMismatch("Change of basis must be {dim}x{dim}".format(dim=g.dim), witness=p.shape)
    p_inverse = inverse(p)
    structure = np.tensordot(p, g.structure, axes=([1], [0]))
    structure = np.moveaxis(np.tensordot(p, structure, axes=([1], [1])), 0, 1)
    structure = np.tensordot(structure, p_inverse, axes=([2], [0]))
    gram = p.dot(g.gram).dot(p.T)
    images = []
    for i in range(g.dim):
        image = zeros((rho.n, rho.n))
        for j in range(g.dim):
            if p[i, j] != 0:
                image = image + p[i, j] * rho.images[j]
        images.append(image)
    return MetrizedLieAlgebra(dim=g.dim, structure=structure, gram=gram), Representation(n=rho.n, images=tuple(images))


def matrix_lie_algebra(basis: Sequence[np.ndarray]) -> Tuple[MetrizedLieAlgebra, Representation]:
    """The Lie algebra spanned by `basis` with the trace form, acting by inclusion"""
    basis = [fraction_array(matrix) for matrix in basis]
    if not basis:
        raise ShapeMismatch("A matrix Lie algebra needs at least one basis matrix", witness=0)
    n = basis[0].shape[0]
    dim = len(basis)
    structure = zeros((dim, dim, dim))
    for i in range(dim):
        for j in range(dim):
            commutator = basis[i].dot(basis[j]) - basis[j].dot(basis[i])
            coefficients = solve_in_span(basis, commutator)
            if coefficients is None:
                logger.error("Span is not closed under the bracket at ({i}, {j})".format(i=i + 1, j=j + 1))
                raise NotBracketClosed("[B_i, B_j] is outside the span", witness=(i + 1, j + 1))
            structure[i, j, :] = coefficients
    gram = fraction_array([[np.trace(basis[i].dot(basis[j])) for j in range(dim)] for i in range(dim)], (dim, dim))
    g = MetrizedLieAlgebra(dim=dim, structure=structure, gram=gram)
    rho = Representation(n=n, images=tuple(basis))
    check_metrized(g)
    check_representation(g, rho)
    return g, rho
