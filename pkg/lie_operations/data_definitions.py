from dataclasses import dataclass
from typing import List, Tuple, Union

import numpy as np

from common.errors import ShapeMismatch
from tensor_operations.data_definitions import MatrixDocument
from tensor_operations.linear_algebra import fraction_array, frozen


@dataclass(frozen=True, eq=False)
class MetrizedLieAlgebra:
    """Structure constants [b_i, b_j] = Σ_l structure[i, j, l] b_l and the Gram matrix ⟨b_i, b_j⟩.

    Only shapes are checked here, see lie_helper.check_metrized.
    """

    dim: int
    structure: np.ndarray
    gram: np.ndarray

    def __post_init__(self):
        structure = fraction_array(self.structure)
        gram = fraction_array(self.gram)
        if structure.shape != (self.dim,) * 3:
            raise ShapeMismatch("Structure constants must have shape {shape}".format(shape=(self.dim,) * 3), witness=structure.shape)
        if gram.shape != (self.dim,) * 2:
            raise ShapeMismatch("Gram matrix must have shape {shape}".format(shape=(self.dim,) * 2), witness=gram.shape)
        object.__setattr__(self, "structure", frozen(structure))
        object.__setattr__(self, "gram", frozen(gram))

    def __eq__(self, other):
        if not isinstance(other, MetrizedLieAlgebra):
            return NotImplemented
        return self.dim == other.dim and bool(np.all(self.structure == other.structure)) and bool(np.all(self.gram == other.gram))

    __hash__ = None


@dataclass(frozen=True, eq=False)
class Representation:
    n: int
    images: Tuple[np.ndarray, ...]

    def __post_init__(self):
        images = []
        for position, image in enumerate(self.images):
            image = fraction_array(image)
            if image.shape != (self.n, self.n):
                raise ShapeMismatch("Image of basis element {i} is not {n}x{n}".format(i=position + 1, n=self.n), witness=position + 1)
            images.append(frozen(image))
        object.__setattr__(self, "images", tuple(images))

    def __eq__(self, other):
        if not isinstance(other, Representation):
            return NotImplemented
        return (
            self.n == other.n
            and len(self.images) == len(other.images)
            and all(bool(np.all(a == b)) for a, b in zip(self.images, other.images))
        )

    __hash__ = None


@dataclass
class RepresentationDocument:
    n: int
    images: List[MatrixDocument]


@dataclass
class LieDocument:
    kind: str
    dim: int
    structure: List[List[Union[int, str]]]
    gram: List[List[Union[int, str]]]
    rep: RepresentationDocument
