import logging
from dataclasses import dataclass
from typing import List, Union

import numpy as np

from common.errors import NotSymmetric, ShapeMismatch

from .linear_algebra import fraction_array, frozen

logger = logging.getLogger("django")


@dataclass(frozen=True, eq=False)
class SymTensor:
    """R in S²(gl(n)) stored densely: entries[a, b, c, d] = R^{c,d}_{a,b}.

    For a chord uv, a and b color the edges entering u and v, c and d the edges
    leaving them. Swapping the two chord ends leaves R unchanged.
    """

    n: int
    entries: np.ndarray

    def __post_init__(self):
        entries = fraction_array(self.entries)
        if entries.shape != (self.n,) * 4:
            raise ShapeMismatch("Expected a tensor of shape {shape}".format(shape=(self.n,) * 4), witness=entries.shape)
        swapped = entries.transpose(1, 0, 3, 2)
        differing = np.argwhere(entries != swapped)
        if len(differing):
            witness = tuple(int(i) + 1 for i in differing[0])
            logger.error("Tensor is not symmetric at {witness}".format(witness=witness))
            raise NotSymmetric("R[a,b,c,d] differs from R[b,a,d,c]", witness=witness)
        object.__setattr__(self, "entries", frozen(entries))

    def __eq__(self, other):
        if not isinstance(other, SymTensor):
            return NotImplemented
        return self.n == other.n and bool(np.all(self.entries == other.entries))

    __hash__ = None

    def as_matrix(self) -> np.ndarray:
        """The n²×n² matrix with row (a, c) and column (b, d)"""
        n = self.n
        return self.entries.transpose(0, 2, 1, 3).reshape(n * n, n * n)

    def is_zero(self) -> bool:
        return bool(np.all(self.entries == 0))


@dataclass(frozen=True, eq=False)
class GlTensor:
    """An element of gl(n)^{⊗k}; axes are (in_1, out_1, ..., in_k, out_k)"""

    n: int
    k: int
    entries: np.ndarray

    def __post_init__(self):
        entries = fraction_array(self.entries)
        if entries.shape != (self.n,) * (2 * self.k):
            raise ShapeMismatch("Expected a tensor of shape {shape}".format(shape=(self.n,) * (2 * self.k)), witness=entries.shape)
        object.__setattr__(self, "entries", frozen(entries))

    def __eq__(self, other):
        if not isinstance(other, GlTensor):
            return NotImplemented
        return self.n == other.n and self.k == other.k and bool(np.all(self.entries == other.entries))

    __hash__ = None

    def as_operator(self) -> np.ndarray:
        """The n^k × n^k matrix acting on (Cⁿ)^{⊗k}, rows indexed by inputs"""
        size = self.n**self.k
        order = list(range(0, 2 * self.k, 2)) + list(range(1, 2 * self.k, 2))
        return self.entries.transpose(order).reshape(size, size)

    @classmethod
    def from_operator(cls, n: int, k: int, operator: np.ndarray) -> "GlTensor":
        split = np.asarray(operator, dtype=object).reshape((n,) * (2 * k))
        # (ins..., outs...) back to interleaved
        order = [axis for j in range(k) for axis in (j, k + j)]
        return cls(n=n, k=k, entries=split.transpose(order))

    def scalar(self):
        if self.k != 0:
            raise ShapeMismatch("Only a 0-tensor is a scalar", witness=self.k)
        return self.entries[()]


@dataclass
class SymTensorDocument:
    kind: str
    n: int
    entries: List[List[Union[int, str]]]


@dataclass
class MatrixDocument:
    rows: List[List[Union[int, str]]]
