import logging
import re
from typing import List, Tuple

import numpy as np

from common.errors import UnknownName
from tensor_operations.linear_algebra import zeros

from .data_definitions import MetrizedLieAlgebra, Representation
from .lie_helper import matrix_lie_algebra

logger = logging.getLogger("django")

BUILTIN_PATTERN = re.compile(r"^(?P<family>gl|sl|abelian)\(?(?P<size>[0-9]+)\)?$")
BUILTIN_NAMES = ("glN", "sl2", "abelianD")
MAX_BUILTIN_SIZE = 6


def matrix_unit(n: int, i: int, j: int) -> np.ndarray:
    """E_i^j, the matrix with a single 1 in row i and column j (0-based)"""
    unit = zeros((n, n))
    unit[i, j] = 1
    return unit


def gl_basis(n: int) -> List[np.ndarray]:
    return [matrix_unit(n, i, j) for i in range(n) for j in range(n)]


def sl2_basis() -> List[np.ndarray]:
    """e, f, h"""
    return [matrix_unit(2, 0, 1), matrix_unit(2, 1, 0), matrix_unit(2, 0, 0) - matrix_unit(2, 1, 1)]


def abelian_basis(d: int) -> List[np.ndarray]:
    return [matrix_unit(d, i, i) for i in range(d)]


def builtin(name: str) -> Tuple[MetrizedLieAlgebra, Representation]:
    """gl(n), sl(2) and abelian(d) with the trace form of their defining representation.

    Names are written "gl2" or "gl(2)".
    """
    match = BUILTIN_PATTERN.match(name.strip().lower())
    if match is None:
        raise UnknownName("Unknown Lie algebra {name!r}, expected one of {names}".format(name=name, names=", ".join(BUILTIN_NAMES)), witness=name)
    family = match.group("family")
    size = int(match.group("size"))
    if not 1 <= size <= MAX_BUILTIN_SIZE:
        raise UnknownName("Size {size} outside 1..{bound}".format(size=size, bound=MAX_BUILTIN_SIZE), witness=name)
    if family == "gl":
        basis = gl_basis(size)
    elif family == "sl":
        if size != 2:
            raise UnknownName("Only sl(2) is built in", witness=name)
        basis = sl2_basis()
    else:
        basis = abelian_basis(size)
    logger.debug("Loading builtin Lie algebra {family}({size})".format(family=family, size=size))
    return matrix_lie_algebra(basis)
