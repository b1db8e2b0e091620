import logging
from typing import Any, Dict, Tuple

import numpy as np

from common.data_definitions import LIE_KIND
from common.errors import DocumentParseError, ShapeMismatch
from common.utils import format_rational, parse_rational
from diagram_operations.serializers import bind_document
from tensor_operations.linear_algebra import zeros
from tensor_operations.serializers import matrix_to_document, parse_matrix_rows

from .data_definitions import LieDocument, MetrizedLieAlgebra, Representation
from .lie_helper import check_metrized, check_representation

logger = logging.getLogger("django")


def lie_to_document(g: MetrizedLieAlgebra, rho: Representation) -> Dict[str, Any]:
    structure = []
    for index in zip(*np.nonzero(g.structure != 0)):
        structure.append([int(i) + 1 for i in index] + [format_rational(g.structure[index])])
    return {
        "kind": LIE_KIND,
        "dim": g.dim,
        "structure": structure,
        "gram": matrix_to_document(g.gram)["rows"],
        "rep": {"n": rho.n, "images": [matrix_to_document(image) for image in rho.images]},
    }


def parse_lie(document: Dict[str, Any]) -> Tuple[MetrizedLieAlgebra, Representation]:
    """Bind a lie document and check the algebra and its representation"""
    bound: LieDocument = bind_document(LieDocument, document, LIE_KIND)
    dim = bound.dim
    structure = zeros((dim, dim, dim))
    seen = set()
    for entry in bound.structure:
        if len(entry) != 4 or not all(isinstance(i, int) for i in entry[:3]):
            raise DocumentParseError("Expected [i, j, l, value], got {entry!r}".format(entry=entry))
        index = tuple(i - 1 for i in entry[:3])
        if not all(0 <= i < dim for i in index):
            raise ShapeMismatch("Index {index} outside [{dim}]".format(index=entry[:3], dim=dim), witness=tuple(entry[:3]))
        if index in seen:
            raise DocumentParseError("Structure constant {index} given twice".format(index=entry[:3]))
        seen.add(index)
        structure[index] = parse_rational(entry[3])
    gram = parse_matrix_rows(bound.gram, dim)
    images = tuple(parse_matrix_rows(image.rows, bound.rep.n) for image in bound.rep.images)
    g = MetrizedLieAlgebra(dim=dim, structure=structure, gram=gram)
    rho = Representation(n=bound.rep.n, images=images)
    check_metrized(g)
    check_representation(g, rho)
    return g, rho
