import logging
from typing import Any, Dict, List, Optional

import numpy as np

from common.data_definitions import SYM_TENSOR_KIND
from common.errors import DocumentParseError, ShapeMismatch
from common.utils import format_rational, parse_rational
from diagram_operations.serializers import bind_document

from .data_definitions import SymTensor, SymTensorDocument
from .linear_algebra import fraction_array, zeros

logger = logging.getLogger("django")


def sym_tensor_to_document(r: SymTensor) -> Dict[str, Any]:
    """Sparse, 1-based, sorted by index"""
    entries = []
    for index in zip(*np.nonzero(r.entries != 0)):
        entries.append([int(i) + 1 for i in index] + [format_rational(r.entries[index])])
    return {"kind": SYM_TENSOR_KIND, "n": r.n, "entries": entries}


def parse_sym_tensor(document: Dict[str, Any]) -> SymTensor:
    bound: SymTensorDocument = bind_document(SymTensorDocument, document, SYM_TENSOR_KIND)
    n = bound.n
    if n < 1:
        raise DocumentParseError("A sym-tensor needs n >= 1")
    entries = zeros((n,) * 4)
    seen = set()
    for entry in bound.entries:
        if len(entry) != 5 or not all(isinstance(i, int) for i in entry[:4]):
            raise DocumentParseError("Expected [a, b, c, d, value], got {entry!r}".format(entry=entry))
        index = tuple(i - 1 for i in entry[:4])
        if not all(0 <= i < n for i in index):
            raise ShapeMismatch("Index {index} outside [{n}]".format(index=entry[:4], n=n), witness=tuple(entry[:4]))
        if index in seen:
            raise DocumentParseError("Entry {index} given twice".format(index=entry[:4]))
        seen.add(index)
        entries[index] = parse_rational(entry[4])
    return SymTensor(n=n, entries=entries)


def matrix_to_document(matrix: np.ndarray) -> Dict[str, Any]:
    return {"rows": [[format_rational(value) for value in row] for row in matrix]}


def parse_matrix_rows(rows: List[List[Any]], n: Optional[int] = None) -> np.ndarray:
    if n is None:
        n = len(rows)
    if len(rows) != n or any(len(row) != n for row in rows):
        raise ShapeMismatch("Expected a {n}x{n} matrix".format(n=n), witness=[len(row) for row in rows])
    return fraction_array([[parse_rational(value) for value in row] for row in rows], (n, n))
