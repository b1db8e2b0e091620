from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Optional, Tuple

import numpy as np

from diagram_operations.data_definitions import ChordDiagram, Tangle
from diagram_operations.quantum_tangle import QuantumTangle
from tensor_operations.data_definitions import SymTensor


@dataclass(frozen=True)
class WeightSystemOracle:
    """A diagram invariant f with its declared value on the vertexless loop.

    When f is a partition function the tensor rides along so the checks can take
    the contraction shortcut.
    """

    function: Callable[[ChordDiagram], Fraction]
    loop_value: Fraction
    name: str = "f"
    tensor: Optional[SymTensor] = field(default=None, compare=False)

    def __call__(self, diagram: ChordDiagram) -> Fraction:
        return Fraction(self.function(diagram))

    def evaluate(self, x: QuantumTangle) -> Fraction:
        """f extended linearly to a combination of diagrams"""
        return sum((c * self(d) for d, c in x.diagrams()), Fraction(0))


@dataclass(frozen=True, eq=False)
class ConnectionSubmatrix:
    k: int
    row_tangles: Tuple[Tangle, ...]
    col_tangles: Tuple[Tangle, ...]
    entries: np.ndarray

    @property
    def size(self) -> Tuple[int, int]:
        return (len(self.row_tangles), len(self.col_tangles))


@dataclass
class WeightSystemReport:
    ok: bool
    checked: int
    counterexample: Optional[Any] = None
    value: Optional[Fraction] = None
    reason: str = ""


@dataclass
class RankReport:
    k: int
    family: str
    size: Tuple[int, int]
    rank: int
    bound: int
    ok: bool


@dataclass
class DeltaReport:
    n: int
    theta: Fraction
    samples: int
    failures: int
    ok: bool
    counterexample: Optional[Tangle] = None
