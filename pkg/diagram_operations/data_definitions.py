import logging
from dataclasses import dataclass
from typing import List, Tuple, Union

from common.errors import ChordValidationError, DanglingLabel, LabelMismatch, NotABijection

from .permutation_helper import cycles

logger = logging.getLogger("django")


@dataclass(frozen=True)
class ChordDiagram:
    """A multiloop chord diagram on the vertex set [2m].

    Chord c joins the vertices 2c and 2c+1 (0-based), succ[v] is the head of the
    directed edge leaving v and `loops` counts the vertexless directed loops.
    """

    m: int
    succ: Tuple[int, ...]
    loops: int = 0

    def __post_init__(self):
        object.__setattr__(self, "succ", tuple(self.succ))
        validate_diagram(self)

    def wilson_loops(self) -> List[Tuple[int, ...]]:
        return cycles(self.succ)

    def as_tangle(self) -> "Tangle":
        return Tangle(k=0, m=self.m, wiring=self.succ, loops=self.loops)

    @property
    def sort_key(self):
        return (self.m, self.loops, self.succ)


@dataclass(frozen=True)
class Tangle:
    """A k-labeled multiloop chord tangle.

    Internal vertices are 0..2m-1 with chord c joining 2c and 2c+1. Root i and
    sink i share the label point 2m+i: as a tail it is the root, as a head it is the
    sink. wiring[t] is the head of the directed edge leaving tail t, so the wiring is
    a permutation of [2m+k]. A 0-tangle is exactly a chord diagram.
    """

    k: int
    m: int
    wiring: Tuple[int, ...]
    loops: int = 0

    def __post_init__(self):
        object.__setattr__(self, "wiring", tuple(self.wiring))
        validate_tangle(self)

    @property
    def size(self) -> int:
        return 2 * self.m + self.k

    def label_point(self, label: int) -> int:
        return 2 * self.m + label

    def is_internal(self, point: int) -> bool:
        return point < 2 * self.m

    def as_diagram(self) -> ChordDiagram:
        if self.k != 0:
            raise LabelMismatch("Only a 0-tangle is a chord diagram", witness=self.k)
        return ChordDiagram(m=self.m, succ=self.wiring, loops=self.loops)

    @property
    def sort_key(self):
        return (self.k, self.m, self.loops, self.wiring)


def _check_wiring(images: Tuple[int, ...], internal: int, labels: int) -> None:
    size = internal + labels
    if len(images) != size:
        raise NotABijection(
            "Expected {size} directed edges, got {count}".format(size=size, count=len(images)),
            witness=len(images),
        )
    entered = [None] * size
    for tail, head in enumerate(images):
        if not isinstance(head, int) or head < 0:
            raise NotABijection("Directed edge from {tail} has no valid head".format(tail=tail), witness=(tail, head))
        if head >= size:
            if labels:
                raise DanglingLabel(
                    "Directed edge from {tail} enters sink {label} outside [{k}]".format(tail=tail, label=head - internal, k=labels),
                    witness=(tail, head),
                )
            raise NotABijection("Directed edge from {tail} enters unknown vertex {head}".format(tail=tail, head=head), witness=(tail, head))
        if entered[head] is not None:
            raise NotABijection(
                "Vertex {head} is entered by two directed edges".format(head=head),
                witness=(entered[head], tail, head),
            )
        entered[head] = tail


def validate_diagram(diagram: ChordDiagram) -> None:
    if diagram.m < 0 or diagram.loops < 0:
        raise ChordValidationError("Chord and loop counts must be nonnegative", witness=(diagram.m, diagram.loops))
    _check_wiring(diagram.succ, 2 * diagram.m, 0)


def validate_tangle(tangle: Tangle) -> None:
    if tangle.k < 0 or tangle.m < 0 or tangle.loops < 0:
        raise ChordValidationError("Label, chord and loop counts must be nonnegative", witness=(tangle.k, tangle.m, tangle.loops))
    _check_wiring(tangle.wiring, 2 * tangle.m, tangle.k)


def validate(item: Union[ChordDiagram, Tangle]) -> None:
    """Raise if `item` violates the degree conditions, return None otherwise"""
    if isinstance(item, ChordDiagram):
        validate_diagram(item)
    elif isinstance(item, Tangle):
        validate_tangle(item)
    else:
        raise TypeError("Cannot validate {item!r}".format(item=item))


@dataclass
class DiagramDocument:
    kind: str
    m: int
    succ: List[int]
    loops: int = 0


@dataclass
class TangleWiringDocument:
    internal: List[Union[int, str]]
    roots: List[Union[int, str]]
    sinks_from: List[Union[int, str]]


@dataclass
class TangleDocument:
    kind: str
    k: int
    m: int
    wiring: TangleWiringDocument
    loops: int = 0


@dataclass
class QuantumTermDocument:
    coefficient: Union[str, int]
    tangle: TangleDocument


@dataclass
class QuantumTangleDocument:
    kind: str
    k: int
    terms: List[QuantumTermDocument]
