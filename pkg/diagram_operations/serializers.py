import logging
from typing import Any, Dict, Union

from dacite import Config, DaciteError, DaciteFieldError, from_dict

from common.data_definitions import DIAGRAM_KIND, QUANTUM_TANGLE_KIND, TANGLE_KIND
from common.errors import DanglingLabel, DocumentParseError, NotABijection
from common.utils import format_rational, parse_rational

from .data_definitions import (
    ChordDiagram,
    DiagramDocument,
    QuantumTangleDocument,
    Tangle,
    TangleDocument,
)
from .quantum_tangle import QuantumTangle

logger = logging.getLogger("django")

SINK_PREFIX = "sink:"
ROOT_PREFIX = "root:"


def _reject_booleans(value: Any, path: str) -> None:
    """Booleans are not numbers in any document"""
    if isinstance(value, bool):
        raise DocumentParseError("Unexpected boolean {value}".format(value=str(value).lower()), field=path)
    if isinstance(value, dict):
        for key, item in value.items():
            _reject_booleans(item, "{path}.{key}".format(path=path, key=key) if path else key)
    elif isinstance(value, list):
        for index, item in enumerate(value):
            _reject_booleans(item, "{path}[{index}]".format(path=path, index=index))


def bind_document(data_class, document: Dict[str, Any], kind: str):
    _reject_booleans(document, "")
    try:
        bound = from_dict(data_class=data_class, data=document, config=Config(strict=True))
    except DaciteFieldError as e:
        raise DocumentParseError("Malformed {kind} document: {error}".format(kind=kind, error=e), field=e.field_path)
    except DaciteError as e:
        raise DocumentParseError("Malformed {kind} document: {error}".format(kind=kind, error=e))
    if bound.kind != kind:
        raise DocumentParseError("Expected a {kind} document, got kind {found!r}".format(kind=kind, found=bound.kind))
    return bound


def _parse_label_reference(value: Union[int, str], prefix: str, k: int) -> int:
    """A label reference "prefix:i" (1-based) as a 0-based label index"""
    if not value.startswith(prefix):
        raise DocumentParseError("Expected {prefix}i, got {value!r}".format(prefix=prefix, value=value))
    try:
        label = int(value[len(prefix) :])
    except ValueError:
        raise DocumentParseError("Malformed label reference {value!r}".format(value=value))
    if not 1 <= label <= k:
        raise DanglingLabel("Label reference {value!r} outside [{k}]".format(value=value, k=k), witness=value)
    return label - 1


def _parse_point(value: Union[int, str], prefix: str, m: int, k: int) -> int:
    """A 1-based vertex number or a label reference, as a 0-based wiring point"""
    if isinstance(value, str):
        return 2 * m + _parse_label_reference(value, prefix, k)
    if not 1 <= value <= 2 * m:
        raise NotABijection("Vertex {value} outside [{size}]".format(value=value, size=2 * m), witness=value)
    return value - 1


def _format_point(point: int, prefix: str, m: int) -> Union[int, str]:
    if point < 2 * m:
        return point + 1
    return "{prefix}{label}".format(prefix=prefix, label=point - 2 * m + 1)


def diagram_to_document(diagram: ChordDiagram) -> Dict[str, Any]:
    return {"kind": DIAGRAM_KIND, "m": diagram.m, "succ": [head + 1 for head in diagram.succ], "loops": diagram.loops}


def parse_diagram(document: Dict[str, Any]) -> ChordDiagram:
    bound: DiagramDocument = bind_document(DiagramDocument, document, DIAGRAM_KIND)
    succ = []
    for head in bound.succ:
        if not 1 <= head <= 2 * bound.m:
            raise NotABijection("Vertex {head} outside [{size}]".format(head=head, size=2 * bound.m), witness=head)
        succ.append(head - 1)
    return ChordDiagram(m=bound.m, succ=succ, loops=bound.loops)


def tangle_to_document(tangle: Tangle) -> Dict[str, Any]:
    m = tangle.m
    entering = [0] * tangle.size
    for tail, head in enumerate(tangle.wiring):
        entering[head] = tail
    return {
        "kind": TANGLE_KIND,
        "k": tangle.k,
        "m": m,
        "wiring": {
            "internal": [_format_point(tangle.wiring[tail], SINK_PREFIX, m) for tail in range(2 * m)],
            "roots": [_format_point(tangle.wiring[tangle.label_point(i)], SINK_PREFIX, m) for i in range(tangle.k)],
            "sinks_from": [_format_point(entering[tangle.label_point(j)], ROOT_PREFIX, m) for j in range(tangle.k)],
        },
        "loops": tangle.loops,
    }


def _tangle_from_bound(bound: TangleDocument) -> Tangle:
    k, m = bound.k, bound.m
    wiring = bound.wiring
    if len(wiring.internal) != 2 * m or len(wiring.roots) != k or len(wiring.sinks_from) != k:
        raise NotABijection(
            "Wiring lists must have lengths {internal}, {k}, {k}".format(internal=2 * m, k=k),
            witness=(len(wiring.internal), len(wiring.roots), len(wiring.sinks_from)),
        )
    heads = [_parse_point(value, SINK_PREFIX, m, k) for value in list(wiring.internal) + list(wiring.roots)]
    tangle = Tangle(k=k, m=m, wiring=heads, loops=bound.loops)
    for j, value in enumerate(wiring.sinks_from):
        tail = _parse_point(value, ROOT_PREFIX, m, k)
        if tangle.wiring[tail] != tangle.label_point(j):
            raise NotABijection("sinks_from disagrees with the wiring at sink {j}".format(j=j + 1), witness=(j + 1, value))
    return tangle


def parse_tangle(document: Dict[str, Any]) -> Tangle:
    return _tangle_from_bound(bind_document(TangleDocument, document, TANGLE_KIND))


def parse_closed_diagram(document: Dict[str, Any]) -> ChordDiagram:
    """A diagram document, or a tangle document with k = 0"""
    if document.get("kind") == TANGLE_KIND:
        return parse_tangle(document).as_diagram()
    return parse_diagram(document)


def quantum_tangle_to_document(x: QuantumTangle) -> Dict[str, Any]:
    return {
        "kind": QUANTUM_TANGLE_KIND,
        "k": x.k,
        "terms": [{"coefficient": format_rational(c), "tangle": tangle_to_document(t)} for t, c in x.terms],
    }


def parse_quantum_tangle(document: Dict[str, Any]) -> QuantumTangle:
    bound: QuantumTangleDocument = bind_document(QuantumTangleDocument, document, QUANTUM_TANGLE_KIND)
    terms = []
    for term in bound.terms:
        if term.tangle.kind != TANGLE_KIND:
            raise DocumentParseError("Quantum tangle terms must be tangle documents")
        terms.append((_tangle_from_bound(term.tangle), parse_rational(term.coefficient)))
    return QuantumTangle.from_terms(bound.k, terms)
