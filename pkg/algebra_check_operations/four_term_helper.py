import logging
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from diagram_operations.data_definitions import Tangle
from diagram_operations.enumeration_helper import enumerate_diagrams_up_to, enumerate_tangles_up_to
from diagram_operations.quantum_tangle import QuantumTangle
from diagram_operations.tangle_helper import chord_tangle, disjoint_union, empty_diagram, vertexless_loop
from partition_function_operations.partition_function_helper import eval_quantum, eval_tangle
from tensor_operations.tensor_helper import trace_pair

from .data_definitions import WeightSystemOracle, WeightSystemReport

logger = logging.getLogger("django")


@lru_cache(maxsize=1)
def tau4() -> QuantumTangle:
    """t¹²t¹³ − t¹³t¹² + t¹²t²³ − t²³t¹², products taken with compose"""
    t12, t13, t23 = (QuantumTangle.from_tangle(chord_tangle(3, i, j)) for i, j in ((0, 1), (0, 2), (1, 2)))
    return t12.compose(t13) - t13.compose(t12) + t12.compose(t23) - t23.compose(t12)


def join_value(f: WeightSystemOracle, x: QuantumTangle, tangle: Tangle) -> Fraction:
    """f(x·T); partition functions go through tr(p̂(x)p̂(T))"""
    if f.tensor is not None:
        return trace_pair(eval_quantum(f.tensor, x), eval_tangle(f.tensor, tangle))
    return f.evaluate(x.join(QuantumTangle.from_tangle(tangle)))


def is_multiplicative(f: WeightSystemOracle, max_chords: int, budget: Optional[int] = None) -> WeightSystemReport:
    """f(C ⊔ D) = f(C) f(D) over pairs of enumerated diagrams and the vertexless loop"""
    diagrams = enumerate_diagrams_up_to(max_chords, budget) + [vertexless_loop()]
    values = [f(d) for d in diagrams]
    checked = 0
    for i, c in enumerate(diagrams):
        for j in range(i, len(diagrams)):
            d = diagrams[j]
            checked += 1
            value = f(disjoint_union(c, d))
            if value != values[i] * values[j]:
                logger.info("{name} is not multiplicative on a pair of diagrams".format(name=f.name))
                return WeightSystemReport(ok=False, checked=checked, counterexample=(c, d), value=value, reason="multiplicativity")
    return WeightSystemReport(ok=True, checked=checked)


def is_weight_system(f: WeightSystemOracle, max_chords: int, budget: Optional[int] = None) -> WeightSystemReport:
    """Check f(∅) = 1, f(○), the 4T relation on every 3-tangle with at most `max_chords` chords, then multiplicativity"""
    empty_value = f(empty_diagram())
    if empty_value != 1:
        return WeightSystemReport(ok=False, checked=1, counterexample=empty_diagram(), value=empty_value, reason="empty diagram")
    loop_value = f(vertexless_loop())
    if loop_value != f.loop_value:
        return WeightSystemReport(ok=False, checked=2, counterexample=vertexless_loop(), value=loop_value, reason="loop value")

    relation = tau4()
    if f.tensor is not None:
        tau4_operator = eval_quantum(f.tensor, relation)
    checked = 2
    for tangle in enumerate_tangles_up_to(3, max_chords, budget):
        checked += 1
        if f.tensor is not None:
            value = trace_pair(tau4_operator, eval_tangle(f.tensor, tangle))
        else:
            value = join_value(f, relation, tangle)
        if value != 0:
            logger.info("{name} violates the four-term relation".format(name=f.name))
            return WeightSystemReport(ok=False, checked=checked, counterexample=tangle, value=value, reason="four-term relation")

    multiplicative = is_multiplicative(f, max_chords, budget)
    multiplicative.checked += checked
    if multiplicative.ok:
        logger.info("{name} passed {checked} weight system checks".format(name=f.name, checked=multiplicative.checked))
    return multiplicative
