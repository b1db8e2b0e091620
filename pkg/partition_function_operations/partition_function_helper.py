import itertools
import logging
from fractions import Fraction
from functools import partial
from typing import List, Optional

import numpy as np

from algebra_check_operations.data_definitions import WeightSystemOracle
from common.errors import LabelMismatch
from diagram_operations.data_definitions import ChordDiagram, Tangle
from diagram_operations.permutation_helper import inverse
from diagram_operations.quantum_tangle import QuantumTangle
from tensor_operations.data_definitions import GlTensor, SymTensor
from tensor_operations.linear_algebra import identity_matrix, ordered_product, zeros
from tensor_operations.tensor_helper import rank_factorize

from .network_helper import TensorNetwork

logger = logging.getLogger("django")


def _strand_order(tangle: Tangle) -> List[List[int]]:
    """Tails grouped by strand: open strands from their roots first, then the closed cycles"""
    visited = [False] * tangle.size
    strands = []
    starts = [tangle.label_point(i) for i in range(tangle.k)] + list(range(2 * tangle.m))
    for start in starts:
        if visited[start]:
            continue
        strand = []
        tail = start
        while not visited[tail]:
            visited[tail] = True
            strand.append(tail)
            head = tangle.wiring[tail]
            if not tangle.is_internal(head):
                break
            tail = head
        strands.append(strand)
    return strands


def eval_tangle(r: SymTensor, tangle: Tangle) -> GlTensor:
    """p̂_R(T) contracted strand by strand.

    The edge leaving tail t is the leg ("e", t). A chord tensor takes the legs
    (in_u, in_v, out_u, out_v), the root and sink deltas tie the open legs
    ("in", i) and ("out", j) to the edges at the labels.
    """
    n = r.n
    m = tangle.m
    pred = inverse(tangle.wiring)
    delta = identity_matrix(n)
    network = TensorNetwork()
    added = [False] * m
    for strand in _strand_order(tangle):
        for tail in strand:
            if not tangle.is_internal(tail):
                label = tail - 2 * m
                network.add(delta, [("in", label), ("e", tail)])
                continue
            chord = tail // 2
            if not added[chord]:
                added[chord] = True
                u, v = 2 * chord, 2 * chord + 1
                network.add(r.entries, [("e", pred[u]), ("e", pred[v]), ("e", u), ("e", v)])
        last_head = tangle.wiring[strand[-1]]
        if not tangle.is_internal(last_head):
            network.add(delta, [("e", strand[-1]), ("out", last_head - 2 * m)])
    open_legs = [leg for j in range(tangle.k) for leg in (("in", j), ("out", j))]
    entries = network.result(open_legs) * Fraction(n) ** tangle.loops
    return GlTensor(n=n, k=tangle.k, entries=np.asarray(entries, dtype=object))


def eval_diagram(r: SymTensor, diagram: ChordDiagram) -> Fraction:
    """p_R(C)"""
    return Fraction(eval_tangle(r, diagram.as_tangle()).scalar())


def eval_diagram_bruteforce(r: SymTensor, diagram: ChordDiagram) -> Fraction:
    """The plain sum over all colorings of the directed edges"""
    n = r.n
    pred = inverse(diagram.succ)
    total = Fraction(0)
    for coloring in itertools.product(range(n), repeat=2 * diagram.m):
        term = Fraction(1)
        for chord in range(diagram.m):
            u, v = 2 * chord, 2 * chord + 1
            term *= r.entries[coloring[pred[u]], coloring[pred[v]], coloring[u], coloring[v]]
            if term == 0:
                break
        total += term
    return total * Fraction(n) ** diagram.loops


def eval_edge_coloring(r: SymTensor, diagram: ChordDiagram, pairs: Optional[list] = None) -> Fraction:
    """p_R(C) by coloring the chords with the terms of a factorization R = Σ X_α⊗Y_α.

    Vertex 2c carries X and vertex 2c+1 carries Y; every Wilson loop contributes the
    trace of its matrices multiplied in traversal order.
    """
    n = r.n
    if pairs is None:
        pairs = rank_factorize(r)
    loops = diagram.wilson_loops()
    total = Fraction(0)
    for coloring in itertools.product(range(len(pairs)), repeat=diagram.m):
        term = Fraction(1)
        for loop in loops:
            matrices = [pairs[coloring[v // 2]][v % 2] for v in loop]
            term *= Fraction(np.trace(ordered_product(matrices, n)))
            if term == 0:
                break
        total += term
    return total * Fraction(n) ** diagram.loops


def eval_quantum(r: SymTensor, x: QuantumTangle) -> GlTensor:
    entries = zeros((r.n,) * (2 * x.k))
    for tangle, coefficient in x.terms:
        if tangle.k != x.k:
            raise LabelMismatch("Term with a different label count", witness=tangle)
        entries = entries + coefficient * eval_tangle(r, tangle).entries
    return GlTensor(n=r.n, k=x.k, entries=np.asarray(entries, dtype=object))


def f_of(r: SymTensor, name: str = "p_R") -> WeightSystemOracle:
    return WeightSystemOracle(function=partial(eval_diagram, r), loop_value=Fraction(r.n), name=name, tensor=r)
