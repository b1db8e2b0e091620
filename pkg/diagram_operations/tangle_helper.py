import logging
import random
from typing import Dict, List, Sequence, Tuple, Union

from common.data_definitions import CANONICAL_MAX_CHORDS
from common.errors import LabelMismatch, NotABijection, SizeBound

from .data_definitions import ChordDiagram, Tangle
from .permutation_helper import conjugate, hyperoctahedral_group, identity_permutation, is_permutation

logger = logging.getLogger("django")


class UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}
        self.rank = {x: 0 for x in items}

    def find(self, x):
        y = self.parent[x]
        if self.parent[y] != y:
            y = self.parent[x] = self.find(y)
        return y

    def union(self, x, y):
        x, y = self.find(x), self.find(y)
        if x == y:
            return
        if self.rank[x] < self.rank[y]:
            x, y = y, x
        elif self.rank[x] == self.rank[y]:
            self.rank[x] += 1
        self.parent[y] = x


def _smooth(successor: Sequence[int], internal: int, labels: int) -> Tuple[Tuple[int, ...], int]:
    """Smooth every junction node of a glued wiring.

    Nodes below `internal` are vertices, the next `labels` nodes are label points
    and every node above is a junction that is passed through. Returns the wiring on
    vertices and label points, plus the number of cycles made only of junctions.
    """
    kept = internal + labels
    visited = [False] * len(successor)
    wiring = []
    for tail in range(kept):
        head = successor[tail]
        while head >= kept:
            visited[head] = True
            head = successor[head]
        wiring.append(head)
    extra_loops = 0
    for junction in range(kept, len(successor)):
        if visited[junction]:
            continue
        extra_loops += 1
        current = junction
        while not visited[current]:
            visited[current] = True
            current = successor[current]
    return tuple(wiring), extra_loops


def _check_labels(s: Tangle, t: Tangle) -> None:
    if s.k != t.k:
        logger.error("Cannot glue a {s_k}-tangle to a {t_k}-tangle".format(s_k=s.k, t_k=t.k))
        raise LabelMismatch("Tangles carry different label counts", witness=(s.k, t.k))


def join(s: Tangle, t: Tangle) -> ChordDiagram:
    """S·T: sink i of S goes to root i of T and sink i of T to root i of S"""
    _check_labels(s, t)
    k = s.k
    s_internal, t_internal = 2 * s.m, 2 * t.m
    internal = s_internal + t_internal
    # junction internal+j is sink j of S, junction internal+k+j is sink j of T
    successor = [0] * (internal + 2 * k)

    def from_s(head: int) -> int:
        return head if head < s_internal else internal + head - s_internal

    def from_t(head: int) -> int:
        return s_internal + head if head < t_internal else internal + k + head - t_internal

    for x in range(s_internal):
        successor[x] = from_s(s.wiring[x])
    for y in range(t_internal):
        successor[s_internal + y] = from_t(t.wiring[y])
    for j in range(k):
        successor[internal + j] = from_t(t.wiring[t_internal + j])
        successor[internal + k + j] = from_s(s.wiring[s_internal + j])

    wiring, extra_loops = _smooth(successor, internal, 0)
    return ChordDiagram(m=s.m + t.m, succ=wiring, loops=s.loops + t.loops + extra_loops)


def compose(s: Tangle, t: Tangle) -> Tangle:
    """ST: sink i of S goes to root i of T; roots come from S and sinks from T"""
    _check_labels(s, t)
    k = s.k
    s_internal, t_internal = 2 * s.m, 2 * t.m
    internal = s_internal + t_internal
    # node internal+i is the new root (tail) or sink (head) i, internal+k+j the junction
    successor = [0] * (internal + 2 * k)

    def from_s(head: int) -> int:
        return head if head < s_internal else internal + k + head - s_internal

    def from_t(head: int) -> int:
        return s_internal + head if head < t_internal else internal + head - t_internal

    for x in range(s_internal):
        successor[x] = from_s(s.wiring[x])
    for y in range(t_internal):
        successor[s_internal + y] = from_t(t.wiring[y])
    for i in range(k):
        successor[internal + i] = from_s(s.wiring[s_internal + i])
        successor[internal + k + i] = from_t(t.wiring[t_internal + i])

    wiring, extra_loops = _smooth(successor, internal, k)
    return Tangle(k=k, m=s.m + t.m, wiring=wiring, loops=s.loops + t.loops + extra_loops)


def shift_union(s: Tangle, t: Tangle) -> Tangle:
    """S ⊔ T with the labels of T shifted by s.k"""
    m = s.m + t.m
    k = s.k + t.k
    s_internal, t_internal = 2 * s.m, 2 * t.m

    def from_s(point: int) -> int:
        return point if point < s_internal else 2 * m + point - s_internal

    def from_t(point: int) -> int:
        return s_internal + point if point < t_internal else 2 * m + s.k + point - t_internal

    wiring = [0] * (2 * m + k)
    for tail, head in enumerate(s.wiring):
        wiring[from_s(tail)] = from_s(head)
    for tail, head in enumerate(t.wiring):
        wiring[from_t(tail)] = from_t(head)
    return Tangle(k=k, m=m, wiring=wiring, loops=s.loops + t.loops)


def disjoint_union(c: ChordDiagram, d: ChordDiagram) -> ChordDiagram:
    return shift_union(c.as_tangle(), d.as_tangle()).as_diagram()


def unit(k: int) -> Tangle:
    return Tangle(k=k, m=0, wiring=identity_permutation(k))


def empty_diagram() -> ChordDiagram:
    return ChordDiagram(m=0, succ=())


def vertexless_loop() -> ChordDiagram:
    return ChordDiagram(m=0, succ=(), loops=1)


def permutation_tangle(k: int, m: int, permutation: Sequence[int]) -> Tangle:
    """The chordless km-tangle whose edge e_(i,j) runs from root π(i)+jm to sink i+jm (0-based)"""
    if len(permutation) != m or not is_permutation(permutation):
        raise NotABijection("Not a permutation of [{m}]".format(m=m), witness=tuple(permutation))
    wiring = [0] * (k * m)
    for j in range(k):
        for i in range(m):
            wiring[permutation[i] + j * m] = i + j * m
    return Tangle(k=k * m, m=0, wiring=wiring)


def copy_permutation_tangle(k: int, m: int, permutation: Sequence[int]) -> Tangle:
    """The chordless km-tangle moving whole blocks of k labels: label ck+j runs from block π(c) to block c"""
    if len(permutation) != m or not is_permutation(permutation):
        raise NotABijection("Not a permutation of [{m}]".format(m=m), witness=tuple(permutation))
    wiring = [0] * (k * m)
    for c in range(m):
        for j in range(k):
            wiring[permutation[c] * k + j] = c * k + j
    return Tangle(k=k * m, m=0, wiring=wiring)


def chord_tangle(k: int, i: int, j: int) -> Tangle:
    """The k-tangle with one chord from strand i to strand j (0-based), every other strand plain"""
    if not (0 <= i < k and 0 <= j < k) or i == j:
        raise LabelMismatch("A chord needs two distinct strands among {k}".format(k=k), witness=(i, j))
    wiring = [0, 0] + [2 + label for label in range(k)]
    wiring[0] = 2 + i
    wiring[1] = 2 + j
    wiring[2 + i] = 0
    wiring[2 + j] = 1
    return Tangle(k=k, m=1, wiring=wiring)


def theta_tangle() -> Tangle:
    """root -> 0 -> 1 -> sink, closing up to the theta diagram"""
    return Tangle(k=1, m=1, wiring=(1, 2, 0))


def theta_diagram() -> ChordDiagram:
    return ChordDiagram(m=1, succ=(1, 0))


def dumbbell_diagram() -> ChordDiagram:
    return ChordDiagram(m=1, succ=(0, 1))


def relabel(t: Union[Tangle, ChordDiagram], relabeling: Sequence[int]):
    """Apply a chord preserving permutation of the internal vertices"""
    if isinstance(t, ChordDiagram):
        return relabel(t.as_tangle(), relabeling).as_diagram()
    if len(relabeling) != 2 * t.m or not is_permutation(relabeling):
        raise NotABijection("Not a permutation of the internal vertices", witness=tuple(relabeling))
    for chord in range(t.m):
        if relabeling[2 * chord] // 2 != relabeling[2 * chord + 1] // 2:
            raise NotABijection("Relabeling splits chord {chord}".format(chord=chord), witness=chord)
    return Tangle(k=t.k, m=t.m, wiring=conjugate(t.wiring, relabeling), loops=t.loops)


def random_relabeling(m: int, rng: random.Random) -> Tuple[int, ...]:
    chord_order = list(range(m))
    rng.shuffle(chord_order)
    relabeling = [0] * (2 * m)
    for chord, target in enumerate(chord_order):
        flip = rng.randrange(2)
        relabeling[2 * chord] = 2 * target + flip
        relabeling[2 * chord + 1] = 2 * target + 1 - flip
    return tuple(relabeling)


def random_tangle(k: int, m: int, rng: random.Random) -> Tangle:
    wiring = list(range(2 * m + k))
    rng.shuffle(wiring)
    return Tangle(k=k, m=m, wiring=wiring)


def random_diagram(m: int, rng: random.Random) -> ChordDiagram:
    return random_tangle(0, m, rng).as_diagram()


def canonical_wiring(k: int, m: int, wiring: Sequence[int]) -> Tuple[int, ...]:
    if m > CANONICAL_MAX_CHORDS:
        logger.error("Refusing a canonical form over {m} chords".format(m=m))
        raise SizeBound("Canonical form over too many chords", requested=m, bound=CANONICAL_MAX_CHORDS)
    return min(conjugate(wiring, h) for h in hyperoctahedral_group(m))


def canonical_form(t: Union[Tangle, ChordDiagram]):
    """Lexicographically least encoding over the chord preserving relabelings, labels fixed"""
    if isinstance(t, ChordDiagram):
        return canonical_form(t.as_tangle()).as_diagram()
    return Tangle(k=t.k, m=t.m, wiring=canonical_wiring(t.k, t.m, t.wiring), loops=t.loops)


def is_isomorphic(a: Union[Tangle, ChordDiagram], b: Union[Tangle, ChordDiagram]) -> bool:
    """Tangles with different label counts are never isomorphic"""
    if isinstance(a, ChordDiagram):
        a = a.as_tangle()
    if isinstance(b, ChordDiagram):
        b = b.as_tangle()
    if (a.k, a.m, a.loops) != (b.k, b.m, b.loops):
        return False
    return canonical_wiring(a.k, a.m, a.wiring) == canonical_wiring(b.k, b.m, b.wiring)


def components(c: ChordDiagram) -> List[Tuple[int, ...]]:
    """Vertex sets of the connected components joined by directed edges and chords.

    Each vertexless loop is a component of its own and shows up as an empty tuple.
    """
    vertices = range(2 * c.m)
    uf = UnionFind(vertices)
    for v in vertices:
        uf.union(v, c.succ[v])
    for chord in range(c.m):
        uf.union(2 * chord, 2 * chord + 1)
    grouped: Dict[int, List[int]] = {}
    for v in vertices:
        grouped.setdefault(uf.find(v), []).append(v)
    found = sorted(tuple(group) for group in grouped.values())
    return found + [()] * c.loops


def is_connected(c: ChordDiagram) -> bool:
    return len(components(c)) == 1
