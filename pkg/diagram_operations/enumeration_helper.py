import logging
import math
from typing import List, Optional, Tuple

from common.data_definitions import CANONICAL_MAX_CHORDS, ENUMERATION_BUDGET
from common.errors import SizeBound, UsageError

from .data_definitions import ChordDiagram, Tangle
from .permutation_helper import all_permutations, conjugate, hyperoctahedral_group

logger = logging.getLogger("django")


def check_enumeration_budget(k: int, m: int, budget: Optional[int] = None) -> None:
    budget = ENUMERATION_BUDGET if budget is None else budget
    if k < 0 or m < 0:
        raise UsageError("Label and chord counts must be non-negative, got k={k}, m={m}".format(k=k, m=m))
    if m > CANONICAL_MAX_CHORDS:
        logger.error("Refusing canonical forms over {m} chords".format(m=m))
        raise SizeBound("Canonical forms of tangles with {m} chords".format(m=m), requested=m, bound=CANONICAL_MAX_CHORDS)
    requested = math.factorial(2 * m + k)
    if requested > budget:
        logger.error("Refusing to enumerate {requested} wirings for k={k}, m={m}".format(requested=requested, k=k, m=m))
        raise SizeBound("Enumeration of {k}-tangles with {m} chords".format(k=k, m=m), requested=requested, bound=budget)


def _orbit_representatives(k: int, m: int) -> List[Tuple[int, ...]]:
    group = hyperoctahedral_group(m)
    seen = set()
    representatives = []
    for wiring in all_permutations(2 * m + k):
        if wiring in seen:
            continue
        orbit = {conjugate(wiring, h) for h in group}
        seen.update(orbit)
        representatives.append(min(orbit))
    return sorted(representatives)


def enumerate_tangles(k: int, m: int, budget: Optional[int] = None) -> List[Tangle]:
    """One canonical loopless k-tangle with m chords per isomorphism class, sorted by wiring"""
    check_enumeration_budget(k, m, budget)
    tangles = [Tangle(k=k, m=m, wiring=wiring) for wiring in _orbit_representatives(k, m)]
    logger.info("Enumerated {count} classes of {k}-tangles with {m} chords".format(count=len(tangles), k=k, m=m))
    return tangles


def enumerate_diagrams(m: int, budget: Optional[int] = None) -> List[ChordDiagram]:
    return [t.as_diagram() for t in enumerate_tangles(0, m, budget)]


def enumerate_tangles_up_to(k: int, max_chords: int, budget: Optional[int] = None) -> List[Tangle]:
    if max_chords < 0:
        raise UsageError("Chord bound must be non-negative, got {max_chords}".format(max_chords=max_chords))
    tangles = []
    for m in range(max_chords + 1):
        tangles.extend(enumerate_tangles(k, m, budget))
    return tangles


def enumerate_diagrams_up_to(max_chords: int, budget: Optional[int] = None) -> List[ChordDiagram]:
    diagrams = []
    for m in range(max_chords + 1):
        diagrams.extend(enumerate_diagrams(m, budget))
    return diagrams
