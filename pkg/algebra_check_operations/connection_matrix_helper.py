import logging
import random
from fractions import Fraction
from typing import List, Optional, Sequence, Union

import numpy as np

from common.data_definitions import CONNECTION_MAX_SIZE
from common.errors import LabelMismatch, SizeBound
from diagram_operations.data_definitions import Tangle
from diagram_operations.enumeration_helper import enumerate_tangles_up_to
from diagram_operations.tangle_helper import join
from partition_function_operations.partition_function_helper import eval_tangle
from tensor_operations.linear_algebra import bareiss_rank, frozen
from tensor_operations.tensor_helper import trace_pair

from .data_definitions import ConnectionSubmatrix, RankReport, WeightSystemOracle

logger = logging.getLogger("django")

FAMILY_ALL = "all"
FAMILY_SAMPLED = "sampled"


def connection_submatrix(
    f: WeightSystemOracle, k: int, row_tangles: Sequence[Tangle], col_tangles: Sequence[Tangle], max_size: Optional[int] = None
) -> ConnectionSubmatrix:
    """Entries f(S·T) for S among the rows and T among the columns"""
    max_size = CONNECTION_MAX_SIZE if max_size is None else max_size
    largest = max(len(row_tangles), len(col_tangles))
    if largest > max_size:
        logger.error("Refusing a connection submatrix with {largest} rows or columns".format(largest=largest))
        raise SizeBound("Connection submatrix side", requested=largest, bound=max_size)
    for tangle in list(row_tangles) + list(col_tangles):
        if tangle.k != k:
            raise LabelMismatch("Tangle with {t_k} labels in a {k}-connection matrix".format(t_k=tangle.k, k=k), witness=tangle)

    if f.tensor is not None:
        row_operators = [eval_tangle(f.tensor, s) for s in row_tangles]
        col_operators = [eval_tangle(f.tensor, t) for t in col_tangles]
        entries = [[trace_pair(x, y) for y in col_operators] for x in row_operators]
    else:
        entries = [[f(join(s, t)) for t in col_tangles] for s in row_tangles]
    matrix = np.array(entries, dtype=object).reshape(len(row_tangles), len(col_tangles))
    return ConnectionSubmatrix(k=k, row_tangles=tuple(row_tangles), col_tangles=tuple(col_tangles), entries=frozen(matrix))


def exact_rank(matrix: Union[ConnectionSubmatrix, np.ndarray]) -> int:
    if isinstance(matrix, ConnectionSubmatrix):
        matrix = matrix.entries
    return bareiss_rank(matrix)


def tangle_family(
    k: int, max_chords: int, family: str = FAMILY_ALL, samples: int = 0, rng: Optional[random.Random] = None, budget: Optional[int] = None
) -> List[Tangle]:
    """All canonical k-tangles with at most `max_chords` chords, or a seeded sample of them in enumeration order"""
    tangles = enumerate_tangles_up_to(k, max_chords, budget)
    if family == FAMILY_ALL:
        return tangles
    if family != FAMILY_SAMPLED:
        raise ValueError("Unknown tangle family {family!r}".format(family=family))
    rng = rng or random.Random(0)
    chosen = sorted(rng.sample(range(len(tangles)), min(samples, len(tangles))))
    return [tangles[i] for i in chosen]


def rank_bound(f: WeightSystemOracle, k: int) -> Union[int, Fraction]:
    bound = Fraction(f.loop_value) ** (2 * k)
    return int(bound) if bound.denominator == 1 else bound


def rank_report(
    f: WeightSystemOracle,
    k: int,
    max_chords: int,
    family: str = FAMILY_ALL,
    samples: int = 0,
    rng: Optional[random.Random] = None,
    budget: Optional[int] = None,
) -> RankReport:
    """Rank of the exhibited submatrix on one tangle family against f(○)^{2k}"""
    tangles = tangle_family(k, max_chords, family, samples, rng, budget)
    submatrix = connection_submatrix(f, k, tangles, tangles)
    rank = exact_rank(submatrix)
    bound = rank_bound(f, k)
    label = "{family}:chords<={max_chords}".format(family=family, max_chords=max_chords)
    logger.info("Connection submatrix of {name} on {count} {k}-tangles has rank {rank}".format(name=f.name, count=len(tangles), k=k, rank=rank))
    return RankReport(k=k, family=label, size=submatrix.size, rank=rank, bound=bound, ok=rank <= bound)
