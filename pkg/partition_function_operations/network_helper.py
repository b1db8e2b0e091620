import logging
from fractions import Fraction
from typing import Hashable, List, Sequence, Tuple

import numpy as np

logger = logging.getLogger("django")

Leg = Hashable


class TensorNetwork:
    """Contracts tensors one at a time into a running state.

    Every leg name occurs on exactly two tensors (or twice on one tensor, which is
    traced out on arrival) except the open legs left at the end.
    """

    def __init__(self):
        self.state = np.array(Fraction(1), dtype=object)
        self.legs: List[Leg] = []

    @staticmethod
    def _self_trace(array: np.ndarray, legs: List[Leg]) -> Tuple[np.ndarray, List[Leg]]:
        while True:
            repeated = next(((i, j) for i in range(len(legs)) for j in range(i + 1, len(legs)) if legs[i] == legs[j]), None)
            if repeated is None:
                return array, legs
            i, j = repeated
            array = np.asarray(np.trace(array, axis1=i, axis2=j), dtype=object)
            legs = [leg for position, leg in enumerate(legs) if position not in (i, j)]

    def add(self, array: np.ndarray, legs: Sequence[Leg]) -> None:
        array, legs = self._self_trace(np.asarray(array, dtype=object), list(legs))
        shared = [leg for leg in legs if leg in self.legs]
        state_axes = [self.legs.index(leg) for leg in shared]
        tensor_axes = [legs.index(leg) for leg in shared]
        self.state = np.asarray(np.tensordot(self.state, array, axes=(state_axes, tensor_axes)), dtype=object)
        self.legs = [leg for leg in self.legs if leg not in shared] + [leg for leg in legs if leg not in shared]

    def result(self, open_legs: Sequence[Leg]) -> np.ndarray:
        """The contracted state with its axes in the order of `open_legs`"""
        if sorted(map(repr, self.legs)) != sorted(map(repr, open_legs)):
            raise ValueError("Open legs {found} differ from {expected}".format(found=self.legs, expected=list(open_legs)))
        return self.state.transpose([self.legs.index(leg) for leg in open_legs])
