## Permutations are tuples of 0-based images: perm[i] is the image of i
import itertools
from functools import lru_cache
from typing import Iterator, List, Sequence, Tuple

Permutation = Tuple[int, ...]


def identity_permutation(size: int) -> Permutation:
    return tuple(range(size))


def is_permutation(images: Sequence[int]) -> bool:
    return sorted(images) == list(range(len(images)))


def inverse(perm: Sequence[int]) -> Permutation:
    result = [0] * len(perm)
    for i, image in enumerate(perm):
        result[image] = i
    return tuple(result)


def multiply(first: Sequence[int], second: Sequence[int]) -> Permutation:
    """The product first∘second: apply `second`, then `first`"""
    return tuple(first[second[i]] for i in range(len(second)))


def cycles(perm: Sequence[int]) -> List[Tuple[int, ...]]:
    """Orbits of `perm`, each starting at its smallest element, in increasing order"""
    seen = [False] * len(perm)
    orbits = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        orbit = []
        current = start
        while not seen[current]:
            seen[current] = True
            orbit.append(current)
            current = perm[current]
        orbits.append(tuple(orbit))
    return orbits


def orbit_count(perm: Sequence[int]) -> int:
    return len(cycles(perm))


def sign(perm: Sequence[int]) -> int:
    transpositions = sum(len(orbit) - 1 for orbit in cycles(perm))
    return -1 if transpositions % 2 else 1


def all_permutations(size: int) -> Iterator[Permutation]:
    return itertools.permutations(range(size))


@lru_cache(maxsize=16)
def hyperoctahedral_group(m: int) -> Tuple[Permutation, ...]:
    """All 2^m * m! permutations of [2m] preserving the pairs {2c, 2c+1}.

    The identity comes first.
    """
    elements = []
    for chord_order in itertools.permutations(range(m)):
        for flips in itertools.product((0, 1), repeat=m):
            element = [0] * (2 * m)
            for chord, target in enumerate(chord_order):
                element[2 * chord] = 2 * target + flips[chord]
                element[2 * chord + 1] = 2 * target + 1 - flips[chord]
            elements.append(tuple(element))
    return tuple(elements)


def conjugate(wiring: Sequence[int], relabeling: Sequence[int]) -> Permutation:
    """h∘w∘h⁻¹ where h acts by `relabeling` on its first len(relabeling) points and fixes the rest"""
    size = len(wiring)
    internal = len(relabeling)
    h = list(relabeling) + list(range(internal, size))
    result = [0] * size
    for tail, head in enumerate(wiring):
        result[h[tail]] = h[head]
    return tuple(result)
