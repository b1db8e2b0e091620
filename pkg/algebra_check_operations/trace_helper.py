import logging
import random
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from common.data_definitions import DELTA_MAX_N
from common.errors import SizeBound, UsageError
from diagram_operations.enumeration_helper import enumerate_tangles_up_to
from diagram_operations.permutation_helper import all_permutations, cycles, multiply, sign
from diagram_operations.quantum_tangle import QuantumTangle
from diagram_operations.tangle_helper import copy_permutation_tangle, permutation_tangle
from partition_function_operations.partition_function_helper import eval_quantum, eval_tangle
from tensor_operations.tensor_helper import trace_pair

from .data_definitions import DeltaReport, WeightSystemOracle
from .four_term_helper import join_value

logger = logging.getLogger("django")


def theta(f: WeightSystemOracle, x: QuantumTangle) -> Fraction:
    """θ(x) = f(x·𝟙_k)"""
    return f.evaluate(x.join(QuantumTangle.identity(x.k)))


def delta_tangle(n: int) -> QuantumTangle:
    """Δ = Σ sgn(π) T_π over the permutations of [n+1]"""
    if n < 0:
        raise UsageError("The antisymmetrizer needs n >= 0, got {n}".format(n=n))
    if n > DELTA_MAX_N:
        logger.error("Refusing an antisymmetrizer over {size}! permutations".format(size=n + 1))
        raise SizeBound("Antisymmetrizer on {size} strands".format(size=n + 1), requested=n, bound=DELTA_MAX_N)
    terms = [(permutation_tangle(1, n + 1, pi), sign(pi)) for pi in all_permutations(n + 1)]
    return QuantumTangle.from_terms(n + 1, terms)


def delta_check(
    f: WeightSystemOracle, n: int, samples: int, max_chords: int, rng: random.Random, budget: Optional[int] = None
) -> DeltaReport:
    """θ(Δ) = 0 and f(Δ·T) = 0 on sampled (n+1)-tangles T"""
    if samples < 0:
        raise UsageError("Sample count must be non-negative, got {samples}".format(samples=samples))
    delta = delta_tangle(n)
    theta_value = theta(f, delta)
    family = enumerate_tangles_up_to(n + 1, max_chords, budget)
    chosen = sorted(rng.sample(range(len(family)), min(samples, len(family))))
    delta_operator = eval_quantum(f.tensor, delta) if f.tensor is not None else None
    failures = 0
    counterexample = None
    for index in chosen:
        tangle = family[index]
        if delta_operator is not None:
            value = trace_pair(delta_operator, eval_tangle(f.tensor, tangle))
        else:
            value = join_value(f, delta, tangle)
        if value != 0:
            failures += 1
            if counterexample is None:
                counterexample = tangle
    ok = theta_value == 0 and failures == 0
    logger.info("Antisymmetrizer check for n={n}: theta={theta}, {failures} of {count} samples failed".format(n=n, theta=theta_value, failures=failures, count=len(chosen)))
    return DeltaReport(n=n, theta=theta_value, samples=len(chosen), failures=failures, ok=ok, counterexample=counterexample)


def product_formula_sides(f: WeightSystemOracle, x: QuantumTangle, m: int, rho: Sequence[int], sigma: Sequence[int]):
    """Both sides of f(x^⊔m P_ρ · P_σ) = Π_c θ(x^|c|) over the orbits c of ρσ"""
    k = x.k
    power_union = x.power_union(m)
    p_rho = QuantumTangle.from_tangle(copy_permutation_tangle(k, m, rho))
    p_sigma = QuantumTangle.from_tangle(copy_permutation_tangle(k, m, sigma))
    left = f.evaluate(power_union.compose(p_rho).join(p_sigma))
    right = Fraction(1)
    for orbit in cycles(multiply(rho, sigma)):
        right *= theta(f, x.power(len(orbit)))
    return left, right


def product_formula_check(f: WeightSystemOracle, x: QuantumTangle, m: int, rho: Sequence[int], sigma: Sequence[int]) -> bool:
    left, right = product_formula_sides(f, x, m, rho, sigma)
    if left != right:
        logger.info("Product formula fails for rho={rho}, sigma={sigma}: {left} != {right}".format(rho=rho, sigma=sigma, left=left, right=right))
    return left == right


def permutation_matrix(f: WeightSystemOracle, x: QuantumTangle, m: int) -> np.ndarray:
    """(f(x^⊔m P_ρ · P_σ)) over ρ, σ in S_m, both in lexicographic order"""
    k = x.k
    if m > DELTA_MAX_N + 1:
        raise SizeBound("Permutation matrix over S_{m}".format(m=m), requested=m, bound=DELTA_MAX_N + 1)
    permutations = list(all_permutations(m))
    power_union = x.power_union(m)
    left_factors = [power_union.compose(QuantumTangle.from_tangle(copy_permutation_tangle(k, m, rho))) for rho in permutations]
    right_factors = [QuantumTangle.from_tangle(copy_permutation_tangle(k, m, sigma)) for sigma in permutations]
    entries = [[f.evaluate(left.join(right)) for right in right_factors] for left in left_factors]
    return np.array(entries, dtype=object).reshape(len(permutations), len(permutations))
