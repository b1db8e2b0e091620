import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Tuple, Union

from common.errors import LabelMismatch

from .data_definitions import ChordDiagram, Tangle
from .tangle_helper import canonical_form, compose, join, shift_union, unit

logger = logging.getLogger("django")

Scalar = Union[Fraction, int]


@dataclass(frozen=True)
class QuantumTangle:
    """A formal rational combination of canonical k-tangles.

    Terms are sorted by tangle and never carry a zero coefficient, so equal
    combinations compare equal. A combination with k = 0 is a combination of diagrams.
    """

    k: int
    terms: Tuple[Tuple[Tangle, Fraction], ...] = ()

    @classmethod
    def from_terms(cls, k: int, terms: Iterable[Tuple[Tangle, Scalar]]) -> "QuantumTangle":
        combined: Dict[Tangle, Fraction] = {}
        for tangle, coefficient in terms:
            if tangle.k != k:
                raise LabelMismatch("Term with {t_k} labels in a combination of {k}-tangles".format(t_k=tangle.k, k=k), witness=tangle)
            if coefficient == 0:
                continue
            key = canonical_form(tangle)
            combined[key] = combined.get(key, Fraction(0)) + Fraction(coefficient)
        kept = sorted(((t, c) for t, c in combined.items() if c != 0), key=lambda term: term[0].sort_key)
        return cls(k=k, terms=tuple(kept))

    @classmethod
    def from_tangle(cls, tangle: Union[Tangle, ChordDiagram], coefficient: Scalar = 1) -> "QuantumTangle":
        if isinstance(tangle, ChordDiagram):
            tangle = tangle.as_tangle()
        return cls.from_terms(tangle.k, [(tangle, coefficient)])

    @classmethod
    def zero(cls, k: int) -> "QuantumTangle":
        return cls(k=k)

    @classmethod
    def identity(cls, k: int) -> "QuantumTangle":
        return cls.from_tangle(unit(k))

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def _check_k(self, other: "QuantumTangle") -> None:
        if self.k != other.k:
            raise LabelMismatch("Combinations carry different label counts", witness=(self.k, other.k))

    def __add__(self, other: "QuantumTangle") -> "QuantumTangle":
        self._check_k(other)
        return QuantumTangle.from_terms(self.k, self.terms + other.terms)

    def __neg__(self) -> "QuantumTangle":
        return self.scale(-1)

    def __sub__(self, other: "QuantumTangle") -> "QuantumTangle":
        return self + (-other)

    def scale(self, factor: Scalar) -> "QuantumTangle":
        return QuantumTangle.from_terms(self.k, [(t, c * factor) for t, c in self.terms])

    def __rmul__(self, factor: Scalar) -> "QuantumTangle":
        return self.scale(factor)

    def compose(self, other: "QuantumTangle") -> "QuantumTangle":
        self._check_k(other)
        return QuantumTangle.from_terms(self.k, [(compose(s, t), a * b) for s, a in self.terms for t, b in other.terms])

    def join(self, other: "QuantumTangle") -> "QuantumTangle":
        """Bilinear S·T, a combination of diagrams"""
        self._check_k(other)
        return QuantumTangle.from_terms(0, [(join(s, t).as_tangle(), a * b) for s, a in self.terms for t, b in other.terms])

    def shift_union(self, other: "QuantumTangle") -> "QuantumTangle":
        return QuantumTangle.from_terms(
            self.k + other.k,
            [(shift_union(s, t), a * b) for s, a in self.terms for t, b in other.terms],
        )

    def power_union(self, m: int) -> "QuantumTangle":
        """x^⊔m, the empty 0-tangle when m = 0"""
        result = QuantumTangle.identity(0)
        for _ in range(m):
            result = result.shift_union(self)
        return result

    def power(self, exponent: int) -> "QuantumTangle":
        result = QuantumTangle.identity(self.k)
        for _ in range(exponent):
            result = result.compose(self)
        return result

    def diagrams(self) -> Tuple[Tuple[ChordDiagram, Fraction], ...]:
        if self.k != 0:
            raise LabelMismatch("Only a combination of 0-tangles is a combination of diagrams", witness=self.k)
        return tuple((t.as_diagram(), c) for t, c in self.terms)
