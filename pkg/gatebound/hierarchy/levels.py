from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from gatebound.hierarchy.phase_polynomial import CanonicalKey, PhasePolynomial
from gatebound.pauli import PauliOperator
from gatebound.utils import KwargsException

DEFAULT_LEVEL_CAP = 8


class LevelExceedsCapException(KwargsException):
    """
    raised by CliffordLevel.level_or_raise when the level is above the search cap
    """
    pass


@dataclass(frozen=True)
class CliffordLevel:
    """
    the level of a gate in the Clifford hierarchy (0 for a global phase, 1 for Paulis, 2 for Cliffords...)

    :param value: the level, or None if it is above the cap
    :param cap: the cap used for the computation
    """
    value: Optional[int]
    cap: Optional[int] = DEFAULT_LEVEL_CAP

    @property
    def exceeds_cap(self) -> bool:
        return self.value is None

    @property
    def level_or_raise(self) -> int:
        if self.value is None:
            raise LevelExceedsCapException(f'Level exceeds the cap {self.cap}', cap=self.cap)
        return self.value

    def __str__(self):
        return str(self.value) if self.value is not None else f'>{self.cap}'

    def to_dict(self) -> dict:
        return {'level': self.value, 'cap': self.cap, 'exceeds_cap': self.exceeds_cap}


def pauli_level(operator: PauliOperator) -> CliffordLevel:
    return CliffordLevel(0 if operator.is_identity() else 1)


@lru_cache(maxsize=65536)
def _diagonal_level(key: CanonicalKey) -> int:
    n, kappa, terms = key
    polynomial = PhasePolynomial(n, kappa, {frozenset(m): c for m, c in terms})
    if polynomial.is_constant():
        return 0
    variables = set()
    for monomial in polynomial.terms:
        variables.update(monomial)
    return 1 + max(_diagonal_level(polynomial.finite_difference(j).canonical_key()) for j in sorted(variables))


def diagonal_level(polynomial: PhasePolynomial, cap: int = DEFAULT_LEVEL_CAP) -> CliffordLevel:
    """
    the Clifford hierarchy level of a diagonal gate: 0 for a constant phase, otherwise
    1 + the largest level among its finite differences

    :param polynomial: the phase polynomial of the gate
    :param cap: levels above the cap are reported as exceeding it
    """
    level = _diagonal_level(polynomial.canonical_key())
    return CliffordLevel(level if level <= cap else None, cap)
