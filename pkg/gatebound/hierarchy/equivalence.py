import itertools
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import numpy as np

from gatebound.hierarchy.dense import diagonal_matrix, pauli_matrix
from gatebound.hierarchy.levels import CliffordLevel, diagonal_level, pauli_level
from gatebound.hierarchy.phase_polynomial import PhasePolynomial
from gatebound.pauli import PauliOperator

_logger = logging.getLogger(__name__)

_ATOL = 1e-9


def _normalized_key(unitary: np.ndarray) -> bytes:
    flat = unitary.reshape(-1)
    magnitudes = np.abs(flat)
    anchor = flat[int(np.argmax(magnitudes > magnitudes.max() - 1e-6))]
    normalized = np.round(unitary / (anchor / abs(anchor)), 8) + 0.0
    return normalized.tobytes()


def is_phase_pauli(unitary: np.ndarray) -> bool:
    """
    True iff the matrix is a phase times a Pauli operator
    """
    dimension = unitary.shape[0]
    n = dimension.bit_length() - 1
    flip = int(np.argmax(np.abs(unitary[:, 0])))
    phase = unitary[flip, 0]
    if abs(abs(phase) - 1) > 1e-6:
        return False
    z_mask = 0
    for j in range(n):
        ratio = unitary[(1 << j) ^ flip, 1 << j] / phase
        if abs(ratio + 1) < 1e-6:
            z_mask |= 1 << j
        elif abs(ratio - 1) >= 1e-6:
            return False
    basis = np.arange(dimension)
    parity = np.zeros(dimension, dtype=np.int64)
    for j in range(n):
        if z_mask >> j & 1:
            parity ^= (basis >> j) & 1
    # unit modulus entries on a permutation pattern force every other entry of a unitary to vanish
    values = unitary[basis ^ flip, basis]
    return bool(np.allclose(values, phase * (1 - 2 * parity), atol=1e-6))


class ConjugationLevelSolver:
    """
    computes hierarchy levels straight from the recursive conjugation definition:
    P_1 is the phase Paulis, and U is in P_m iff U P U^dagger is in P_(m-1) for every Pauli P.
    membership is memoised on phase-normalised matrices
    """

    def __init__(self, n: int):
        self._n = n
        self._paulis = [pauli_matrix(PauliOperator(x, z))
                        for x in itertools.product((0, 1), repeat=n)
                        for z in itertools.product((0, 1), repeat=n)
                        if any(x) or any(z)]
        self._memo: Dict[Tuple[bytes, int], bool] = {}

    def is_member(self, unitary: np.ndarray, level: int) -> bool:
        key = (_normalized_key(unitary), level)
        if key in self._memo:
            return self._memo[key]
        if level <= 1:
            result = is_phase_pauli(unitary)
        else:
            dagger = unitary.conj().T
            result = all(self.is_member(unitary @ pauli @ dagger, level - 1) for pauli in self._paulis)
        self._memo[key] = result
        return result

    def level(self, unitary: np.ndarray, cap: int) -> CliffordLevel:
        if np.allclose(unitary, unitary[0, 0] * np.eye(unitary.shape[0]), atol=_ATOL):
            return CliffordLevel(0, cap)
        for level in range(1, cap + 1):
            if self.is_member(unitary, level):
                return CliffordLevel(level, cap)
        return CliffordLevel(None, cap)


def conjugation_level(unitary: np.ndarray, cap: int = 4) -> CliffordLevel:
    n = unitary.shape[0].bit_length() - 1
    return ConjugationLevelSolver(n).level(unitary, cap)


@dataclass
class EquivalenceReport:
    samples: int = 0
    redrawn: int = 0
    by_level: Dict[int, int] = field(default_factory=dict)
    disagreements: List[str] = field(default_factory=list)
    non_pauli_level_one: List[str] = field(default_factory=list)

    @property
    def consistent(self) -> bool:
        return not self.disagreements and not self.non_pauli_level_one

    def to_dict(self) -> dict:
        return {'samples': self.samples, 'redrawn': self.redrawn, 'by_level': self.by_level,
                'disagreements': self.disagreements, 'non_pauli_level_one': self.non_pauli_level_one}


def _random_polynomial(rng: np.random.Generator, n: int) -> PhasePolynomial:
    kappa = int(rng.integers(1, 4))
    terms = {}
    for degree in range(0, n + 1):
        for monomial in itertools.combinations(range(n), degree):
            if rng.random() < 0.5:
                terms[frozenset(monomial)] = int(rng.integers(0, 1 << kappa))
    return PhasePolynomial(n, kappa, terms)


def _random_pauli(rng: np.random.Generator, n: int) -> PauliOperator:
    return PauliOperator(rng.integers(0, 2, n), rng.integers(0, 2, n), int(rng.integers(0, 4)))


def hierarchy_definition_equivalence(samples: int,
                                     rng: np.random.Generator,
                                     max_level: int = 3,
                                     max_qubits: int = 3) -> EquivalenceReport:
    """
    compares the finite-difference / Pauli levels with the levels from the conjugation definition,
    on random Pauli products and random diagonal gates of at most max_qubits qubits.
    draws whose level exceeds max_level are redrawn

    :param samples: the number of gates to compare
    :param rng: the random generator
    :param max_level: the largest level to compare
    :param max_qubits: the largest qubit count to draw
    """
    report = EquivalenceReport()
    solvers: Dict[int, ConjugationLevelSolver] = {}
    while report.samples < samples:
        n = int(rng.integers(1, max_qubits + 1))
        solver = solvers.setdefault(n, ConjugationLevelSolver(n))
        description: str
        expected: Optional[int]
        if rng.random() < 0.25:
            pauli = _random_pauli(rng, n)
            expected = pauli_level(pauli).value
            unitary = pauli_matrix(pauli)
            description = str(pauli)
        else:
            polynomial = _random_polynomial(rng, n)
            expected = diagonal_level(polynomial, cap=max_level).value
            if expected is None:
                report.redrawn += 1
                continue
            unitary = diagonal_matrix(polynomial)
            description = repr(polynomial)
        report.samples += 1
        report.by_level[expected] = report.by_level.get(expected, 0) + 1
        found = solver.level(unitary, cap=max_level).value
        if found != expected:
            _logger.warning(f'Level mismatch for {description}: {expected} by differences, {found} by conjugation')
            report.disagreements.append(description)
        if expected == 1 and not is_phase_pauli(unitary):
            report.non_pauli_level_one.append(description)
    return report
