"""
dense (state-vector) verification of logical gate properties on codes with at most 10 qubits.

basis state index b has bit j equal to the value of qubit j. a Pauli acts as
``i^phase X^x Z^z |b> = i^phase (-1)^(z.b) |b xor x>``, so it is applied with index arrays instead
of matrix products.
"""
import logging
from dataclasses import dataclass, field
from typing import List, Sequence, Union

import numpy as np

from gatebound.codes import SubsystemCode
from gatebound.hierarchy.phase_polynomial import PhasePolynomial
from gatebound.pauli import PauliOperator
from gatebound.utils import KwargsException

_logger = logging.getLogger(__name__)

MAX_DENSE_QUBITS = 10
TOLERANCE = 1e-8


class DenseVerificationTooLargeException(KwargsException):
    """
    raised when dense verification is requested on more than MAX_DENSE_QUBITS qubits
    """
    pass


def _bit_index(bits: np.ndarray) -> int:
    return int(sum(int(v) << j for j, v in enumerate(bits)))


class DensePauli:
    """
    a Pauli operator prepared for repeated dense application
    """

    def __init__(self, operator: PauliOperator):
        n = operator.n
        basis = np.arange(1 << n)
        self.flip = _bit_index(operator.x)
        parity = np.zeros(1 << n, dtype=np.int64)
        for j in np.flatnonzero(operator.z):
            parity ^= (basis >> int(j)) & 1
        # column b of the matrix holds its only nonzero entry in row b ^ flip
        self.column_values = (1j ** operator.phase) * (1 - 2 * parity)
        self.target = basis ^ self.flip

    def left(self, matrix: np.ndarray) -> np.ndarray:
        """
        P @ matrix
        """
        result = np.empty_like(matrix, dtype=complex)
        result[self.target] = self.column_values[:, None] * matrix
        return result

    def right(self, matrix: np.ndarray) -> np.ndarray:
        """
        matrix @ P
        """
        return matrix[:, self.target] * self.column_values[None, :]

    def conjugate(self, matrix: np.ndarray) -> np.ndarray:
        """
        P @ matrix @ P^dagger
        """
        return self.right_dagger(self.left(matrix))

    def right_dagger(self, matrix: np.ndarray) -> np.ndarray:
        # column c of P^dagger holds conj(column_values[c ^ flip]) in row c ^ flip
        return matrix[:, self.target] * np.conj(self.column_values[self.target])[None, :]

    def vector(self, state: np.ndarray) -> np.ndarray:
        result = np.empty_like(state, dtype=complex)
        result[self.target] = self.column_values * state
        return result


def pauli_matrix(operator: PauliOperator) -> np.ndarray:
    return DensePauli(operator).left(np.eye(1 << operator.n, dtype=complex))


def diagonal_matrix(polynomial: PhasePolynomial) -> np.ndarray:
    phases = np.exp(2j * np.pi * polynomial.truth_table() / polynomial.modulus)
    return np.diag(phases)


Gate = Union[PauliOperator, PhasePolynomial, np.ndarray]


def gate_matrix(gate: Gate, n: int) -> np.ndarray:
    if isinstance(gate, PauliOperator):
        matrix = pauli_matrix(gate)
    elif isinstance(gate, PhasePolynomial):
        matrix = diagonal_matrix(gate)
    else:
        matrix = np.asarray(gate, dtype=complex)
    if matrix.shape != (1 << n, 1 << n):
        raise ValueError(f'gate has shape {matrix.shape}, expected {(1 << n, 1 << n)}')
    return matrix


@dataclass(frozen=True)
class DenseCandidate:
    """
    :param name: a label for the report
    :param kind: 'bare' (checked against Def. 2 style commutators) or 'dressed' (twirl commutation)
    :param gate: a Pauli operator, a diagonal phase polynomial or an explicit unitary
    """
    name: str
    kind: str
    gate: Gate


@dataclass(frozen=True)
class CandidateVerdict:
    name: str
    kind: str
    preserves_codespace: bool
    bare_logical: bool
    dressed_logical: bool

    @property
    def passes(self) -> bool:
        return self.bare_logical if self.kind == 'bare' else self.dressed_logical

    def to_dict(self) -> dict:
        return {'name': self.name, 'kind': self.kind, 'preserves_codespace': self.preserves_codespace,
                'bare_logical': self.bare_logical, 'dressed_logical': self.dressed_logical, 'passes': self.passes}


@dataclass
class DenseVerificationReport:
    verdicts: List[CandidateVerdict] = field(default_factory=list)
    closure_checked: int = 0
    closure_failures: List[str] = field(default_factory=list)
    expectation_pairs_checked: int = 0
    expectation_failures: List[str] = field(default_factory=list)

    @property
    def consistent(self) -> bool:
        return not self.closure_failures and not self.expectation_failures

    def verdict(self, name: str) -> CandidateVerdict:
        for verdict in self.verdicts:
            if verdict.name == name:
                return verdict
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {'verdicts': [v.to_dict() for v in self.verdicts],
                'closure_checked': self.closure_checked, 'closure_failures': self.closure_failures,
                'expectation_pairs_checked': self.expectation_pairs_checked,
                'expectation_failures': self.expectation_failures}


class DenseCodeModel:
    """
    the codespace projector and gauge twirl of a small code
    """

    def __init__(self, code: SubsystemCode):
        if code.n > MAX_DENSE_QUBITS:
            raise DenseVerificationTooLargeException(f'Dense verification supports at most {MAX_DENSE_QUBITS} '
                                                     f'qubits, code has {code.n}', n=code.n)
        self.code = code
        self.dimension = 1 << code.n
        self.gauge = [DensePauli(row) for row in code.gauge_basis]
        projector = np.eye(self.dimension, dtype=complex)
        for row in code.stabilizer:
            projector = (projector + DensePauli(row).left(projector)) / 2
        self.projector = projector

    def twirl(self, rho: np.ndarray) -> np.ndarray:
        """
        the average of G rho G^dagger over the gauge group (mod phases), as a composition of
        two-element averages over independent generators
        """
        for generator in self.gauge:
            rho = (rho + generator.conjugate(rho)) / 2
        return rho

    def preserves_codespace(self, unitary: np.ndarray) -> bool:
        return np.allclose(unitary @ self.projector, self.projector @ unitary, atol=TOLERANCE)

    def is_bare_logical(self, unitary: np.ndarray) -> bool:
        """
        [U, Pi] = 0 and [U, G] Pi = 0 for every gauge generator
        """
        if not self.preserves_codespace(unitary):
            return False
        # G commutes with Pi, so U G Pi = (U Pi) G
        projected = unitary @ self.projector
        return all(np.allclose(generator.right(projected), generator.left(projected), atol=TOLERANCE)
                   for generator in self.gauge)

    def random_codespace_state(self, rng: np.random.Generator) -> np.ndarray:
        while True:
            raw = rng.normal(size=self.dimension) + 1j * rng.normal(size=self.dimension)
            state = self.projector @ raw
            norm = np.linalg.norm(state)
            if norm > 1e-6:
                return state / norm

    def random_gauge_element(self, rng: np.random.Generator) -> PauliOperator:
        element = PauliOperator.identity(self.code.n)
        for row, chosen in zip(self.code.gauge_basis, rng.integers(0, 2, size=len(self.code.gauge_basis))):
            if chosen:
                element = element.multiply(row)
        return element

    def is_dressed_logical(self, unitary: np.ndarray, rng: np.random.Generator, samples: int) -> bool:
        """
        U preserves the codespace and conjugation by U commutes with the gauge twirl on codespace states
        """
        if not self.preserves_codespace(unitary):
            return False
        for _ in range(samples):
            state = self.random_codespace_state(rng)
            rho = np.outer(state, state.conj())
            left = self.twirl(unitary @ rho @ unitary.conj().T)
            right = unitary @ self.twirl(rho) @ unitary.conj().T
            if not np.allclose(left, right, atol=TOLERANCE):
                return False
        return True


def _expectation(state: np.ndarray, unitary: np.ndarray) -> complex:
    return complex(np.vdot(state, unitary @ state))


def dense_verify(code: SubsystemCode,
                 candidates: Sequence[DenseCandidate],
                 samples: int,
                 rng: np.random.Generator,
                 *,
                 twirl_samples: int = 4) -> DenseVerificationReport:
    """
    checks candidates against the bare / dressed logical definitions, then checks that conjugating
    a bare logical by a dressed logical gives a bare logical, and that states agreeing on all bare
    logicals also agree on those conjugated operators

    :param code: a code on at most 10 qubits
    :param candidates: the gates to check
    :param samples: the number of sampled (dressed, bare) pairs and state pairs
    :param rng: the random generator
    :param twirl_samples: the number of codespace states used per twirl commutation check
    """
    model = DenseCodeModel(code)
    report = DenseVerificationReport()
    matrices = {}
    for candidate in candidates:
        if candidate.kind not in ('bare', 'dressed'):
            raise ValueError(f"candidate kind must be 'bare' or 'dressed', got {candidate.kind!r}")
        unitary = gate_matrix(candidate.gate, code.n)
        matrices[candidate.name] = unitary
        verdict = CandidateVerdict(name=candidate.name,
                                   kind=candidate.kind,
                                   preserves_codespace=model.preserves_codespace(unitary),
                                   bare_logical=model.is_bare_logical(unitary),
                                   dressed_logical=model.is_dressed_logical(unitary, rng, twirl_samples))
        if not verdict.passes:
            _logger.info(f'Candidate {candidate.name} is not a {candidate.kind} logical operator')
        report.verdicts.append(verdict)

    bare = [v.name for v in report.verdicts if v.bare_logical]
    dressed = [v.name for v in report.verdicts if v.dressed_logical]
    if not bare or not dressed:
        return report

    for _ in range(samples):
        dressed_name = dressed[int(rng.integers(len(dressed)))]
        bare_name = bare[int(rng.integers(len(bare)))]
        u_d = matrices[dressed_name]
        conjugated = u_d @ matrices[bare_name] @ u_d.conj().T
        report.closure_checked += 1
        if not model.is_bare_logical(conjugated):
            report.closure_failures.append(f'{dressed_name} * {bare_name} * {dressed_name}^dagger')

        state = model.random_codespace_state(rng)
        other = DensePauli(model.random_gauge_element(rng)).vector(state)
        agree = all(np.isclose(_expectation(state, matrices[name]), _expectation(other, matrices[name]),
                               atol=1e-7) for name in bare)
        if not agree:
            continue
        report.expectation_pairs_checked += 1
        if not np.isclose(_expectation(state, conjugated), _expectation(other, conjugated), atol=1e-7):
            report.expectation_failures.append(f'{dressed_name} * {bare_name} * {dressed_name}^dagger')
    return report
