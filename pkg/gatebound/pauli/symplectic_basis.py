from dataclasses import dataclass
from typing import Iterator, Optional, Sequence, Tuple

import numpy as np

from gatebound.pauli import gf2
from gatebound.pauli.pauli_operator import PauliOperator, QubitCountMismatchException


class SymplecticBasis:
    """
    an ordered list of Pauli operators on n qubits, together with their (x | z) matrix.
    """

    def __init__(self, n: int, rows: Sequence[PauliOperator] = (), *, reduced: bool = False):
        """
        :param n: number of qubits
        :param rows: the operators
        :param reduced: True if the rows are known to be an independent RREF
        """
        for row in rows:
            if row.n != n:
                raise QubitCountMismatchException(f'Row acts on {row.n} qubits, basis on {n}',
                                                  expected=n, actual=row.n)
        self._n = n
        self._rows: Tuple[PauliOperator, ...] = tuple(rows)
        self._reduced = reduced
        if self._rows:
            matrix = np.vstack([row.vector for row in self._rows])
        else:
            matrix = np.zeros((0, 2 * n), dtype=np.uint8)
        matrix.setflags(write=False)
        self._matrix = matrix

    @classmethod
    def from_matrix(cls, n: int, matrix, *, reduced: bool = False) -> 'SymplecticBasis':
        """
        builds a basis of Hermitian operators from (x | z) rows
        """
        matrix = gf2.as_gf2(matrix) if np.asarray(matrix).size else np.zeros((0, 2 * n), dtype=np.uint8)
        rows = [PauliOperator.hermitian(row[:n], row[n:]) for row in matrix]
        return cls(n, rows, reduced=reduced)

    @classmethod
    def parse(cls, lines: Sequence[str]) -> 'SymplecticBasis':
        rows = [PauliOperator.parse(line) for line in lines]
        if not rows:
            raise ValueError('can not infer the qubit count of an empty basis')
        return cls(rows[0].n, rows)

    @property
    def n(self) -> int:
        return self._n

    @property
    def rows(self) -> Tuple[PauliOperator, ...]:
        return self._rows

    @property
    def matrix(self) -> np.ndarray:
        return self._matrix

    @property
    def x_part(self) -> np.ndarray:
        return self._matrix[:, :self._n]

    @property
    def z_part(self) -> np.ndarray:
        return self._matrix[:, self._n:]

    @property
    def reduced(self) -> bool:
        return self._reduced

    @property
    def rank(self) -> int:
        if self._reduced:
            return len(self._rows)
        return gf2.rank(self._matrix)

    def restricted_matrix(self, qubits: Sequence[int]) -> np.ndarray:
        """
        the columns of the given qubits, in both the x and the z halves
        """
        qubits = list(qubits)
        return np.concatenate([self._matrix[:, qubits], self._matrix[:, [q + self._n for q in qubits]]], axis=1)

    def product(self, combination) -> PauliOperator:
        """
        the ordered product (by row index) of the rows selected by combination
        """
        result = PauliOperator.identity(self._n)
        for selected, row in zip(np.asarray(combination).reshape(-1), self._rows):
            if selected:
                result = result.multiply(row)
        return result

    def extended(self, rows: Sequence[PauliOperator]) -> 'SymplecticBasis':
        return SymplecticBasis(self._n, self._rows + tuple(rows))

    def __len__(self) -> int:
        return len(self._rows)

    def __iter__(self) -> Iterator[PauliOperator]:
        return iter(self._rows)

    def __getitem__(self, item: int) -> PauliOperator:
        return self._rows[item]

    def __str__(self):
        return '\n'.join(str(row) for row in self._rows)

    def __repr__(self):
        return f'SymplecticBasis(n={self._n}, rows={len(self._rows)})'


@dataclass(frozen=True)
class SpanMembership:
    """
    :param in_span: True if the operator is in the span (ignoring phases)
    :param coefficients: the combination of basis rows that matches the operator (None if not in span)
    :param residual_phase: operator phase minus the phase of the ordered product (None unless
    the phase was checked)
    """
    in_span: bool
    coefficients: Optional[np.ndarray] = None
    residual_phase: Optional[int] = None

    def __bool__(self):
        return self.in_span


def row_reduce(basis: SymplecticBasis) -> Tuple[SymplecticBasis, int]:
    """
    brings the basis to reduced row-echelon form, lowest column pivots first.
    the phase of every reduced row is the exact ordered product of the input rows combined into it

    :return: the reduced basis and its rank
    """
    if basis.reduced:
        return basis, len(basis)
    if len(basis) == 0:
        return SymplecticBasis(basis.n, (), reduced=True), 0
    reduction = gf2.row_reduce(basis.matrix)
    rows = [basis.product(reduction.transform[i]) for i in range(reduction.rank)]
    return SymplecticBasis(basis.n, rows, reduced=True), reduction.rank


def in_span(operator: PauliOperator, basis: SymplecticBasis, check_phase: bool = False) -> SpanMembership:
    """
    tests whether the operator (mod phase) is a product of basis rows

    :param operator: the operator to test
    :param basis: the basis
    :param check_phase: if True, also report the phase difference to the ordered product
    """
    if operator.n != basis.n:
        raise QubitCountMismatchException(f'Operator acts on {operator.n} qubits, basis on {basis.n}',
                                          expected=basis.n, actual=operator.n)
    combination = gf2.solve_combination(basis.matrix.reshape(-1, 2 * basis.n), operator.vector)
    if combination is None:
        return SpanMembership(False)
    if not check_phase:
        return SpanMembership(True, combination)
    product = basis.product(combination)
    return SpanMembership(True, combination, (operator.phase - product.phase) % 4)


def twisted_matrix(basis: SymplecticBasis) -> np.ndarray:
    """
    the (z | x) matrix: its right kernel is the set of operators commuting with every row
    """
    return np.concatenate([basis.z_part, basis.x_part], axis=1)


def symplectic_gram(left: np.ndarray, right: np.ndarray, n: int) -> np.ndarray:
    """
    the matrix of symplectic products between the rows of two (x | z) matrices
    """
    left = left.astype(np.int64)
    right = right.astype(np.int64)
    return ((left[:, :n] @ right[:, n:].T + left[:, n:] @ right[:, :n].T) % 2).astype(np.uint8)


def centralizer(basis: SymplecticBasis) -> SymplecticBasis:
    """
    a basis of all Paulis (mod phase) that commute with every row. its dimension is 2n - rank
    """
    kernel = gf2.nullspace(twisted_matrix(basis), column_count=2 * basis.n)
    return SymplecticBasis.from_matrix(basis.n, gf2.row_reduce(kernel).reduced, reduced=True)


def center(basis: SymplecticBasis) -> SymplecticBasis:
    """
    span(basis) intersected with its centralizer. the generators are normalised to letter
    coefficient +1, so the group they generate never contains -I
    """
    if len(basis) == 0:
        return SymplecticBasis(basis.n, (), reduced=True)
    independent = gf2.row_reduce(basis.matrix).reduced
    gram = symplectic_gram(independent, independent, basis.n)
    kernel = gf2.nullspace(gram, column_count=independent.shape[0])
    if kernel.shape[0] == 0:
        return SymplecticBasis(basis.n, (), reduced=True)
    members = (kernel.astype(np.int64) @ independent.astype(np.int64)) % 2
    return SymplecticBasis.from_matrix(basis.n, gf2.row_reduce(members).reduced, reduced=True)


def commuting_with_all(operator: PauliOperator, basis: SymplecticBasis) -> bool:
    if len(basis) == 0:
        return True
    return not symplectic_gram(operator.vector.reshape(1, -1), basis.matrix, basis.n).any()
