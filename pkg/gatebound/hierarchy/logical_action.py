import itertools
import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from gatebound.codes import SubsystemCode
from gatebound.hierarchy.levels import CliffordLevel, diagonal_level
from gatebound.hierarchy.phase_polynomial import PhasePolynomial
from gatebound.pauli import gf2
from gatebound.utils import KwargsException

_logger = logging.getLogger(__name__)

MAX_ENUMERATED_BITS = 20


class CosetEnumerationTooLargeException(KwargsException):
    """
    raised when the exhaustive coset enumeration would need more than 2^MAX_ENUMERATED_BITS evaluations
    """
    pass


@dataclass(frozen=True)
class CosetViolation:
    """
    two members of the same logical class on which the gate phases differ
    """
    logical_index: Tuple[int, ...]
    first: Tuple[int, ...]
    second: Tuple[int, ...]
    first_value: int
    second_value: int

    def to_dict(self) -> dict:
        return {'logical': list(self.logical_index), 'first': list(self.first), 'second': list(self.second),
                'first_value': self.first_value, 'second_value': self.second_value}


@dataclass(frozen=True)
class LogicalActionResult:
    preserves_codespace: bool
    logical: Optional[PhasePolynomial] = None
    level: Optional[CliffordLevel] = None
    violation: Optional[CosetViolation] = None
    oracle_verified: bool = False

    def to_dict(self) -> dict:
        return {'preserves_codespace': self.preserves_codespace,
                'logical': self.logical.to_dict() if self.logical is not None else None,
                'logical_text': repr(self.logical) if self.logical is not None else None,
                'level': self.level.to_dict() if self.level is not None else None,
                'violation': self.violation.to_dict() if self.violation is not None else None,
                'oracle_verified': self.oracle_verified}


def logical_x_representatives(code: SubsystemCode) -> np.ndarray:
    """
    k X-type logical representatives (x vectors): ker(H_Z) modulo rowspace(H_X)
    """
    h_x, h_z = code.css_parts()
    kernel = gf2.nullspace(h_z, column_count=code.n)
    return gf2.complement_basis(h_x, kernel)


def _single_qubit_parts(per_qubit: Sequence[PhasePolynomial], n: int) -> Tuple[int, int, np.ndarray]:
    if len(per_qubit) != n:
        raise ValueError(f'expected one polynomial per qubit ({n}), got {len(per_qubit)}')
    for index, polynomial in enumerate(per_qubit):
        if polynomial.n != 1:
            raise ValueError(f'polynomial of qubit {index} is on {polynomial.n} variables, expected 1')
    kappa = max(p.kappa for p in per_qubit)
    constant = 0
    linear = np.zeros(n, dtype=np.int64)
    for index, polynomial in enumerate(per_qubit):
        terms = polynomial.scale_to(kappa).terms
        constant += terms.get(frozenset(), 0)
        linear[index] = terms.get(frozenset([0]), 0)
    return kappa, constant, linear


def transversal_diagonal_logical_action(code: SubsystemCode,
                                        per_qubit: Sequence[PhasePolynomial]) -> LogicalActionResult:
    """
    the logical action of a product of single-qubit diagonal gates on a CSS stabilizer code.

    the phase f(x) = sum_j f_j(x_j) must be constant on every coset a * L_X + rowspace(H_X), and then
    the constant values define the logical phase polynomial f_L(a).

    :param code: a CSS stabilizer code
    :param per_qubit: a one-variable phase polynomial per physical qubit
    """
    h_x, _ = code.css_parts()
    kappa, constant, linear = _single_qubit_parts(per_qubit, code.n)
    modulus = 1 << kappa
    h_x = gf2.row_reduce(h_x).reduced if h_x.shape[0] else h_x
    logical_x = logical_x_representatives(code)
    k = logical_x.shape[0]
    bits = h_x.shape[0] + k
    if bits > MAX_ENUMERATED_BITS:
        raise CosetEnumerationTooLargeException(f'Enumeration needs 2^{bits} evaluations', bits=bits)

    selections = np.array(list(itertools.product((0, 1), repeat=h_x.shape[0])), dtype=np.int64)
    selections = selections.reshape(1 << h_x.shape[0], h_x.shape[0])
    stabilizer_span = (selections @ h_x.astype(np.int64)) % 2
    values: List[int] = []
    for logical_bits in itertools.product((0, 1), repeat=k):
        # index bit j is a_j, so iterate a with a_0 fastest
        a = np.array(logical_bits[::-1], dtype=np.int64)
        representative = (a @ logical_x.astype(np.int64)) % 2 if k else np.zeros(code.n, dtype=np.int64)
        coset = stabilizer_span ^ representative
        phases = (constant + coset @ linear) % modulus
        mismatch = np.flatnonzero(phases != phases[0])
        if mismatch.size:
            other = int(mismatch[0])
            violation = CosetViolation(logical_index=tuple(int(v) for v in a),
                                       first=tuple(int(v) for v in coset[0]),
                                       second=tuple(int(v) for v in coset[other]),
                                       first_value=int(phases[0]),
                                       second_value=int(phases[other]))
            _logger.info(f'Gate does not preserve the codespace of {code.name or "code"}: {violation}')
            return LogicalActionResult(preserves_codespace=False, violation=violation)
        values.append(int(phases[0]))

    logical = PhasePolynomial.from_truth_table(values, k, kappa)
    oracle_verified = all(logical.evaluate([(index >> j) & 1 for j in range(k)]) == value
                          for index, value in enumerate(values))
    return LogicalActionResult(preserves_codespace=True,
                               logical=logical,
                               level=diagonal_level(logical),
                               oracle_verified=oracle_verified)
