from typing import Iterable, Tuple

import numpy as np

from gatebound.utils import KwargsException

_SIGNS = {0: '+', 1: '+i', 2: '-', 3: '-i'}
_SIGN_PREFIXES = (('+i', 1), ('-i', 3), ('+', 0), ('-', 2))


class QubitCountMismatchException(KwargsException):
    """
    raised when operators (or bases) on a different number of qubits are combined
    """
    pass


class PauliFormatException(KwargsException):
    """
    raised when a Pauli string can't be parsed
    """
    pass


class PauliOperator:
    """
    a phase-tracked n-qubit Pauli operator ``i^phase X^x Z^z``.

    in letter notation every qubit with x=z=1 is a ``Y = iXZ``, so the printed coefficient is
    ``i^(phase - #Y)``.
    """

    __slots__ = ('_x', '_z', '_phase')

    def __init__(self, x, z, phase: int = 0):
        x_arr = np.array(x, dtype=np.uint8).reshape(-1) & 1
        z_arr = np.array(z, dtype=np.uint8).reshape(-1) & 1
        if x_arr.shape != z_arr.shape:
            raise QubitCountMismatchException('x and z parts have different lengths',
                                              x_length=x_arr.size, z_length=z_arr.size)
        x_arr.setflags(write=False)
        z_arr.setflags(write=False)
        self._x = x_arr
        self._z = z_arr
        self._phase = int(phase) % 4

    @classmethod
    def identity(cls, n: int) -> 'PauliOperator':
        return cls(np.zeros(n, dtype=np.uint8), np.zeros(n, dtype=np.uint8))

    @classmethod
    def from_vector(cls, vector, phase: int = 0) -> 'PauliOperator':
        """
        builds an operator from a symplectic (x | z) vector

        :param vector: 0/1 vector of length 2n
        :param phase: the phase exponent
        """
        vector = np.asarray(vector, dtype=np.uint8).reshape(-1)
        n = vector.size // 2
        return cls(vector[:n], vector[n:], phase)

    @classmethod
    def hermitian(cls, x, z) -> 'PauliOperator':
        """
        the operator with letter coefficient +1 (the Hermitian representative of x, z)
        """
        x = np.asarray(x, dtype=np.uint8) & 1
        z = np.asarray(z, dtype=np.uint8) & 1
        return cls(x, z, int(np.count_nonzero(x & z)) % 4)

    @classmethod
    def single(cls, n: int, qubit: int, letter: str) -> 'PauliOperator':
        letters = ['I'] * n
        letters[qubit] = letter
        return cls.parse('+' + ''.join(letters))

    @classmethod
    def from_letters(cls, n: int, letters: Iterable[Tuple[int, str]]) -> 'PauliOperator':
        """
        builds a Hermitian operator from (qubit, letter) pairs. unnamed qubits are identity
        """
        chars = ['I'] * n
        for qubit, letter in letters:
            chars[qubit] = letter
        return cls.parse('+' + ''.join(chars))

    @classmethod
    def parse(cls, text: str) -> 'PauliOperator':
        """
        parses sign+letters notation, e.g. '+XIZ', '-iY', 'ZZ' (no sign means '+')

        :param text: the text to parse
        :return: the operator
        """
        stripped = text.strip()
        letter_phase = 0
        for prefix, value in _SIGN_PREFIXES:
            if stripped.startswith(prefix):
                letter_phase = value
                stripped = stripped[len(prefix):]
                break
        if not stripped:
            raise PauliFormatException(f'Pauli string {text!r} has no letters', text=text)
        x = np.zeros(len(stripped), dtype=np.uint8)
        z = np.zeros(len(stripped), dtype=np.uint8)
        for i, letter in enumerate(stripped.upper()):
            if letter == 'X':
                x[i] = 1
            elif letter == 'Z':
                z[i] = 1
            elif letter == 'Y':
                x[i] = 1
                z[i] = 1
            elif letter != 'I':
                raise PauliFormatException(f'Unexpected letter {letter!r} in Pauli string {text!r}',
                                           text=text, position=i)
        y_count = int(np.count_nonzero(x & z))
        return cls(x, z, letter_phase + y_count)

    @property
    def n(self) -> int:
        return int(self._x.size)

    @property
    def x(self) -> np.ndarray:
        return self._x

    @property
    def z(self) -> np.ndarray:
        return self._z

    @property
    def phase(self) -> int:
        return self._phase

    @property
    def letter_phase(self) -> int:
        return (self._phase - int(np.count_nonzero(self._x & self._z))) % 4

    @property
    def vector(self) -> np.ndarray:
        return np.concatenate([self._x, self._z])

    @property
    def support(self) -> frozenset:
        return frozenset(int(i) for i in np.flatnonzero(self._x | self._z))

    @property
    def weight(self) -> int:
        return int(np.count_nonzero(self._x | self._z))

    @property
    def letters(self) -> str:
        chars = np.array(['I', 'X', 'Z', 'Y'])
        return ''.join(chars[self._x + 2 * self._z])

    def is_identity(self) -> bool:
        return not (self._x.any() or self._z.any())

    def with_phase(self, phase: int) -> 'PauliOperator':
        return PauliOperator(self._x, self._z, phase)

    def _check_length(self, other: 'PauliOperator') -> None:
        if self.n != other.n:
            raise QubitCountMismatchException(f'Operators act on {self.n} and {other.n} qubits',
                                              left=self.n, right=other.n)

    def multiply(self, other: 'PauliOperator') -> 'PauliOperator':
        """
        the exact product self * other (moving Z's of self past X's of other)
        """
        self._check_length(other)
        cross = int(np.count_nonzero(self._z & other._x))
        return PauliOperator(self._x ^ other._x, self._z ^ other._z, self._phase + other._phase + 2 * cross)

    def inverse(self) -> 'PauliOperator':
        overlap = int(np.count_nonzero(self._x & self._z))
        return PauliOperator(self._x, self._z, -self._phase + 2 * overlap)

    def commutes(self, other: 'PauliOperator') -> bool:
        self._check_length(other)
        product = int(np.count_nonzero(self._x & other._z)) + int(np.count_nonzero(self._z & other._x))
        return product % 2 == 0

    def restricted(self, qubits: Iterable[int]) -> 'PauliOperator':
        """
        the operator with everything outside qubits replaced by identity (Hermitian phase kept
        on the remaining letters)
        """
        mask = np.zeros(self.n, dtype=np.uint8)
        mask[list(qubits)] = 1
        x, z = self._x & mask, self._z & mask
        return PauliOperator(x, z, self.letter_phase + int(np.count_nonzero(x & z)))

    def permuted(self, permutation) -> 'PauliOperator':
        """
        relabels qubits: qubit i moves to permutation[i]
        """
        permutation = np.asarray(permutation)
        x = np.zeros(self.n, dtype=np.uint8)
        z = np.zeros(self.n, dtype=np.uint8)
        x[permutation] = self._x
        z[permutation] = self._z
        return PauliOperator(x, z, self._phase)

    def __mul__(self, other: 'PauliOperator') -> 'PauliOperator':
        return self.multiply(other)

    def __eq__(self, other):
        if not isinstance(other, PauliOperator):
            return NotImplemented
        return (self._phase == other._phase and np.array_equal(self._x, other._x)
                and np.array_equal(self._z, other._z))

    def __hash__(self):
        return hash((self._phase, self._x.tobytes(), self._z.tobytes()))

    def __str__(self):
        return _SIGNS[self.letter_phase] + self.letters

    def __repr__(self):
        return f'PauliOperator({str(self)!r})'

    def to_dict(self) -> str:
        return str(self)


def multiply(p: PauliOperator, q: PauliOperator) -> PauliOperator:
    return p.multiply(q)


def inverse(p: PauliOperator) -> PauliOperator:
    return p.inverse()


def commutes(p: PauliOperator, q: PauliOperator) -> bool:
    return p.commutes(q)
