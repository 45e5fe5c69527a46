from typing import Iterable, Iterator, List

import numpy as np

from gatebound.utils import KwargsException


class InvalidRegionException(KwargsException):
    """
    raised when a region names qubits that don't exist, or names a qubit twice
    """
    pass


class Region:
    """
    an immutable set of qubit indices of an n-qubit code
    """

    __slots__ = ('_qubits', '_n')

    def __init__(self, qubits: Iterable[int], n: int):
        qubit_list = [int(q) for q in qubits]
        qubit_set = frozenset(qubit_list)
        if len(qubit_set) != len(qubit_list):
            raise InvalidRegionException('Region has repeated qubit indices', n=n)
        bad = [q for q in qubit_list if q < 0 or q >= n]
        if bad:
            raise InvalidRegionException(f'Region indices out of range [0, {n}): {sorted(bad)[:5]}',
                                         n=n, bad_indices=bad)
        self._qubits = qubit_set
        self._n = n

    @classmethod
    def from_mask(cls, mask, n: int) -> 'Region':
        return cls(np.flatnonzero(np.asarray(mask)), n)

    @classmethod
    def everything(cls, n: int) -> 'Region':
        return cls(range(n), n)

    @classmethod
    def empty(cls, n: int) -> 'Region':
        return cls((), n)

    @property
    def qubits(self) -> frozenset:
        return self._qubits

    @property
    def n(self) -> int:
        return self._n

    @property
    def indices(self) -> List[int]:
        return sorted(self._qubits)

    @property
    def mask(self) -> np.ndarray:
        mask = np.zeros(self._n, dtype=bool)
        mask[self.indices] = True
        return mask

    def complement(self) -> 'Region':
        return Region.from_mask(~self.mask, self._n)

    def union(self, other: 'Region') -> 'Region':
        return Region(self._qubits | other.qubits, self._n)

    def intersection(self, other: 'Region') -> 'Region':
        return Region(self._qubits & other.qubits, self._n)

    def difference(self, other: 'Region') -> 'Region':
        return Region(self._qubits - other.qubits, self._n)

    def isdisjoint(self, other: 'Region') -> bool:
        return self._qubits.isdisjoint(other.qubits)

    def __len__(self) -> int:
        return len(self._qubits)

    def __iter__(self) -> Iterator[int]:
        return iter(self.indices)

    def __contains__(self, qubit) -> bool:
        return qubit in self._qubits

    def __eq__(self, other):
        if not isinstance(other, Region):
            return NotImplemented
        return self._n == other._n and self._qubits == other._qubits

    def __hash__(self):
        return hash((self._n, self._qubits))

    def __repr__(self):
        return f'Region({self.indices}, n={self._n})'

    def to_dict(self) -> List[int]:
        return self.indices
