import itertools
from typing import Iterable, Sequence, Tuple

import numpy as np

from gatebound.utils import KwargsException


class InvalidGeometryException(KwargsException):
    """
    raised when coordinates or generator supports violate the declared lattice
    """
    pass


class LatticeGeometry:
    """
    the placement of the qubits of a code on a D-dimensional lattice of linear size L.

    distances use the Chebyshev metric, wrapping around on periodic axes.
    """

    def __init__(self, *,
                 dimension: int,
                 size: int,
                 coords,
                 periodic: Sequence[bool],
                 xi: int,
                 generator_supports: Iterable[Iterable[int]] = ()):
        """
        :param dimension: the lattice dimension D
        :param size: the linear size L
        :param coords: an (n x D) integer array with the coordinate of each qubit
        :param periodic: per-axis periodicity flags
        :param xi: the declared bound on the diameter of every generator support
        :param generator_supports: the supports (qubit sets) of the local generators
        """
        coords_array = np.array(coords, dtype=np.int64).reshape(-1, dimension)
        if dimension < 1 or size < 1:
            raise InvalidGeometryException(f'Bad lattice shape D={dimension} L={size}',
                                           dimension=dimension, size=size)
        if len(periodic) != dimension:
            raise InvalidGeometryException(f'Expected {dimension} periodicity flags, got {len(periodic)}')
        if coords_array.size and (coords_array.min() < 0 or coords_array.max() >= size):
            raise InvalidGeometryException(f'Coordinates must lie in [0, {size})', size=size)
        coords_array.setflags(write=False)
        self._dimension = dimension
        self._size = size
        self._coords = coords_array
        self._periodic: Tuple[bool, ...] = tuple(bool(p) for p in periodic)
        self._xi = xi
        self._generator_supports: Tuple[frozenset, ...] = tuple(frozenset(int(q) for q in s)
                                                                for s in generator_supports)
        for index, support in enumerate(self._generator_supports):
            diameter = self.diameter(support)
            if diameter > xi:
                raise InvalidGeometryException(f'Generator {index} has diameter {diameter} > xi={xi}',
                                               generator=index, diameter=diameter, xi=xi)

    @classmethod
    def hypercubic(cls, dimension: int, size: int, *, periodic: bool = True, xi: int = 1) -> 'LatticeGeometry':
        """
        a geometry with one point per lattice site, in lexicographic order (last axis fastest)
        """
        coords = list(itertools.product(range(size), repeat=dimension))
        return cls(dimension=dimension, size=size, coords=coords, periodic=[periodic] * dimension, xi=xi)

    @property
    def dimension(self) -> int:
        return self._dimension

    @property
    def size(self) -> int:
        return self._size

    @property
    def coords(self) -> np.ndarray:
        return self._coords

    @property
    def periodic(self) -> Tuple[bool, ...]:
        return self._periodic

    @property
    def xi(self) -> int:
        return self._xi

    @property
    def qubit_count(self) -> int:
        return int(self._coords.shape[0])

    @property
    def generator_supports(self) -> Tuple[frozenset, ...]:
        return self._generator_supports

    def with_generator_supports(self, supports: Iterable[Iterable[int]]) -> 'LatticeGeometry':
        return LatticeGeometry(dimension=self._dimension, size=self._size, coords=self._coords,
                               periodic=self._periodic, xi=self._xi, generator_supports=supports)

    def permuted(self, permutation) -> 'LatticeGeometry':
        permutation = np.asarray(permutation)
        coords = np.zeros_like(self._coords)
        coords[permutation] = self._coords
        supports = [[int(permutation[q]) for q in s] for s in self._generator_supports]
        return LatticeGeometry(dimension=self._dimension, size=self._size, coords=coords,
                               periodic=self._periodic, xi=self._xi, generator_supports=supports)

    def axis_offsets(self, a, b) -> np.ndarray:
        """
        per-axis distances between coordinate arrays (broadcasting), wrapped on periodic axes
        """
        delta = np.abs(np.asarray(a, dtype=np.int64) - np.asarray(b, dtype=np.int64))
        wrapped = np.minimum(delta, self._size - delta)
        return np.where(np.array(self._periodic), wrapped, delta)

    def point_distance(self, a, b) -> int:
        return int(self.axis_offsets(a, b).max(initial=0))

    def distance(self, qubit_a: int, qubit_b: int) -> int:
        return self.point_distance(self._coords[qubit_a], self._coords[qubit_b])

    def diameter(self, qubits: Iterable[int]) -> int:
        """
        the largest distance between two qubits of the set (0 for fewer than two qubits)
        """
        points = self._coords[sorted(qubits)]
        if points.shape[0] < 2:
            return 0
        offsets = self.axis_offsets(points[:, None, :], points[None, :, :])
        return int(offsets.max())

    def qubits_at(self, point: Sequence[int]) -> np.ndarray:
        return np.flatnonzero((self._coords == np.asarray(point)).all(axis=1))

    def to_dict(self) -> dict:
        return {'D': self._dimension, 'L': self._size, 'periodic': list(self._periodic), 'xi': self._xi}
