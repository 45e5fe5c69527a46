import logging
from typing import Dict, Optional, Tuple

import numpy as np

from gatebound.codes.lattice_geometry import InvalidGeometryException, LatticeGeometry
from gatebound.pauli import (SymplecticBasis, center, centralizer, row_reduce, symplectic_gram)
from gatebound.pauli import gf2
from gatebound.utils import KwargsException

_logger = logging.getLogger(__name__)


class InconsistentStabilizerException(KwargsException):
    """
    raised when the stabilizer group generated by the input contains -I
    """
    pass


class GeometryRequiredException(KwargsException):
    """
    raised when a geometry-dependent query is made on a code without a lattice geometry
    """
    pass


class NotCSSCodeException(KwargsException):
    """
    raised when a CSS-only operation is applied to a code that is not a CSS stabilizer code
    """
    pass


class SubsystemCode:
    """
    a subsystem code given by its gauge group. stabilizer codes are the case where the gauge group is abelian.

    use derive_structure to build one: it computes the stabilizer group (the center of the gauge group)
    and canonical bases of the bare logicals C(G)/S and the dressed logicals C(S)/G.
    """

    def __init__(self, *,
                 gauge: SymplecticBasis,
                 gauge_basis: SymplecticBasis,
                 stabilizer: SymplecticBasis,
                 bare_logicals: SymplecticBasis,
                 dressed_logicals: SymplecticBasis,
                 k: int,
                 geometry: Optional[LatticeGeometry] = None,
                 name: str = '',
                 metadata: Optional[Dict[str, str]] = None):
        self._gauge = gauge
        self._gauge_basis = gauge_basis
        self._stabilizer = stabilizer
        self._bare_logicals = bare_logicals
        self._dressed_logicals = dressed_logicals
        self._k = k
        self._geometry = geometry
        self._name = name
        self._metadata: Dict[str, str] = dict(metadata or {})

    @property
    def n(self) -> int:
        return self._gauge.n

    @property
    def k(self) -> int:
        return self._k

    @property
    def gauge(self) -> SymplecticBasis:
        """
        the gauge generators as given (signs kept)
        """
        return self._gauge

    @property
    def gauge_basis(self) -> SymplecticBasis:
        """
        an independent (row-reduced) basis of the gauge group
        """
        return self._gauge_basis

    @property
    def stabilizer(self) -> SymplecticBasis:
        return self._stabilizer

    @property
    def bare_logicals(self) -> SymplecticBasis:
        return self._bare_logicals

    @property
    def dressed_logicals(self) -> SymplecticBasis:
        return self._dressed_logicals

    @property
    def geometry(self) -> Optional[LatticeGeometry]:
        return self._geometry

    @property
    def name(self) -> str:
        return self._name

    @property
    def metadata(self) -> Dict[str, str]:
        return dict(self._metadata)

    @property
    def gauge_rank(self) -> int:
        return len(self._gauge_basis)

    @property
    def stabilizer_rank(self) -> int:
        return len(self._stabilizer)

    @property
    def gauge_qubits(self) -> int:
        return (self.gauge_rank - self.stabilizer_rank) // 2

    @property
    def is_stabilizer_code(self) -> bool:
        return self.gauge_rank == self.stabilizer_rank

    @property
    def is_css(self) -> bool:
        if not self.is_stabilizer_code:
            return False
        return all(not (row.x.any() and row.z.any()) for row in self._stabilizer)

    def require_geometry(self) -> LatticeGeometry:
        if self._geometry is None:
            raise GeometryRequiredException(f'Code {self._name or "<unnamed>"} has no lattice geometry')
        return self._geometry

    def css_parts(self) -> Tuple[np.ndarray, np.ndarray]:
        """
        the X-check matrix (x parts of the X-type stabilizers) and the Z-check matrix

        :return: (H_X, H_Z)
        """
        if not self.is_css:
            raise NotCSSCodeException(f'Code {self._name or "<unnamed>"} is not a CSS stabilizer code')
        x_rows = [row.x for row in self._stabilizer if row.x.any()]
        z_rows = [row.z for row in self._stabilizer if row.z.any()]
        return gf2.stack(x_rows, self.n), gf2.stack(z_rows, self.n)

    def permuted(self, permutation) -> 'SubsystemCode':
        """
        relabels the qubits: qubit i becomes permutation[i]
        """
        gauge = SymplecticBasis(self.n, [row.permuted(permutation) for row in self._gauge])
        geometry = self._geometry.permuted(permutation) if self._geometry is not None else None
        return derive_structure(gauge, geometry=geometry, name=self._name, metadata=self._metadata)

    def summary(self) -> dict:
        return {'name': self._name,
                'n': self.n,
                'k': self._k,
                'gauge_rank': self.gauge_rank,
                'stabilizer_rank': self.stabilizer_rank,
                'gauge_qubits': self.gauge_qubits,
                'stabilizer_code': self.is_stabilizer_code,
                'css': self.is_css,
                'geometry': self._geometry.to_dict() if self._geometry is not None else None}

    def __repr__(self):
        return f'SubsystemCode(name={self._name!r}, n={self.n}, k={self._k}, g={self.gauge_rank}, ' \
               f's={self.stabilizer_rank})'


def _check_sign_consistency(gauge: SymplecticBasis) -> None:
    for index, row in enumerate(gauge):
        if row.letter_phase % 2:
            raise InconsistentStabilizerException(f'Generator {index} ({row}) squares to -I',
                                                  generator=index)
    dependencies = gf2.row_reduce(gauge.matrix).left_kernel
    for dependency in dependencies:
        product = gauge.product(dependency)
        if product.phase != 0:
            members = [int(i) for i in np.flatnonzero(dependency)]
            raise InconsistentStabilizerException(f'Generators {members} multiply to -I',
                                                  generators=members)


def derive_structure(gauge: SymplecticBasis,
                     geometry: Optional[LatticeGeometry] = None,
                     *,
                     name: str = '',
                     metadata: Optional[Dict[str, str]] = None) -> SubsystemCode:
    """
    derives the stabilizer group, the logical bases and k from a list of gauge generators

    :param gauge: the gauge generators (signs matter for abelian gauge groups)
    :param geometry: optional lattice geometry. its generator supports are filled from the gauge generators
    :param name: a display name
    :param metadata: free-form key/value pairs kept with the code
    :return: the code
    """
    n = gauge.n
    gauge_basis, g = row_reduce(gauge)
    stabilizer = center(gauge_basis)
    s = len(stabilizer)
    if s == g:
        _check_sign_consistency(gauge)
        # the reduced gauge rows carry the exact signs of the stabilizer group
        stabilizer = gauge_basis
    if (g - s) % 2:
        raise InconsistentStabilizerException(f'Gauge rank {g} and stabilizer rank {s} differ by an odd number')

    bare = gf2.complement_basis(stabilizer.matrix, centralizer(gauge_basis).matrix)
    dressed = gf2.complement_basis(gauge_basis.matrix, centralizer(stabilizer).matrix)
    k = n - s - (g - s) // 2
    if bare.shape[0] != 2 * k or dressed.shape[0] != 2 * k:
        raise InconsistentStabilizerException(f'Logical bases of rank {bare.shape[0]}/{dressed.shape[0]} '
                                              f'do not match k={k}')
    if geometry is not None:
        if geometry.qubit_count != n:
            raise InvalidGeometryException(f'Geometry places {geometry.qubit_count} qubits, code has {n}')
        geometry = geometry.with_generator_supports([row.support for row in gauge])

    _logger.debug(f'Derived code {name or "<unnamed>"}: n={n} k={k} g={g} s={s}')
    return SubsystemCode(gauge=gauge,
                         gauge_basis=gauge_basis,
                         stabilizer=stabilizer,
                         bare_logicals=SymplecticBasis.from_matrix(n, bare, reduced=True),
                         dressed_logicals=SymplecticBasis.from_matrix(n, dressed, reduced=True),
                         k=k,
                         geometry=geometry,
                         name=name,
                         metadata=metadata)


def anticommutation_matrix(code: SubsystemCode, kind: str = 'bare') -> np.ndarray:
    basis = code.bare_logicals if kind == 'bare' else code.dressed_logicals
    return symplectic_gram(basis.matrix, basis.matrix, code.n)
