"""
constructors for the code families used throughout the package.

conventions (also listed in the docs):

* toric(L): horizontal edge (r, c) joins vertices (r, c)-(r, c+1) and is qubit ``2(rL+c)``; vertical
  edge (r, c) joins (r, c)-(r+1, c) and is qubit ``2(rL+c)+1``. both edges sit at coordinate (r, c).
* reed_muller(m): qubit j is the nonzero vector with binary expansion j+1 (bit i is coordinate i).
* bacon_shor(L): qubit (r, c) is ``rL+c``; gauge terms are horizontal XX and vertical ZZ.
* haah_cubic(L): two qubits per site (x, y, z), indices ``2(x + Ly + L^2 z) + q``.
"""
import itertools
from typing import Callable, Dict, List, Sequence, Tuple

import numpy as np

from gatebound.codes.lattice_geometry import LatticeGeometry
from gatebound.codes.subsystem_code import SubsystemCode, derive_structure
from gatebound.pauli import PauliOperator, SymplecticBasis
from gatebound.utils import KwargsException


class InvalidCodeParametersException(KwargsException):
    """
    raised when a family constructor gets parameters outside its range
    """
    pass


def _operator(n: int, qubits: Sequence[int], letter: str) -> PauliOperator:
    return PauliOperator.from_letters(n, [(q, letter) for q in qubits])


def _require(condition: bool, message: str, **kwargs) -> None:
    if not condition:
        raise InvalidCodeParametersException(message, **kwargs)


def toric_edge(L: int, r: int, c: int, vertical: bool) -> int:
    return 2 * ((r % L) * L + (c % L)) + int(vertical)


def build_toric(L: int) -> SubsystemCode:
    """
    the toric code on an L x L torus (k = 2)

    :param L: the linear size (at least 2)
    """
    _require(L >= 2, f'Toric code needs L >= 2, got {L}', L=L)
    n = 2 * L * L
    generators: List[PauliOperator] = []
    for r in range(L):
        for c in range(L):
            star = [toric_edge(L, r, c, False), toric_edge(L, r, c - 1, False),
                    toric_edge(L, r, c, True), toric_edge(L, r - 1, c, True)]
            generators.append(_operator(n, star, 'X'))
    for r in range(L):
        for c in range(L):
            plaquette = [toric_edge(L, r, c, False), toric_edge(L, r + 1, c, False),
                         toric_edge(L, r, c, True), toric_edge(L, r, c + 1, True)]
            generators.append(_operator(n, plaquette, 'Z'))
    coords = [(r, c) for r in range(L) for c in range(L) for _ in range(2)]
    geometry = LatticeGeometry(dimension=2, size=L, coords=coords, periodic=[True, True], xi=2)
    return derive_structure(SymplecticBasis(n, generators), geometry,
                            name=f'toric-{L}', metadata={'family': 'toric', 'param': str(L)})


def build_reed_muller(m: int) -> SubsystemCode:
    """
    the quantum Reed-Muller code [[2^m - 1, 1, 3]] (m = 3 is the Steane code)

    :param m: at least 3
    """
    _require(m >= 3, f'Reed-Muller code needs m >= 3, got {m}', m=m)
    n = 2 ** m - 1
    points = np.array([[((j + 1) >> i) & 1 for i in range(m)] for j in range(n)], dtype=np.uint8)
    generators: List[PauliOperator] = []
    for i in range(m):
        generators.append(_operator(n, np.flatnonzero(points[:, i]).tolist(), 'X'))
    for degree in range(1, m - 1):
        for monomial in itertools.combinations(range(m), degree):
            rows = np.flatnonzero(points[:, list(monomial)].all(axis=1)).tolist()
            generators.append(_operator(n, rows, 'Z'))
    name = 'steane' if m == 3 else f'reed-muller-{m}'
    return derive_structure(SymplecticBasis(n, generators), name=name,
                            metadata={'family': 'reed-muller', 'param': str(m)})


def build_bacon_shor(L: int) -> SubsystemCode:
    """
    the L x L Bacon-Shor subsystem code with open boundaries (k = 1)

    :param L: at least 2
    """
    _require(L >= 2, f'Bacon-Shor code needs L >= 2, got {L}', L=L)
    n = L * L
    generators: List[PauliOperator] = []
    for r in range(L):
        for c in range(L - 1):
            generators.append(_operator(n, [r * L + c, r * L + c + 1], 'X'))
    for r in range(L - 1):
        for c in range(L):
            generators.append(_operator(n, [r * L + c, (r + 1) * L + c], 'Z'))
    coords = [(r, c) for r in range(L) for c in range(L)]
    geometry = LatticeGeometry(dimension=2, size=L, coords=coords, periodic=[False, False], xi=1)
    return derive_structure(SymplecticBasis(n, generators), geometry,
                            name=f'bacon-shor-{L}', metadata={'family': 'bacon-shor', 'param': str(L)})


HAAH_X_OFFSETS: Tuple[Tuple[Tuple[int, int, int], ...], ...] = (
    ((0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)),
    ((0, 0, 0), (1, 1, 0), (0, 1, 1), (1, 0, 1)),
)
HAAH_Z_OFFSETS: Tuple[Tuple[Tuple[int, int, int], ...], ...] = (
    ((1, 1, 1), (0, 0, 1), (1, 0, 0), (0, 1, 0)),
    ((1, 1, 1), (0, 1, 1), (1, 0, 1), (1, 1, 0)),
)


def haah_qubit(L: int, x: int, y: int, z: int, q: int) -> int:
    return 2 * ((x % L) + L * (y % L) + L * L * (z % L)) + q


def build_haah_cubic(L: int) -> SubsystemCode:
    """
    Haah's cubic code on an L x L x L periodic lattice, one X and one Z cube term per site

    :param L: at least 2
    """
    _require(L >= 2, f'Cubic code needs L >= 2, got {L}', L=L)
    n = 2 * L ** 3
    generators: List[PauliOperator] = []
    for offsets, letter in ((HAAH_X_OFFSETS, 'X'), (HAAH_Z_OFFSETS, 'Z')):
        for z, y, x in itertools.product(range(L), repeat=3):
            qubits = [haah_qubit(L, x + dx, y + dy, z + dz, q)
                      for q, corners in enumerate(offsets) for dx, dy, dz in corners]
            generators.append(_operator(n, qubits, letter))
    coords = [(x, y, z) for z in range(L) for y in range(L) for x in range(L) for _ in range(2)]
    geometry = LatticeGeometry(dimension=3, size=L, coords=coords, periodic=[True, True, True], xi=2)
    return derive_structure(SymplecticBasis(n, generators), geometry,
                            name=f'haah-{L}', metadata={'family': 'haah', 'param': str(L)})


_FAMILIES: Dict[str, Callable[[int], SubsystemCode]] = {
    'toric': build_toric,
    'reed-muller': build_reed_muller,
    'bacon-shor': build_bacon_shor,
    'haah': build_haah_cubic,
}

_ALIASES: Dict[str, Tuple[str, int]] = {
    'steane': ('reed-muller', 3),
    'rm15': ('reed-muller', 4),
}


def family_names() -> List[str]:
    return sorted(_FAMILIES) + sorted(_ALIASES)


def build_code(family: str, param: int = 0) -> SubsystemCode:
    """
    builds a code from the family registry

    :param family: one of the family names, or an alias ('steane', 'rm15') that fixes the parameter
    :param param: the family parameter (ignored for aliases)
    """
    key = family.lower()
    if key in _ALIASES:
        key, param = _ALIASES[key]
    if key not in _FAMILIES:
        raise InvalidCodeParametersException(f'Unknown code family {family!r}. known: {family_names()}',
                                             family=family)
    return _FAMILIES[key](param)
