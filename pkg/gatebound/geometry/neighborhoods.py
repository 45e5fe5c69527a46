from typing import Iterable, Sequence, Tuple, Union

import numpy as np
from scipy import ndimage

from gatebound.codes import LatticeGeometry, Region


def _filter_shape(geometry: LatticeGeometry, radius: int) -> Tuple[Tuple[int, ...], Tuple[str, ...]]:
    sizes = []
    modes = []
    for periodic in geometry.periodic:
        if periodic:
            sizes.append(min(2 * radius + 1, geometry.size))
            modes.append('wrap')
        else:
            sizes.append(min(2 * radius + 1, 2 * geometry.size - 1))
            modes.append('constant')
    return tuple(sizes), tuple(modes)


def dilate_points(geometry: LatticeGeometry, grid: np.ndarray, radius: int) -> np.ndarray:
    """
    dilates a boolean site grid by a Chebyshev ball of the given radius
    """
    if radius <= 0:
        return grid.astype(bool)
    sizes, modes = _filter_shape(geometry, radius)
    return ndimage.maximum_filter(grid.astype(np.uint8), size=sizes, mode=modes).astype(bool)


def site_grid(geometry: LatticeGeometry, qubits: Iterable[int]) -> np.ndarray:
    """
    a boolean (L,)*D grid marking the sites of the given qubits
    """
    grid = np.zeros((geometry.size,) * geometry.dimension, dtype=bool)
    indices = sorted(qubits)
    if indices:
        grid[tuple(geometry.coords[indices].T)] = True
    return grid


def qubits_on_sites(geometry: LatticeGeometry, grid: np.ndarray) -> np.ndarray:
    return np.flatnonzero(grid[tuple(geometry.coords.T)])


def neighborhood(geometry: LatticeGeometry, region: Union[Region, Iterable[int]], radius: int) -> Region:
    """
    B(R, r): every qubit whose site is within Chebyshev distance r of a site of R, and R itself for r = 0

    :param geometry: the lattice geometry
    :param region: the region R
    :param radius: r >= 0
    """
    if radius < 0:
        raise ValueError(f'radius must be non negative, got {radius}')
    qubits = region.qubits if isinstance(region, Region) else frozenset(region)
    if radius == 0:
        # co-sited qubits are not part of B(R, 0)
        return Region(qubits, geometry.qubit_count)
    grid = dilate_points(geometry, site_grid(geometry, qubits), radius)
    return Region(qubits_on_sites(geometry, grid), geometry.qubit_count)


def ball(geometry: LatticeGeometry, point: Sequence[int], radius: int) -> Region:
    """
    the qubits whose sites are within distance r of a lattice point
    """
    grid = np.zeros((geometry.size,) * geometry.dimension, dtype=bool)
    grid[tuple(int(c) % geometry.size for c in point)] = True
    return Region(qubits_on_sites(geometry, dilate_points(geometry, grid, radius)), geometry.qubit_count)
