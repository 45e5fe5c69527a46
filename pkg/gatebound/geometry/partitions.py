"""
partitions of the lattice into regions R0, R_1..R_m used to bound the level of logical gates.

three constructions are provided:

* ``fattened_tiling``: the m-dimensional skeleton of a hyper-cubic tiling, fattened, gives R_m.
* ``tube_partition``: families of parallel q-dimensional slabs, one orientation per family.
* ``skewed_tiling_from_balls``: a tiling whose corners are anchored on correctable balls
  (see ``gatebound.geometry.random_cells``).
"""
import itertools
import logging
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Dict, List, Optional, Sequence

import networkx as nx
import numpy as np

from gatebound.codes import LatticeGeometry, Region
from gatebound.geometry.neighborhoods import dilate_points, qubits_on_sites
from gatebound.utils import KwargsException

if TYPE_CHECKING:
    from gatebound.geometry.random_cells import CellRegionResult

_logger = logging.getLogger(__name__)


class InvalidPartitionParametersException(KwargsException):
    """
    raised for tile sizes, widths or slab dimensions that the lattice cannot accommodate
    """
    pass


@dataclass
class Partition:
    """
    :param r0: the region that must be correctable (bare-cleanable)
    :param regions: R_1..R_m, each of which (grown by the circuit spread) must be dressed-cleanable
    :param metadata: how the partition was built
    """
    r0: Region
    regions: List[Region]
    metadata: Dict = field(default_factory=dict)

    @property
    def n(self) -> int:
        return self.r0.n

    def covers(self) -> bool:
        covered = set(self.r0.qubits)
        for region in self.regions:
            covered.update(region.qubits)
        return len(covered) == self.n

    def with_empty_bare_region(self) -> 'Partition':
        """
        the variant with R0 = {}, where the former R0 becomes the first dressed region
        """
        return Partition(Region.empty(self.n), [self.r0] + list(self.regions),
                         dict(self.metadata, bare_region='empty'))

    def to_dict(self) -> dict:
        return {'n': self.n,
                'r0': self.r0.indices,
                'regions': [region.indices for region in self.regions],
                'metadata': self.metadata}

    @classmethod
    def from_dict(cls, data: dict) -> 'Partition':
        n = int(data['n'])
        return cls(Region(data.get('r0', []), n),
                   [Region(region, n) for region in data.get('regions', [])],
                   dict(data.get('metadata', {})))


def _site_graph(geometry: LatticeGeometry) -> nx.Graph:
    # grid_graph lists the axes in reverse order in its node tuples
    graph = nx.grid_graph(dim=[geometry.size] * geometry.dimension, periodic=list(geometry.periodic))
    if geometry.dimension == 1:
        graph = nx.relabel_nodes(graph, {node: (node,) for node in graph.nodes})
    return graph


def component_count(geometry: LatticeGeometry, grid: np.ndarray) -> int:
    """
    the number of nearest-neighbor connected components of the marked sites
    """
    sites = [tuple(reversed(point)) for point in np.argwhere(grid).tolist()]
    if not sites:
        return 0
    graph = _site_graph(geometry)
    return nx.number_connected_components(graph.subgraph(sites))


def _boundary_distances(geometry: LatticeGeometry, tile: int) -> List[np.ndarray]:
    """
    for each axis, the distance of every coordinate to the nearest tile boundary
    """
    size = geometry.size
    tiles = size // tile
    coordinate = np.arange(size)
    distances = []
    for periodic in geometry.periodic:
        boundaries = [index * tile for index in range(0 if periodic else 1, tiles)]
        if not boundaries:
            distances.append(np.full(size, size + 1))
            continue
        offsets = np.abs(coordinate[:, None] - np.array(boundaries)[None, :])
        if periodic:
            offsets = np.minimum(offsets, size - offsets)
        distances.append(offsets.min(axis=1))
    return distances


def _default_widths(geometry: LatticeGeometry) -> List[int]:
    # every fattened object is 2 xi + 1 sites thick
    return [geometry.xi] * geometry.dimension


def _regions_from_labels(geometry: LatticeGeometry, labels: np.ndarray) -> List[Region]:
    n = geometry.qubit_count
    return [Region(qubits_on_sites(geometry, labels == m), n) for m in range(geometry.dimension + 1)]


def fattened_tiling(geometry: LatticeGeometry, tile: int, widths: Optional[Sequence[int]] = None) -> Partition:
    """
    the fattened skeleton partition of a hyper-cubic tiling with tiles of side ``tile``.

    a site belongs to the fattened m-skeleton when at least D-m of its coordinates are within widths[m]
    of a tile boundary, so the fattened objects are 2 widths[m] + 1 sites thick. it is assigned to the smallest
    such m, and to R_D when there is none.

    :param geometry: the lattice
    :param tile: the tile side t (the last tile absorbs the remainder when t does not divide L)
    :param widths: the fattening width of each skeleton dimension m = 0..D-1 (default xi for every m)
    """
    dimension = geometry.dimension
    widths = list(widths) if widths is not None else _default_widths(geometry)
    if len(widths) != dimension:
        raise InvalidPartitionParametersException(f'Expected {dimension} widths, got {len(widths)}',
                                                  widths=widths)
    if min(widths) < 0 or tile <= 2 * max(widths) + 1:
        raise InvalidPartitionParametersException(f'Tile {tile} is too small for widths {widths}',
                                                  tile=tile, widths=widths)
    if tile > geometry.size:
        raise InvalidPartitionParametersException(f'Tile {tile} is larger than the lattice ({geometry.size})',
                                                  tile=tile, size=geometry.size)

    distances = np.meshgrid(*_boundary_distances(geometry, tile), indexing='ij')
    labels = np.full((geometry.size,) * dimension, dimension, dtype=np.int64)
    for m in reversed(range(dimension)):
        near = sum((distance <= widths[m]).astype(np.int64) for distance in distances)
        labels[near >= dimension - m] = m
    regions = _regions_from_labels(geometry, labels)
    components = [component_count(geometry, labels == m) for m in range(dimension + 1)]
    _logger.debug(f'Fattened tiling t={tile} widths={widths}: components {components}')
    return Partition(regions[0], regions[1:],
                     {'scheme': 'tiling', 'tile': tile, 'widths': widths, 'components': components})


def tube_partition(geometry: LatticeGeometry, q: int, width: int = 1) -> Partition:
    """
    D-q+1 families of parallel q-dimensional slabs.

    family j is made of slabs extending along the axes j..j+q-1. splitting the remaining (cross) axes into
    blocks of ``width`` sites, a slab belongs to family j when the parities of its cross blocks sum to an
    even number. sites left uncovered are added to the last family by whole slabs.

    :param geometry: the lattice
    :param q: the slab dimension, 1 <= q <= D
    :param width: the block width of the cross axes
    """
    dimension = geometry.dimension
    if not 1 <= q <= dimension:
        raise InvalidPartitionParametersException(f'Slab dimension {q} is not in [1, {dimension}]', q=q)
    if width < 1:
        raise InvalidPartitionParametersException(f'Width must be positive, got {width}', width=width)

    grids = np.meshgrid(*([np.arange(geometry.size)] * dimension), indexing='ij')
    parities = [(grid // width) % 2 for grid in grids]
    families = []
    for j in range(dimension - q + 1):
        cross = [axis for axis in range(dimension) if not j <= axis < j + q]
        families.append(sum((parities[axis] for axis in cross), np.zeros_like(parities[0])) % 2 == 0)

    uncovered = ~np.logical_or.reduce(families)
    if uncovered.any():
        # membership of the last family depends only on its cross axes, so extend along its long axes
        long_axes = tuple(range(dimension - q, dimension))
        families[-1] |= uncovered.any(axis=long_axes, keepdims=True)

    n = geometry.qubit_count
    regions = [Region(qubits_on_sites(geometry, family), n) for family in families]
    return Partition(regions[0], regions[1:],
                     {'scheme': 'tubes', 'q': q, 'width': width,
                      'orientations': [list(range(j, j + q)) for j in range(dimension - q + 1)]})


def _cell_corners(cell_grid: Sequence[int]) -> List[tuple]:
    return list(itertools.product(*[range(count) for count in cell_grid]))


def skewed_tiling_from_balls(geometry: LatticeGeometry,
                             cell_result: "CellRegionResult",
                             widths: Optional[Sequence[int]] = None) -> Partition:
    """
    a skewed tiling whose corners are the balls of a random-cell region.

    R0 is the union of the balls. the m-skeleton (1 <= m < D) joins the ball centers of each m-face of the
    cell grid by rounded multilinear interpolation, fattened by widths[m]. R_D is the rest.

    :param geometry: the lattice
    :param cell_result: a successful ``CellRegionResult``
    :param widths: the fattening width of each skeleton dimension m = 0..D-1 (default xi for every m)
    """
    dimension = geometry.dimension
    size = geometry.size
    widths = list(widths) if widths is not None else _default_widths(geometry)
    if len(widths) != dimension:
        raise InvalidPartitionParametersException(f'Expected {dimension} widths, got {len(widths)}',
                                                  widths=widths)
    if cell_result.failed_cells:
        raise InvalidPartitionParametersException(f'{len(cell_result.failed_cells)} cells have no ball',
                                                  failed_cells=cell_result.failed_cells)

    cell_grid = cell_result.cell_grid
    centers = {tuple(cell): np.asarray(center) for cell, center in cell_result.balls.items()}
    n = geometry.qubit_count
    r0 = cell_result.region
    assigned = np.zeros((size,) * dimension, dtype=bool)
    assigned[tuple(geometry.coords[r0.indices].T)] = True

    regions: List[Region] = []
    for m in range(1, dimension):
        skeleton = np.zeros_like(assigned)
        for corner in _cell_corners(cell_grid):
            for axes in itertools.combinations(range(dimension), m):
                _draw_face(skeleton, geometry, centers, cell_grid, corner, axes)
        fattened = dilate_points(geometry, skeleton, widths[m]) & ~assigned
        regions.append(Region(qubits_on_sites(geometry, fattened), n))
        assigned |= fattened
    regions.append(Region(qubits_on_sites(geometry, ~assigned), n))
    return Partition(r0, regions, {'scheme': 'skewed', 'cell_side': cell_result.cell_side,
                                   'cell_grid': list(cell_grid), 'widths': widths})


def _draw_face(skeleton: np.ndarray,
               geometry: LatticeGeometry,
               centers: Dict[tuple, np.ndarray],
               cell_grid: Sequence[int],
               corner: tuple,
               axes: Sequence[int]) -> None:
    size = geometry.size
    vertices = {}
    for offsets in itertools.product((0, 1), repeat=len(axes)):
        index = list(corner)
        shift = np.zeros(geometry.dimension, dtype=np.int64)
        for axis, offset in zip(axes, offsets):
            index[axis] += offset
            if index[axis] >= cell_grid[axis]:
                if not geometry.periodic[axis]:
                    return
                index[axis] -= cell_grid[axis]
                shift[axis] = size
        vertices[offsets] = centers[tuple(index)] + shift

    # enough samples per direction to leave no gaps between rounded points
    extent = max(int(np.ptp(np.array(list(vertices.values())), axis=0).max()), 1)
    steps = [np.linspace(0.0, 1.0, 2 * extent + 1)] * len(axes)
    for weights in itertools.product(*steps):
        point = np.zeros(geometry.dimension)
        for offsets, vertex in vertices.items():
            coefficient = 1.0
            for weight, offset in zip(weights, offsets):
                coefficient *= weight if offset else 1.0 - weight
            point += coefficient * vertex
        site = np.rint(point).astype(np.int64)
        skeleton[tuple(site % size)] = True
