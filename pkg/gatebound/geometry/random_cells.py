import itertools
import logging
import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import numpy as np

from gatebound.codes import LatticeGeometry, Region
from gatebound.geometry.neighborhoods import ball
from gatebound.geometry.partitions import InvalidPartitionParametersException

_logger = logging.getLogger(__name__)

Cell = Tuple[int, ...]
Point = Tuple[int, ...]


@dataclass
class CellRegionResult:
    """
    :param region: the union of the chosen balls (R0)
    :param balls: the center of the ball chosen in each cell
    :param failed_cells: the cells where no ball fits inside the lost region
    :param cell_side: the nominal side of a cell
    :param cell_grid: the number of cells along each axis
    :param loss: the sampled lost region
    """
    region: Region
    balls: Dict[Cell, Point]
    failed_cells: List[Cell]
    cell_side: int
    cell_grid: Tuple[int, ...]
    radius: int
    loss: Optional[Region] = field(default=None, repr=False)

    @property
    def succeeded(self) -> bool:
        return not self.failed_cells

    def to_dict(self) -> dict:
        return {'succeeded': self.succeeded,
                'cell_side': self.cell_side,
                'cell_grid': list(self.cell_grid),
                'radius': self.radius,
                'balls': [{'cell': list(cell), 'center': list(center)} for cell, center in self.balls.items()],
                'failed_cells': [list(cell) for cell in self.failed_cells],
                'region': self.region.indices}


def cell_side(geometry: LatticeGeometry, radius: int, cell_constant: float) -> int:
    """
    max(ceil((c ln n)^(1/D)), 2r + xi + 1): cells hold about c ln n sites, and balls in neighboring cells
    can always be far enough apart
    """
    volume = cell_constant * math.log(max(geometry.qubit_count, 2))
    side = math.ceil(volume ** (1.0 / geometry.dimension))
    return min(max(side, 2 * radius + geometry.xi + 1), geometry.size)


def _cell_bounds(size: int, side: int) -> List[Tuple[int, int]]:
    count = max(size // side, 1)
    bounds = [(index * side, (index + 1) * side) for index in range(count)]
    bounds[-1] = (bounds[-1][0], size)
    return bounds


def _candidates(bounds: List[Tuple[int, int]]) -> List[Point]:
    center = np.array([lo + (hi - lo - 1) // 2 for lo, hi in bounds])
    points = list(itertools.product(*[range(lo, hi) for lo, hi in bounds]))
    return sorted(points, key=lambda point: (int(np.abs(np.array(point) - center).max()), point))


def random_cell_region(geometry: LatticeGeometry,
                       p0: float,
                       radius: int,
                       cell_constant: float,
                       rng: np.random.Generator) -> CellRegionResult:
    """
    samples a lost region at rate p0, splits the lattice into cells, and picks in each cell one ball of
    the given radius lying entirely in the lost region.

    balls are chosen greedily, closest to the cell center first, and kept more than xi apart from each other.
    a cell without such a ball is reported in ``failed_cells``; the caller owns the retry policy.

    :param geometry: the lattice
    :param p0: the loss rate, in [0, 1]
    :param radius: the ball radius r (at least xi)
    :param cell_constant: c, where cells hold about c ln n sites
    :param rng: the random generator
    """
    if not 0.0 <= p0 <= 1.0:
        raise InvalidPartitionParametersException(f'Loss rate must be in [0, 1], got {p0}', p0=p0)
    if radius < geometry.xi:
        raise InvalidPartitionParametersException(f'Ball radius {radius} is smaller than xi={geometry.xi}',
                                                  radius=radius, xi=geometry.xi)
    if cell_constant <= 0:
        raise InvalidPartitionParametersException(f'Cell constant must be positive, got {cell_constant}')

    n = geometry.qubit_count
    lost = rng.random(n) < p0
    side = cell_side(geometry, radius, cell_constant)
    axis_bounds = _cell_bounds(geometry.size, side)
    cell_grid = (len(axis_bounds),) * geometry.dimension
    separation = 2 * radius + geometry.xi

    balls: Dict[Cell, Point] = {}
    failed: List[Cell] = []
    chosen = Region.empty(n)
    for cell in itertools.product(*[range(count) for count in cell_grid]):
        for center in _candidates([axis_bounds[index] for index in cell]):
            if any(geometry.point_distance(center, other) <= separation for other in balls.values()):
                continue
            qubits = ball(geometry, center, radius)
            if len(qubits) and lost[qubits.indices].all():
                balls[cell] = center
                chosen = chosen.union(qubits)
                break
        else:
            failed.append(cell)

    if failed:
        _logger.info(f'{len(failed)} of {len(balls) + len(failed)} cells have no lost ball of radius {radius}')
    return CellRegionResult(region=chosen, balls=balls, failed_cells=failed, cell_side=side,
                            cell_grid=cell_grid, radius=radius, loss=Region.from_mask(lost, n))
