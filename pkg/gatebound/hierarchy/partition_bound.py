import itertools
import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from gatebound.cleaning import BARE, DRESSED, count_bare, count_dressed
from gatebound.codes import Region, SubsystemCode
from gatebound.geometry.neighborhoods import neighborhood
from gatebound.geometry.partitions import Partition
from gatebound.logical_search import find_logical_in_region, string_tube
from gatebound.pauli import PauliOperator
from gatebound.utils import KwargsException

_logger = logging.getLogger(__name__)


class NonCoveringPartitionException(KwargsException):
    """
    raised when the regions of a partition leave qubits uncovered
    """
    pass


@dataclass(frozen=True)
class RegionFailure:
    """
    a region that failed its cleanability precondition

    :param index: 0 for R0, j for R_j
    :param role: 'bare' (R0 must be bare-cleanable) or 'dressed' (the grown R_j must be dressed-cleanable)
    :param size: the size of the region that was checked (after growing)
    :param logical_count: the number of independent logicals the region supports
    :param witness: one such logical
    """
    index: int
    role: str
    size: int
    logical_count: int
    witness: Optional[PauliOperator]

    def to_dict(self) -> dict:
        return {'index': self.index, 'role': self.role, 'size': self.size,
                'logical_count': self.logical_count,
                'witness': str(self.witness) if self.witness is not None else None}


@dataclass
class LevelBoundReport:
    """
    :param bound: m (every logical gate implementable with the given spread is in the m-th level),
    or None when a precondition failed
    :param failures: the regions that failed
    """
    bound: Optional[int]
    region_count: int
    spread: int
    failures: List[RegionFailure] = field(default_factory=list)

    @property
    def succeeded(self) -> bool:
        return self.bound is not None

    def to_dict(self) -> dict:
        return {'bound': self.bound, 'region_count': self.region_count, 'spread': self.spread,
                'failures': [failure.to_dict() for failure in self.failures]}


def check_covering(n: int, r0: Region, regions: Sequence[Region]) -> None:
    covered = set(r0.qubits)
    for region in regions:
        covered.update(region.qubits)
    if len(covered) != n:
        missing = sorted(set(range(n)) - covered)
        raise NonCoveringPartitionException(f'{len(missing)} qubits are not covered, e.g. {missing[:10]}',
                                            missing=missing)


def level_bound_from_partition(code: SubsystemCode,
                               r0: Region,
                               regions: Sequence[Region],
                               spread: int = 0) -> LevelBoundReport:
    """
    bounds the hierarchy level of logical gates from a covering R0, R_1..R_m of the qubits.

    R0 must be bare-cleanable (correctable), and each R_j grown by 2^(j-1) * spread must be dressed-cleanable;
    then every logical gate implemented by a circuit of that spread is in the m-th level.

    :param code: the code
    :param r0: the region that must be correctable (may be empty)
    :param regions: R_1..R_m
    :param spread: the spread of the circuit (0 for transversal gates); positive spreads need geometry
    :return: the report (failures are reported, not raised)
    """
    check_covering(code.n, r0, regions)
    geometry = code.require_geometry() if spread > 0 else None
    report = LevelBoundReport(bound=None, region_count=len(regions), spread=spread)

    dressed_count = count_dressed(code, r0)
    if dressed_count:
        report.failures.append(RegionFailure(index=0, role=BARE, size=len(r0), logical_count=dressed_count,
                                             witness=find_logical_in_region(code, r0, DRESSED)))
    for j, region in enumerate(regions, start=1):
        grown = neighborhood(geometry, region, (1 << (j - 1)) * spread) if geometry is not None else region
        bare_count = count_bare(code, grown)
        if bare_count:
            report.failures.append(RegionFailure(index=j, role=DRESSED, size=len(grown), logical_count=bare_count,
                                                 witness=find_logical_in_region(code, grown, BARE)))
    if not report.failures:
        report.bound = len(regions)
    else:
        _logger.info(f'Partition preconditions failed on regions {[f.index for f in report.failures]}')
    return report


class TubeSearchTooLargeException(KwargsException):
    """
    raised when a lattice has too many lines per axis to enumerate families of them
    """
    pass


MAX_TUBE_SEARCH_LINES = 16

LineFamily = FrozenSet[Tuple[int, ...]]


@dataclass
class TubeCoverReport:
    """
    :param families: for each axis, the maximal sets of parallel lines (by cross-section offset) whose union is
    bare-cleanable
    :param partition: one family per axis jointly covering the lattice, or None when no such choice exists
    """
    families: List[List[LineFamily]]
    partition: Optional[Partition] = None

    @property
    def found(self) -> bool:
        return self.partition is not None

    def to_dict(self) -> dict:
        return {'found': self.found,
                'families': [[[list(offset) for offset in sorted(family)] for family in axis_families]
                             for axis_families in self.families],
                'partition': self.partition.to_dict() if self.partition is not None else None}


def _family_region(lines: Dict[Tuple[int, ...], Region], family: LineFamily, n: int) -> Region:
    region = Region.empty(n)
    for offset in family:
        region = region.union(lines[offset])
    return region


def _maximal_cleanable_families(code: SubsystemCode, lines: Dict[Tuple[int, ...], Region]) -> List[LineFamily]:
    offsets = sorted(lines)

    # a family is only tried when every family one line smaller is cleanable
    cleanable = {frozenset()}
    frontier: List[LineFamily] = [frozenset()]
    while frontier:
        grown = []
        for family in frontier:
            start = offsets.index(max(family)) + 1 if family else 0
            for offset in offsets[start:]:
                candidate = family | {offset}
                if any(candidate - {line} not in cleanable for line in family):
                    continue
                if count_dressed(code, _family_region(lines, candidate, code.n)) == 0:
                    cleanable.add(candidate)
                    grown.append(candidate)
        frontier = grown

    maximal = [family for family in cleanable
               if not any(family | {offset} in cleanable for offset in offsets if offset not in family)]
    return sorted(maximal, key=sorted)


def search_tube_cover(code: SubsystemCode) -> TubeCoverReport:
    """
    exhaustively looks for a covering of the lattice by D families of full-length parallel lines, one family per
    axis, such that every family is bare-cleanable. when one exists, the partition it gives bounds logical gates
    to the level D-1.

    only small lattices can be searched: the number of lines per axis is bounded by MAX_TUBE_SEARCH_LINES.

    :param code: a code with geometry
    """
    geometry = code.require_geometry()
    line_count = geometry.size ** (geometry.dimension - 1)
    if line_count > MAX_TUBE_SEARCH_LINES:
        raise TubeSearchTooLargeException(f'{line_count} lines per axis is too many to enumerate '
                                          f'(at most {MAX_TUBE_SEARCH_LINES})',
                                          line_count=line_count)

    offsets = list(itertools.product(range(geometry.size), repeat=geometry.dimension - 1))
    lines = [{offset: string_tube(code, axis, offset, 1) for offset in offsets} for axis in range(geometry.dimension)]
    families = [_maximal_cleanable_families(code, axis_lines) for axis_lines in lines]
    report = TubeCoverReport(families=families)
    regions = [[_family_region(lines[axis], family, code.n) for family in families[axis]]
               for axis in range(geometry.dimension)]
    masks = [[sum(1 << q for q in region.qubits) for region in axis_regions] for axis_regions in regions]
    full = (1 << code.n) - 1
    for choice in itertools.product(*[range(len(axis_masks)) for axis_masks in masks]):
        covered = 0
        for axis, index in enumerate(choice):
            covered |= masks[axis][index]
        if covered == full:
            chosen = [regions[axis][index] for axis, index in enumerate(choice)]
            report.partition = Partition(chosen[0], chosen[1:],
                                         {'scheme': 'tube-search',
                                          'orientations': [[axis] for axis in range(geometry.dimension)]})
            break
    _logger.info(f'Tube cover search on {code.name or "code"}: maximal families per axis '
                 f'{[len(axis_families) for axis_families in families]}, found={report.found}')
    return report
