import pytest

from gatebound.cleaning import count_dressed
from gatebound.codes import Region, build_haah_cubic, build_toric
from gatebound.geometry import fattened_tiling, tube_partition
from gatebound.hierarchy import (NonCoveringPartitionException, TubeSearchTooLargeException, level_bound_from_partition,
                                search_tube_cover)
from gatebound.logical_search import string_tube
from gatebound.pauli import commuting_with_all, in_span


def test_fattened_tiling_gives_level_two_on_the_toric_code():
    code = build_toric(12)
    partition = fattened_tiling(code.require_geometry(), 6, widths=(1, 0))
    report = level_bound_from_partition(code, partition.r0, partition.regions)
    assert report.succeeded
    assert report.bound == 2
    assert not report.failures


def test_tubes_fail_on_the_toric_code_with_a_cycle_witness():
    code = build_toric(4)
    partition = tube_partition(code.require_geometry(), 1)
    report = level_bound_from_partition(code, partition.r0, partition.regions)
    assert not report.succeeded
    failure = report.failures[0]
    assert failure.index == 0
    assert failure.role == 'bare'
    assert failure.logical_count > 0
    assert failure.witness.support <= partition.r0.qubits
    assert commuting_with_all(failure.witness, code.stabilizer)
    assert not in_span(failure.witness, code.stabilizer).in_span


def test_single_region_holding_everything_fails():
    code = build_toric(3)
    report = level_bound_from_partition(code, Region.empty(code.n), [Region.everything(code.n)])
    assert report.bound is None
    assert [failure.index for failure in report.failures] == [1]


def test_spread_grows_the_regions():
    code = build_toric(14)
    # one tile: thick slabs keep the grown regions from closing around the torus
    partition = fattened_tiling(code.require_geometry(), 14, widths=(5, 2))
    assert partition.metadata['components'] == [1, 2, 1]
    report = level_bound_from_partition(code, partition.r0, partition.regions, spread=1)
    assert report.spread == 1
    assert report.bound == 2


def test_spread_wraps_thin_regions_around_the_torus():
    code = build_toric(12)
    partition = fattened_tiling(code.require_geometry(), 6, widths=(1, 0))
    report = level_bound_from_partition(code, partition.r0, partition.regions, spread=1)
    assert report.bound is None
    failure = next(failure for failure in report.failures if failure.index == 1)
    assert failure.role == 'dressed'
    assert failure.size > len(partition.regions[0])


def test_partition_must_cover():
    code = build_toric(3)
    with pytest.raises(NonCoveringPartitionException):
        level_bound_from_partition(code, Region([0], code.n), [Region([1, 2], code.n)])


def _valid_witness(code, failure, region):
    return (failure.witness.support <= region.qubits and commuting_with_all(failure.witness, code.stabilizer)
            and not in_span(failure.witness, code.stabilizer).in_span)


def test_tubes_on_the_small_cubic_code_fail_with_witnesses():
    code = build_haah_cubic(3)
    partition = tube_partition(code.require_geometry(), 1)
    report = level_bound_from_partition(code, partition.r0, partition.regions)
    assert not report.succeeded
    regions = [partition.r0] + partition.regions
    for failure in report.failures:
        assert _valid_witness(code, failure, regions[failure.index])


@pytest.mark.parametrize('offsets', [[(0, 0), (1, 2), (2, 1)], [(0, 0), (1, 1), (2, 2)], [(0, 0), (0, 1), (0, 2)]])
def test_three_aligned_lines_of_the_small_cubic_code_hold_a_logical(offsets):
    code = build_haah_cubic(3)
    region = Region.empty(code.n)
    for offset in offsets:
        region = region.union(string_tube(code, 0, offset, 1))
    assert count_dressed(code, region) > 0


def test_no_tube_cover_of_the_small_cubic_code():
    code = build_haah_cubic(3)
    report = search_tube_cover(code)
    assert not report.found
    assert len(report.families) == 3
    # any three aligned lines hold a logical, so a cleanable family has at most four lines
    for axis_families in report.families:
        assert max(len(family) for family in axis_families) == 4
    assert frozenset([(0, 0), (0, 1), (1, 0), (1, 1)]) in report.families[0]
    assert report.to_dict()['partition'] is None


def test_single_toric_lines_hold_logicals():
    report = search_tube_cover(build_toric(3))
    assert report.families == [[frozenset()], [frozenset()]]
    assert not report.found


def test_tube_cover_search_needs_a_small_lattice():
    with pytest.raises(TubeSearchTooLargeException):
        search_tube_cover(build_haah_cubic(5))
