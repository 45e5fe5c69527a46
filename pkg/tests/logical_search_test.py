import numpy as np
import pytest

from gatebound.cleaning import count_dressed
from gatebound.codes import Region, build_bacon_shor, build_haah_cubic, build_reed_muller, build_toric
from gatebound.logical_search import (InsufficientDataException, distance, distance_bound_check,
                                      find_logical_in_region, has_string_logical, string_tube)
from gatebound.pauli import commuting_with_all, in_span


@pytest.mark.parametrize('builder, param, expected', [
    (build_toric, 3, 3),
    (build_toric, 4, 4),
    (build_reed_muller, 3, 3),
    (build_reed_muller, 4, 3),
    (build_bacon_shor, 3, 3),
    (build_bacon_shor, 2, 2),
])
def test_distance(builder, param, expected):
    code = builder(param)
    result = distance(code)
    assert result.exact
    assert result.value == expected
    assert result.witness.weight == expected
    assert commuting_with_all(result.witness, code.stabilizer)
    assert not in_span(result.witness, code.gauge_basis)


def test_distance_lower_bound():
    result = distance(build_toric(4), w_max=2)
    assert not result.exact
    assert result.value == 3
    assert result.witness is None


def test_bare_and_dressed_distance_agree_on_stabilizer_codes():
    code = build_toric(3)
    assert distance(code, kind='bare').value == distance(code, kind='dressed').value


def test_bacon_shor_bare_distance():
    code = build_bacon_shor(3)
    result = distance(code, kind='bare')
    assert result.value == 3
    assert commuting_with_all(result.witness, code.gauge_basis)


def test_distance_is_invariant_under_relabeling():
    code = build_reed_muller(3)
    permutation = np.random.default_rng(4).permutation(code.n)
    assert distance(code.permuted(permutation)).value == 3


def test_distance_witness_is_deterministic():
    code = build_reed_muller(3)
    assert distance(code).witness == distance(code).witness


def test_find_logical_in_region():
    code = build_bacon_shor(3)
    row = Region([0, 1, 2], code.n)
    witness = find_logical_in_region(code, row, 'dressed')
    assert witness is not None
    assert witness.support <= row.qubits
    assert commuting_with_all(witness, code.stabilizer)
    assert not in_span(witness, code.gauge_basis)
    assert find_logical_in_region(code, Region([0, 4], code.n), 'dressed') is None


def test_string_logical_on_toric():
    code = build_toric(4)
    result = has_string_logical(code, 1)
    assert result.found
    tube = string_tube(code, result.axis, result.offset, 1)
    assert result.witness.support <= tube.qubits
    assert count_dressed(code, tube) >= 1


@pytest.mark.parametrize('L', [2, 3])
def test_no_string_logicals_on_cubic_code(L):
    code = build_haah_cubic(L)
    result = has_string_logical(code, 1)
    assert not result.found
    assert result.tubes_checked == 3 * L * L


def test_string_width_range():
    with pytest.raises(ValueError):
        has_string_logical(build_toric(3), 3)


def test_distance_bound_check():
    report = distance_bound_check([(3, 3, 2), (4, 4, 2), (5, 5, 2)], 2)
    assert report.consistent
    assert report.constant == pytest.approx(1.0)
    assert report.exponents[4] == 1
    growing = distance_bound_check([(2, 2, 2), (4, 16, 2)], 2)
    assert growing.violations == [4]
    with pytest.raises(InsufficientDataException):
        distance_bound_check([(3, 3, 2)], 2)


def test_no_width_two_tubes_hold_logicals_on_the_small_cubic_code():
    result = has_string_logical(build_haah_cubic(3), 2)
    assert not result.found
    assert result.tubes_checked == 27
