import numpy as np
import pytest

from gatebound.cleaning import (NotALogicalOperatorException, NotStabilizerCodeException, clean_operator,
                                count_bare, count_dressed, count_logical, is_bare_cleanable, is_correctable,
                                region_counts, spatially_disjoint, verify_union_lemma)
from gatebound.codes import Region, build_bacon_shor, build_reed_muller, build_toric, toric_edge
from gatebound.pauli import PauliOperator, commuting_with_all, in_span


def _random_region(rng, n):
    size = int(rng.integers(0, n + 1))
    return Region(rng.choice(n, size=size, replace=False), n)


@pytest.mark.parametrize('builder, param', [(build_toric, 3), (build_reed_muller, 3), (build_reed_muller, 4)])
def test_complementary_counts_add_up_for_stabilizer_codes(builder, param):
    code = builder(param)
    rng = np.random.default_rng(param)
    for _ in range(40):
        region = _random_region(rng, code.n)
        assert count_logical(code, region) + count_logical(code, region.complement()) == 2 * code.k


@pytest.mark.parametrize('size', [3, 4])
def test_bare_and_dressed_counts_are_complementary_for_bacon_shor(size):
    code = build_bacon_shor(size)
    rng = np.random.default_rng(12 + size)
    for _ in range(60):
        region = _random_region(rng, code.n)
        assert count_dressed(code, region) + count_bare(code, region.complement()) == 2 * code.k


def test_counts_are_monotone():
    code = build_toric(3)
    rng = np.random.default_rng(3)
    for _ in range(20):
        order = rng.permutation(code.n)
        previous = 0
        for size in range(code.n + 1):
            current = count_dressed(code, Region(order[:size], code.n))
            assert current >= previous
            previous = current
        assert previous == 2 * code.k


def test_small_regions_are_correctable():
    code = build_toric(3)
    rng = np.random.default_rng(5)
    for _ in range(50):
        region = Region(rng.choice(code.n, size=2, replace=False), code.n)
        assert is_correctable(code, region)


def test_bacon_shor_top_row():
    code = build_bacon_shor(3)
    counts = region_counts(code, Region([0, 1, 2], code.n))
    assert counts.dressed == 1
    assert counts.bare == 1
    assert counts.logical is None
    assert not counts.bare_cleanable


def test_count_logical_requires_stabilizer_code():
    code = build_bacon_shor(2)
    with pytest.raises(NotStabilizerCodeException):
        count_logical(code, Region([0], code.n))


def _toric_z_cycle(L, row=0):
    return PauliOperator.from_letters(2 * L * L, [(toric_edge(L, row, c, False), 'Z') for c in range(L)])


def test_clean_cycle_off_one_qubit():
    code = build_toric(3)
    cycle = _toric_z_cycle(3)
    region = Region([toric_edge(3, 0, 1, False)], code.n)
    result = clean_operator(code, cycle, region, mode='bare')
    assert result.success
    assert result.operator.support.isdisjoint(region.qubits)
    assert commuting_with_all(result.operator, code.stabilizer)
    assert not in_span(result.operator, code.stabilizer)
    assert in_span(result.multiplier, code.stabilizer)
    assert result.operator == cycle.multiply(result.multiplier)


def test_clean_operator_already_disjoint():
    code = build_toric(3)
    cycle = _toric_z_cycle(3)
    region = Region([toric_edge(3, 1, 1, True)], code.n)
    result = clean_operator(code, cycle, region)
    assert result.success
    assert result.operator == cycle


def test_clean_operator_moves_the_cycle_off_its_own_support():
    code = build_toric(3)
    cycle = _toric_z_cycle(3)
    result = clean_operator(code, cycle, Region(cycle.support, code.n))
    assert result.success
    assert result.operator.support.isdisjoint(cycle.support)


def test_clean_operator_fails_when_every_representative_meets_the_region():
    code = build_toric(3)
    cycle = _toric_z_cycle(3)
    # a horizontal cycle needs a horizontal edge in every column
    horizontal = Region([toric_edge(3, r, c, False) for r in range(3) for c in range(3)], code.n)
    result = clean_operator(code, cycle, horizontal)
    assert not result.success
    assert result.operator is None


def test_clean_operator_rejects_non_logicals():
    code = build_toric(3)
    with pytest.raises(NotALogicalOperatorException):
        clean_operator(code, PauliOperator.single(code.n, 0, 'Z'), Region([0], code.n))
    with pytest.raises(ValueError):
        clean_operator(code, _toric_z_cycle(3), Region([0], code.n), mode='sideways')


def test_dressed_cleaning_on_bacon_shor():
    code = build_bacon_shor(3)
    # X on one qubit per row is a dressed logical
    operator = PauliOperator.from_letters(code.n, [(0, 'X'), (4, 'X'), (6, 'X')])
    assert commuting_with_all(operator, code.stabilizer)
    result = clean_operator(code, operator, Region([4], code.n), mode='dressed')
    assert result.success
    assert 4 not in result.operator.support


def test_spatially_disjoint():
    code = build_toric(4)
    first = Region([toric_edge(4, 0, 0, False)], code.n)
    near = Region([toric_edge(4, 0, 1, False)], code.n)
    far = Region([toric_edge(4, 2, 2, False)], code.n)
    assert not spatially_disjoint(code, first, near)
    assert spatially_disjoint(code, first, far)


def test_union_lemma_holds_on_toric():
    code = build_toric(4)
    report = verify_union_lemma(code, 40, np.random.default_rng(1), mode='dressed', max_radius=0)
    assert report.pairs_checked == 40
    assert report.holds


def test_union_lemma_bare_mode_reports():
    code = build_bacon_shor(3)
    report = verify_union_lemma(code, 10, np.random.default_rng(2), mode='bare', max_radius=0)
    assert report.mode == 'bare'
    assert report.pairs_checked <= 10
    for first, second in report.counterexamples:
        assert is_bare_cleanable(code, first) and is_bare_cleanable(code, second)
        assert not is_bare_cleanable(code, first.union(second))


def test_union_lemma_holds_for_larger_balls_on_toric():
    code = build_toric(8)
    report = verify_union_lemma(code, 100, np.random.default_rng(4), mode='dressed', max_radius=1)
    assert report.pairs_checked == 100
    assert report.holds
