import numpy as np

from gatebound.pauli import (PauliOperator, SymplecticBasis, center, centralizer, in_span, row_reduce,
                             commuting_with_all)


def _random_basis(rng, n, rows):
    return SymplecticBasis(n, [PauliOperator(rng.integers(0, 2, n), rng.integers(0, 2, n), int(rng.integers(0, 4)))
                               for _ in range(rows)])


def test_row_reduce_tracks_phases():
    basis = SymplecticBasis.parse(['+XX', '+ZZ', '-YY'])
    reduced, rank = row_reduce(basis)
    assert rank == 2
    assert reduced.reduced
    for row in reduced:
        membership = in_span(row, basis, check_phase=True)
        assert membership.in_span
        assert membership.residual_phase == 0


def test_row_reduce_rank_ignores_row_order():
    rng = np.random.default_rng(8)
    basis = _random_basis(rng, 6, 9)
    reversed_basis = SymplecticBasis(6, list(reversed(basis.rows)))
    assert row_reduce(basis)[1] == row_reduce(reversed_basis)[1]
    reduced, _ = row_reduce(basis)
    again, _ = row_reduce(SymplecticBasis(6, reduced.rows))
    assert np.array_equal(reduced.matrix, again.matrix)


def test_in_span_reports_residual_phase():
    basis = SymplecticBasis.parse(['+XX', '+ZZ'])
    membership = in_span(PauliOperator.parse('-YY'), basis, check_phase=True)
    assert membership.in_span
    # XX * ZZ = -YY exactly
    assert membership.residual_phase == 0
    membership = in_span(PauliOperator.parse('+YY'), basis, check_phase=True)
    assert membership.residual_phase == 2
    assert not in_span(PauliOperator.parse('+XI'), basis)


def test_centralizer_dimension_and_commutation():
    rng = np.random.default_rng(9)
    for _ in range(5):
        basis = _random_basis(rng, 5, 4)
        cent = centralizer(basis)
        assert len(cent) + basis.rank == 10
        for row in cent:
            assert commuting_with_all(row, basis)


def test_double_centralizer_contains_span():
    rng = np.random.default_rng(10)
    basis = _random_basis(rng, 4, 3)
    double = centralizer(centralizer(basis))
    for row in basis:
        assert in_span(row, double)


def test_double_centralizer_of_abelian_group_is_the_group():
    basis = SymplecticBasis.parse(['+XXXX', '+ZZZZ'])
    double = centralizer(centralizer(basis))
    assert double.rank == 2
    for row in double:
        assert in_span(row, basis)


def test_center_of_bacon_shor_like_group():
    basis = SymplecticBasis.parse(['+XXII', '+IIXX', '+ZIZI', '+IZIZ'])
    group_center = center(basis)
    assert group_center.rank == 2
    for row in group_center:
        assert row.letter_phase == 0
        assert commuting_with_all(row, basis)
        assert in_span(row, basis)


def test_center_of_abelian_group_is_the_group():
    basis = SymplecticBasis.parse(['+ZZI', '+IZZ'])
    assert center(basis).rank == 2
