import numpy as np
import pytest

from gatebound.codes import (build_bacon_shor, build_code, build_haah_cubic, build_reed_muller, build_toric,
                             InvalidCodeParametersException, anticommutation_matrix, toric_edge)
from gatebound.pauli import PauliOperator, commuting_with_all, gf2, in_span


def _check_structure(code):
    # stabilizer inside the gauge group and central in it
    for row in code.stabilizer:
        assert in_span(row, code.gauge_basis)
        assert commuting_with_all(row, code.gauge_basis)
    for row in code.bare_logicals:
        assert commuting_with_all(row, code.gauge_basis)
    for row in code.dressed_logicals:
        assert commuting_with_all(row, code.stabilizer)
    assert len(code.bare_logicals) == len(code.dressed_logicals) == 2 * code.k
    assert gf2.rank(anticommutation_matrix(code, 'bare')) == 2 * code.k
    assert code.k == code.n - code.stabilizer_rank - code.gauge_qubits


def test_toric_3():
    code = build_toric(3)
    assert code.n == 18
    assert code.k == 2
    assert code.is_stabilizer_code
    assert code.is_css
    assert code.stabilizer_rank == 16
    assert code.geometry.dimension == 2
    assert code.geometry.xi == 2
    _check_structure(code)


def test_toric_row_of_horizontal_edges_is_a_logical():
    L = 4
    code = build_toric(L)
    cycle = PauliOperator.from_letters(code.n, [(toric_edge(L, 1, c, False), 'Z') for c in range(L)])
    assert commuting_with_all(cycle, code.stabilizer)
    assert not in_span(cycle, code.stabilizer)


@pytest.mark.parametrize('m, n', [(3, 7), (4, 15), (5, 31)])
def test_reed_muller(m, n):
    code = build_reed_muller(m)
    assert code.n == n
    assert code.k == 1
    assert code.is_css
    assert code.geometry is None
    _check_structure(code)


def test_steane_x_and_z_checks_coincide():
    code = build_reed_muller(3)
    h_x, h_z = code.css_parts()
    assert h_x.shape == (3, 7)
    assert gf2.rank(np.vstack([h_x, h_z])) == 3


@pytest.mark.parametrize('L', [2, 3, 4])
def test_bacon_shor(L):
    code = build_bacon_shor(L)
    assert code.n == L * L
    assert code.k == 1
    assert code.stabilizer_rank == 2 * (L - 1)
    assert code.gauge_rank == 2 * L * (L - 1)
    assert not code.is_stabilizer_code
    assert not code.is_css
    _check_structure(code)


def test_bacon_shor_stabilizers_are_hermitian_with_plus_sign():
    for row in build_bacon_shor(3).stabilizer:
        assert row.letter_phase == 0


@pytest.mark.parametrize('L', [2, 3])
def test_haah_cubic(L):
    code = build_haah_cubic(L)
    assert code.n == 2 * L ** 3
    assert code.is_stabilizer_code
    assert code.geometry.dimension == 3
    for support in code.geometry.generator_supports:
        assert len(support) == 8
    _check_structure(code)


def test_build_code_aliases():
    assert build_code('steane').n == 7
    assert build_code('rm15').n == 15
    assert build_code('toric', 2).n == 8


@pytest.mark.parametrize('family, param', [('toric', 1), ('bacon-shor', 1), ('haah', 1), ('reed-muller', 2),
                                           ('color', 3)])
def test_bad_parameters(family, param):
    with pytest.raises(InvalidCodeParametersException):
        build_code(family, param)
