import numpy as np
import pytest

from gatebound.hierarchy import (CliffordLevel, LevelExceedsCapException, PhasePolynomial, controlled_z,
                                 diagonal_level, pauli_level, rotation, s_gate, t_gate, z_gate)
from gatebound.pauli import PauliOperator


@pytest.mark.parametrize('polynomial, expected', [
    (z_gate(1, 0), 1),
    (s_gate(1, 0), 2),
    (t_gate(1, 0), 3),
    (controlled_z(2, [0, 1]), 2),
    (controlled_z(3, [0, 1, 2]), 3),
    (PhasePolynomial.constant(2, 3, 5), 0),
])
def test_standard_gate_levels(polynomial, expected):
    assert diagonal_level(polynomial).value == expected


@pytest.mark.parametrize('k', [1, 2, 3, 4, 5, 6])
def test_rotation_level_is_k(k):
    assert diagonal_level(rotation(1, 0, k)).value == k


def test_level_does_not_depend_on_the_modulus():
    assert diagonal_level(s_gate(1, 0).scale_to(5)).value == 2
    assert diagonal_level(controlled_z(2, [0, 1], kappa=3)).value == 2


def test_level_cap():
    level = diagonal_level(rotation(1, 0, 6), cap=4)
    assert level.exceeds_cap
    assert str(level) == '>4'
    with pytest.raises(LevelExceedsCapException):
        level.level_or_raise


def test_pauli_levels():
    assert pauli_level(PauliOperator.identity(3)).value == 0
    assert pauli_level(PauliOperator.parse('XIZ')) == CliffordLevel(1)


def test_truth_table_interpolation():
    polynomial = PhasePolynomial(3, 3, {(0,): 1, (1, 2): 3, (0, 1, 2): 5, (): 2})
    again = PhasePolynomial.from_truth_table(polynomial.truth_table(), 3, 3)
    assert again == polynomial
    assert polynomial.evaluate([1, 1, 1]) == (1 + 3 + 5 + 2) % 8


def test_coefficients_are_reduced():
    polynomial = PhasePolynomial(1, 2, {(0,): 6})
    assert polynomial.terms == {frozenset([0]): 2}
    assert PhasePolynomial(1, 1, {(0,): 2}).is_constant()


def test_finite_difference_matches_truth_table():
    polynomial = PhasePolynomial(2, 3, {(0,): 3, (0, 1): 1})
    difference = polynomial.finite_difference(0)
    table = polynomial.truth_table()
    for index in range(4):
        shifted = index ^ 1
        assert difference.truth_table()[index] == (table[shifted] - table[index]) % 8


def test_sum_uses_the_larger_modulus():
    total = z_gate(1, 0) + t_gate(1, 0)
    assert total.kappa == 3
    assert total.terms == {frozenset([0]): 5}


def test_bad_polynomials():
    with pytest.raises(ValueError):
        PhasePolynomial(2, 0)
    with pytest.raises(ValueError):
        PhasePolynomial(2, 2, {(2,): 1})
    with pytest.raises(ValueError):
        controlled_z(3, [0, 0])
    with pytest.raises(ValueError):
        t_gate(1, 0).scale_to(2)


def test_truth_table_shape():
    assert np.array_equal(controlled_z(2, [0, 1]).truth_table(), [0, 0, 0, 1])
