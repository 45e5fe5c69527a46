import numpy as np
import pytest

from gatebound.pauli import gf2


def test_row_reduce_pivots_and_transform():
    matrix = np.array([[0, 1, 1, 0],
                       [1, 1, 0, 0],
                       [1, 0, 1, 0]], dtype=np.uint8)
    reduction = gf2.row_reduce(matrix)
    assert reduction.rank == 2
    assert reduction.pivots == (0, 1)
    assert np.array_equal((reduction.transform.astype(int) @ matrix) % 2,
                          np.vstack([reduction.reduced, np.zeros((1, 4), dtype=np.uint8)]))
    kernel = reduction.left_kernel
    assert kernel.shape == (1, 3)
    assert not ((kernel.astype(int) @ matrix) % 2).any()


def test_rank_is_independent_of_row_order():
    rng = np.random.default_rng(7)
    matrix = rng.integers(0, 2, size=(12, 20), dtype=np.uint8)
    shuffled = matrix[rng.permutation(12)]
    assert gf2.rank(matrix) == gf2.rank(shuffled) == gf2.row_reduce(matrix).rank


def test_row_reduce_is_idempotent():
    rng = np.random.default_rng(3)
    matrix = rng.integers(0, 2, size=(9, 17), dtype=np.uint8)
    once = gf2.row_reduce(matrix).reduced
    twice = gf2.row_reduce(once).reduced
    assert np.array_equal(once, twice)


def test_nullspace():
    rng = np.random.default_rng(11)
    matrix = rng.integers(0, 2, size=(6, 13), dtype=np.uint8)
    kernel = gf2.nullspace(matrix)
    assert kernel.shape[0] == 13 - gf2.rank(matrix)
    assert not ((matrix.astype(int) @ kernel.T.astype(int)) % 2).any()
    assert gf2.rank(kernel) == kernel.shape[0]


def test_nullspace_of_empty_matrix_is_everything():
    kernel = gf2.nullspace(np.zeros((0, 5), dtype=np.uint8), column_count=5)
    assert np.array_equal(kernel, np.eye(5, dtype=np.uint8))


def test_solve_combination():
    matrix = np.array([[1, 0, 1], [0, 1, 1]], dtype=np.uint8)
    assert np.array_equal(gf2.solve_combination(matrix, [1, 1, 0]), [1, 1])
    assert np.array_equal(gf2.solve_combination(matrix, [0, 0, 0]), [0, 0])
    assert gf2.solve_combination(matrix, [1, 0, 0]) is None


def test_complement_basis():
    base = np.array([[1, 1, 0, 0]], dtype=np.uint8)
    extension = np.array([[1, 1, 0, 0], [0, 1, 1, 0], [1, 0, 1, 0]], dtype=np.uint8)
    complement = gf2.complement_basis(base, extension)
    assert complement.shape[0] == 1
    assert gf2.rank(np.vstack([base, complement])) == 2


@pytest.mark.parametrize('length', [1, 7, 8, 9, 70])
def test_int_bitsets(length):
    rng = np.random.default_rng(length)
    row = rng.integers(0, 2, size=length, dtype=np.uint8)
    value = gf2.row_to_int(row)
    assert value == sum(int(bit) << i for i, bit in enumerate(row))
    assert np.array_equal(gf2.int_to_row(value, length), row)


def test_bitset_reducer_membership():
    rng = np.random.default_rng(5)
    matrix = rng.integers(0, 2, size=(5, 30), dtype=np.uint8)
    reducer = gf2.BitsetReducer(matrix)
    assert reducer.rank == gf2.rank(matrix)
    combination = (matrix[0] ^ matrix[3] ^ matrix[4])
    assert reducer.contains(gf2.row_to_int(combination))
    outside = gf2.nullspace(matrix)
    for vector in outside:
        in_rowspace = gf2.solve_combination(matrix, vector) is not None
        assert reducer.contains(gf2.row_to_int(vector)) == in_rowspace
