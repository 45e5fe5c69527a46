"""
bit-packed linear algebra over GF(2).

matrices are passed around as dense ``uint8`` 0/1 arrays. the eliminations pack the rows with
``np.packbits`` so that every row operation is a vectorised XOR over bytes.
"""
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np


def as_gf2(matrix) -> np.ndarray:
    """
    converts array-like input to a 2d uint8 0/1 matrix
    """
    array = np.asarray(matrix, dtype=np.uint8)
    if array.ndim == 1:
        array = array.reshape(1, -1)
    return array & 1


def pack_rows(matrix: np.ndarray) -> np.ndarray:
    return np.packbits(matrix, axis=1)


def unpack_rows(packed: np.ndarray, column_count: int) -> np.ndarray:
    return np.unpackbits(packed, axis=1, count=column_count).astype(np.uint8)


@dataclass(frozen=True)
class RowReduction:
    """
    the result of a reduced row-echelon elimination

    :param reduced: the nonzero rows of the RREF (rank x columns)
    :param pivots: the pivot column of each reduced row (increasing)
    :param transform: the row combinations: transform @ input == RREF (all rows, zero rows last)
    """
    reduced: np.ndarray
    pivots: Tuple[int, ...]
    transform: np.ndarray

    @property
    def rank(self) -> int:
        return len(self.pivots)

    @property
    def left_kernel(self) -> np.ndarray:
        """
        the combinations of input rows that sum to zero
        """
        return self.transform[self.rank:]


def _eliminate(packed: np.ndarray, column_count: int, stop_rank: int) -> List[int]:
    pivots: List[int] = []
    rank = 0
    for column in range(column_count):
        if rank == stop_rank:
            break
        byte, mask = column >> 3, np.uint8(0x80 >> (column & 7))
        has_bit = (packed[:, byte] & mask) != 0
        candidates = np.flatnonzero(has_bit[rank:])
        if candidates.size == 0:
            continue
        pivot_row = rank + int(candidates[0])
        if pivot_row != rank:
            packed[[rank, pivot_row]] = packed[[pivot_row, rank]]
            has_bit[[rank, pivot_row]] = has_bit[[pivot_row, rank]]
        has_bit[rank] = False
        packed[has_bit] ^= packed[rank]
        pivots.append(column)
        rank += 1
    return pivots


def row_reduce(matrix) -> RowReduction:
    """
    computes the reduced row-echelon form, choosing the lowest column pivots first

    :param matrix: a (rows x columns) 0/1 matrix
    :return: the RowReduction (with the transform tracking which input rows were combined)
    """
    matrix = as_gf2(matrix)
    row_count, column_count = matrix.shape
    augmented = np.concatenate([matrix, np.eye(row_count, dtype=np.uint8)], axis=1)
    packed = pack_rows(augmented)
    pivots = _eliminate(packed, column_count, min(row_count, column_count))
    full = unpack_rows(packed, column_count + row_count)
    return RowReduction(reduced=full[:len(pivots), :column_count].copy(),
                        pivots=tuple(pivots),
                        transform=full[:, column_count:].copy())


def rank(matrix) -> int:
    """
    the GF(2) rank of a matrix (no transform tracking)
    """
    matrix = as_gf2(matrix)
    if matrix.size == 0:
        return 0
    packed = pack_rows(matrix)
    return len(_eliminate(packed, matrix.shape[1], min(matrix.shape)))


def nullspace(matrix, column_count: Optional[int] = None) -> np.ndarray:
    """
    a basis of the right kernel {v : matrix @ v == 0}

    :param matrix: the matrix
    :param column_count: needed when the matrix has no rows
    :return: (columns - rank) x columns matrix, one kernel vector per free column
    """
    matrix = as_gf2(matrix)
    if matrix.shape[0] == 0 or matrix.size == 0:
        columns = column_count if column_count is not None else matrix.shape[1]
        return np.eye(columns, dtype=np.uint8)
    reduction = row_reduce(matrix)
    columns = matrix.shape[1]
    pivot_set = set(reduction.pivots)
    free = [c for c in range(columns) if c not in pivot_set]
    basis = np.zeros((len(free), columns), dtype=np.uint8)
    for i, f in enumerate(free):
        basis[i, f] = 1
        for row, pivot in enumerate(reduction.pivots):
            basis[i, pivot] = reduction.reduced[row, f]
    return basis


def reduce_against(vectors, reduction: RowReduction) -> np.ndarray:
    """
    reduces every vector against a RREF, clearing its pivot columns
    """
    vectors = as_gf2(vectors).copy()
    for row, pivot in enumerate(reduction.pivots):
        hit = vectors[:, pivot] == 1
        vectors[hit] ^= reduction.reduced[row]
    return vectors


def complement_basis(base, extension) -> np.ndarray:
    """
    a canonical basis of span(base + extension) modulo span(base): every extension row is reduced
    against the RREF of base and the residuals are brought to RREF

    :return: the independent residual rows
    """
    base = as_gf2(base)
    extension = as_gf2(extension)
    if extension.shape[0] == 0:
        return extension
    if base.shape[0] > 0:
        extension = reduce_against(extension, row_reduce(base))
    return row_reduce(extension).reduced


def solve_combination(matrix, target) -> Optional[np.ndarray]:
    """
    finds c with c @ matrix == target (a combination of the rows of matrix)

    :return: the combination vector, or None if target is not in the row space.
    a zero target always yields the zero combination
    """
    matrix = as_gf2(matrix)
    target = as_gf2(target)[0].copy()
    combination = np.zeros(matrix.shape[0], dtype=np.uint8)
    if matrix.shape[0] == 0:
        return combination if not target.any() else None
    reduction = row_reduce(matrix)
    for row, pivot in enumerate(reduction.pivots):
        if target[pivot]:
            target ^= reduction.reduced[row]
            combination ^= reduction.transform[row]
    if target.any():
        return None
    return combination


def row_to_int(row: np.ndarray) -> int:
    """
    converts a 0/1 vector to an int bitset (column c is bit c)
    """
    return int.from_bytes(np.packbits(np.asarray(row, dtype=np.uint8), bitorder='little').tobytes(), 'little')


def int_to_row(value: int, length: int) -> np.ndarray:
    raw = np.frombuffer(value.to_bytes((length + 7) // 8, 'little'), dtype=np.uint8)
    return np.unpackbits(raw, bitorder='little', count=length).astype(np.uint8)


class BitsetReducer:
    """
    membership tests against a fixed row space, on python int bitsets.
    used in hot loops where numpy call overhead dominates
    """

    def __init__(self, matrix):
        reduction = row_reduce(matrix) if as_gf2(matrix).shape[0] > 0 else None
        self._rows: List[Tuple[int, int]] = []
        if reduction is not None:
            for row, pivot in zip(reduction.reduced, reduction.pivots):
                self._rows.append((1 << pivot, row_to_int(row)))

    @property
    def rank(self) -> int:
        return len(self._rows)

    def reduce(self, value: int) -> int:
        for pivot_bit, row in self._rows:
            if value & pivot_bit:
                value ^= row
        return value

    def contains(self, value: int) -> bool:
        return self.reduce(value) == 0


def stack(rows: Sequence[np.ndarray], column_count: int) -> np.ndarray:
    if len(rows) == 0:
        return np.zeros((0, column_count), dtype=np.uint8)
    return np.vstack(rows).astype(np.uint8)
