import itertools
import logging
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from gatebound.cleaning import BARE, DRESSED, count_bare, count_dressed
from gatebound.codes import Region, SubsystemCode
from gatebound.pauli import PauliOperator, SymplecticBasis, commuting_with_all, in_span
from gatebound.pauli import gf2
from gatebound.utils import KwargsException

_logger = logging.getLogger(__name__)

LETTER_ORDER = ('X', 'Y', 'Z')


class InsufficientDataException(KwargsException):
    """
    raised when a fit or estimate needs more data points than it was given
    """
    pass


def _groups(code: SubsystemCode, kind: str) -> Tuple[SymplecticBasis, SymplecticBasis]:
    """
    (the group the logical must commute with, the group it must not belong to)
    """
    if kind == DRESSED:
        return code.stabilizer, code.gauge_basis
    if kind == BARE:
        return code.gauge_basis, code.stabilizer
    raise ValueError(f"kind must be '{BARE}' or '{DRESSED}', got {kind!r}")


@dataclass(frozen=True)
class DistanceResult:
    """
    :param exact: True if a logical of weight <= w_max was found (value is then the distance)
    :param value: the distance, or the lower bound w_max + 1
    :param witness: a minimum weight logical (None if not exact)
    :param w_max: the largest weight searched
    """
    exact: bool
    value: int
    witness: Optional[PauliOperator]
    w_max: int
    kind: str = DRESSED

    def to_dict(self) -> dict:
        return {'exact': self.exact, 'distance' if self.exact else 'lower_bound': self.value,
                'witness': str(self.witness) if self.witness is not None else None,
                'w_max': self.w_max, 'kind': self.kind}


def _letter_syndromes(commute_with: SymplecticBasis, n: int) -> List[Tuple[int, int, int]]:
    """
    per qubit, the int-bitset syndromes of X, Y and Z against the rows of the group
    """
    if len(commute_with) == 0:
        return [(0, 0, 0)] * n
    # X on qubit j anticommutes with the rows having z_j = 1, Z with the rows having x_j = 1
    x_syndromes = [gf2.row_to_int(column) for column in commute_with.z_part.T]
    z_syndromes = [gf2.row_to_int(column) for column in commute_with.x_part.T]
    return [(sx, sx ^ sz, sz) for sx, sz in zip(x_syndromes, z_syndromes)]


def _candidate_vector(n: int, support: Sequence[int], letters: Sequence[int]) -> int:
    value = 0
    for qubit, letter in zip(support, letters):
        if letter != 2:
            value |= 1 << qubit
        if letter != 0:
            value |= 1 << (qubit + n)
    return value


def _zero_syndrome_candidates(syndromes: List[Tuple[int, int, int]], n: int,
                              weight: int) -> Iterator[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    """
    every (support, letters) of the given weight with trivial syndrome, in weight / lexicographic
    support / letter (X < Y < Z) order
    """
    for support in itertools.combinations(range(n), weight):
        per_qubit = [syndromes[q] for q in support]
        # depth first over the letters with a running syndrome
        stack: List[Tuple[int, int, Tuple[int, ...]]] = [(0, 0, ())]
        while stack:
            depth, syndrome, letters = stack.pop()
            if depth == weight:
                if syndrome == 0:
                    yield support, letters
                continue
            options = per_qubit[depth]
            for letter in (2, 1, 0):
                stack.append((depth + 1, syndrome ^ options[letter], letters + (letter,)))


def distance(code: SubsystemCode, w_max: int = 6, kind: str = DRESSED) -> DistanceResult:
    """
    the minimum weight of a nontrivial logical, by exhaustive search up to weight w_max

    :param code: the code
    :param w_max: the largest weight to try
    :param kind: 'dressed' (commutes with S, not in G) or 'bare' (commutes with G, not in S)
    :return: the exact distance with a witness, or the lower bound w_max + 1
    """
    commute_with, trivial = _groups(code, kind)
    n = code.n
    syndromes = _letter_syndromes(commute_with, n)
    reducer = gf2.BitsetReducer(trivial.matrix)
    for weight in range(1, w_max + 1):
        _logger.info(f'Searching {kind} logicals of weight {weight} on {code.name or "code"}')
        for support, letters in _zero_syndrome_candidates(syndromes, n, weight):
            vector = _candidate_vector(n, support, letters)
            if reducer.contains(vector):
                continue
            witness = PauliOperator.from_letters(n, [(q, LETTER_ORDER[letter]) for q, letter in zip(support, letters)])
            return DistanceResult(exact=True, value=weight, witness=witness, w_max=w_max, kind=kind)
    return DistanceResult(exact=False, value=w_max + 1, witness=None, w_max=w_max, kind=kind)


def find_logical_in_region(code: SubsystemCode, region: Region, kind: str = DRESSED) -> Optional[PauliOperator]:
    """
    a nontrivial logical of the given kind supported on R, or None if R supports none

    :param code: the code
    :param region: the region R
    :param kind: 'dressed' or 'bare'
    """
    commute_with, trivial = _groups(code, kind)
    count = count_dressed(code, region) if kind == DRESSED else count_bare(code, region)
    if count == 0:
        return None
    inside = region.indices
    width = len(inside)
    if len(commute_with):
        twisted = np.concatenate([commute_with.z_part[:, inside], commute_with.x_part[:, inside]], axis=1)
        kernel = gf2.nullspace(twisted, column_count=2 * width)
    else:
        kernel = np.eye(2 * width, dtype=np.uint8)
    for local in kernel:
        x = np.zeros(code.n, dtype=np.uint8)
        z = np.zeros(code.n, dtype=np.uint8)
        x[inside] = local[:width]
        z[inside] = local[width:]
        candidate = PauliOperator.hermitian(x, z)
        if in_span(candidate, trivial):
            continue
        if not commuting_with_all(candidate, commute_with):
            raise AssertionError('restricted kernel vector does not commute with the group')
        return candidate
    raise AssertionError(f'count says {count} {kind} logicals on the region, but none were found')


@dataclass(frozen=True)
class StringSearchResult:
    found: bool
    width: int
    tubes_checked: int
    axis: Optional[int] = None
    offset: Optional[Tuple[int, ...]] = None
    witness: Optional[PauliOperator] = None

    def to_dict(self) -> dict:
        return {'found': self.found, 'width': self.width, 'tubes_checked': self.tubes_checked,
                'axis': self.axis, 'offset': list(self.offset) if self.offset is not None else None,
                'witness': str(self.witness) if self.witness is not None else None}


def string_tube(code: SubsystemCode, axis: int, offset: Sequence[int], width: int) -> Region:
    """
    the qubits in the tube running along axis, whose cross-section is the width^(D-1) window
    starting at offset (one entry per cross axis, wrapping cyclically)
    """
    geometry = code.require_geometry()
    cross_axes = [a for a in range(geometry.dimension) if a != axis]
    mask = np.ones(code.n, dtype=bool)
    for cross_axis, start in zip(cross_axes, offset):
        shifted = (geometry.coords[:, cross_axis] - start) % geometry.size
        mask &= shifted < width
    return Region.from_mask(mask, code.n)


def has_string_logical(code: SubsystemCode, width: int) -> StringSearchResult:
    """
    looks for a nontrivial dressed logical supported on an axis-aligned tube of cross-section width^(D-1)

    :param code: a code with geometry
    :param width: the tube width (1 <= width < L)
    :return: the first tube (by axis, then cross-section offset) with a logical, or the number of
    tubes certified empty
    """
    geometry = code.require_geometry()
    if not 1 <= width < geometry.size:
        raise ValueError(f'width must be in [1, {geometry.size}), got {width}')
    checked = 0
    for axis in range(geometry.dimension):
        for offset in itertools.product(range(geometry.size), repeat=geometry.dimension - 1):
            tube = string_tube(code, axis, offset, width)
            checked += 1
            witness = find_logical_in_region(code, tube, DRESSED)
            if witness is not None:
                return StringSearchResult(found=True, width=width, tubes_checked=checked, axis=axis,
                                          offset=tuple(offset), witness=witness)
    return StringSearchResult(found=False, width=width, tubes_checked=checked)


@dataclass
class DistanceBoundReport:
    """
    the fit of d <= c * L^(D + 1 - m) over a family of codes
    """
    dimension: int
    constant: float
    ratios: Dict[int, float] = field(default_factory=dict)
    exponents: Dict[int, int] = field(default_factory=dict)
    violations: List[int] = field(default_factory=list)

    @property
    def consistent(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {'dimension': self.dimension, 'constant': self.constant, 'ratios': self.ratios,
                'exponents': self.exponents, 'violations': self.violations}


def distance_bound_check(results: Sequence[Tuple[int, int, int]], dimension: int,
                         tolerance: float = 0.1) -> DistanceBoundReport:
    """
    checks a family of (L, d, m) points (m = the level of a locality-preserving logical gate)
    against the scaling d <= c * L^(D + 1 - m).

    the reported constant is the largest ratio d / L^(D+1-m). a size is flagged when its ratio
    grows by more than a factor (1 + tolerance) over the previous size, i.e. the measured distances
    outgrow the exponent. this is a finite-size trend check, not a proof.

    :param results: (L, d, m) triples with at least two distinct sizes
    :param dimension: the lattice dimension D
    :param tolerance: the relative ratio growth allowed between consecutive sizes
    """
    sizes = sorted({size for size, _, _ in results})
    if len(sizes) < 2:
        raise InsufficientDataException('Need at least two lattice sizes to check the scaling',
                                        sizes=sizes)
    report = DistanceBoundReport(dimension=dimension, constant=0.0)
    for size, dist, level in sorted(results):
        exponent = dimension + 1 - level
        report.exponents[size] = exponent
        report.ratios[size] = max(report.ratios.get(size, 0.0), dist / float(size) ** exponent)
    report.constant = max(report.ratios.values())
    for previous, current in zip(sizes, sizes[1:]):
        if report.ratios[current] > report.ratios[previous] * (1 + tolerance):
            report.violations.append(current)
    return report
