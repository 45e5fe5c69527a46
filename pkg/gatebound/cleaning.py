"""
cleanability of regions.

for a region R (with complement R^c), the numbers of independent logical operators supported on R are
computed by rank-nullity, using independent bases of G and S:

* ``l(R)         = 2|R| - rank(S|R) - (s - rank(S|R^c))``  (stabilizer codes)
* ``l_bare(R)    = 2|R| - rank(G|R) - (s - rank(S|R^c))``
* ``l_dressed(R) = 2|R| - rank(S|R) - (g - rank(G|R^c))``

R is bare-cleanable (every dressed logical can be moved off R by gauge elements, so R is correctable)
when l_dressed(R) = 0, and dressed-cleanable when l_bare(R) = 0.
"""
import logging
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np

from gatebound.codes import Region, SubsystemCode
from gatebound.geometry.neighborhoods import neighborhood
from gatebound.pauli import PauliOperator, SymplecticBasis, commuting_with_all
from gatebound.pauli import gf2
from gatebound.utils import KwargsException

_logger = logging.getLogger(__name__)

BARE = 'bare'
DRESSED = 'dressed'


class NotStabilizerCodeException(KwargsException):
    """
    raised when a stabilizer-code-only query is made on a subsystem code
    """
    pass


class NotALogicalOperatorException(KwargsException):
    """
    raised when cleaning an operator that is not in C(G) (bare mode) or C(S) (dressed mode)
    """
    pass


def _check_mode(mode: str) -> None:
    if mode not in (BARE, DRESSED):
        raise ValueError(f"mode must be '{BARE}' or '{DRESSED}', got {mode!r}")


def _restricted_rank(basis: SymplecticBasis, qubits: List[int]) -> int:
    if not qubits or len(basis) == 0:
        return 0
    return gf2.rank(basis.restricted_matrix(qubits))


def _region_parts(code: SubsystemCode, region: Region) -> Tuple[List[int], List[int]]:
    if region.n != code.n:
        raise ValueError(f'Region is over {region.n} qubits, code has {code.n}')
    inside = region.indices
    outside = region.complement().indices
    return inside, outside


def count_logical(code: SubsystemCode, region: Region) -> int:
    """
    the number of independent logical operators supported on R (stabilizer codes only)
    """
    if not code.is_stabilizer_code:
        raise NotStabilizerCodeException(f'{code.name or "code"} is a subsystem code; '
                                         f'use count_bare / count_dressed')
    inside, outside = _region_parts(code, region)
    s = code.stabilizer_rank
    outside_rank = _restricted_rank(code.stabilizer, outside)
    return 2 * len(inside) - _restricted_rank(code.stabilizer, inside) - (s - outside_rank)


def count_bare(code: SubsystemCode, region: Region) -> int:
    """
    the number of independent bare logical operators (C(G) mod S) supported on R
    """
    inside, outside = _region_parts(code, region)
    s = code.stabilizer_rank
    return 2 * len(inside) - _restricted_rank(code.gauge_basis, inside) - \
        (s - _restricted_rank(code.stabilizer, outside))


def count_dressed(code: SubsystemCode, region: Region) -> int:
    """
    the number of independent dressed logical operators (C(S) mod G) supported on R
    """
    inside, outside = _region_parts(code, region)
    g = code.gauge_rank
    return 2 * len(inside) - _restricted_rank(code.stabilizer, inside) - \
        (g - _restricted_rank(code.gauge_basis, outside))


@dataclass(frozen=True)
class RegionCounts:
    bare: int
    dressed: int
    logical: Optional[int]

    @property
    def bare_cleanable(self) -> bool:
        return self.dressed == 0

    @property
    def dressed_cleanable(self) -> bool:
        return self.bare == 0

    def to_dict(self) -> dict:
        return {'l_bare': self.bare, 'l_dressed': self.dressed, 'l': self.logical,
                'bare_cleanable': self.bare_cleanable, 'dressed_cleanable': self.dressed_cleanable,
                'correctable': self.bare_cleanable}


def region_counts(code: SubsystemCode, region: Region) -> RegionCounts:
    """
    all the counts of a region, computed from the four restricted ranks
    """
    inside, outside = _region_parts(code, region)
    g, s = code.gauge_rank, code.stabilizer_rank
    s_in = _restricted_rank(code.stabilizer, inside)
    s_out = _restricted_rank(code.stabilizer, outside)
    g_in = _restricted_rank(code.gauge_basis, inside)
    g_out = _restricted_rank(code.gauge_basis, outside)
    bare = 2 * len(inside) - g_in - (s - s_out)
    dressed = 2 * len(inside) - s_in - (g - g_out)
    logical = dressed if code.is_stabilizer_code else None
    return RegionCounts(bare=bare, dressed=dressed, logical=logical)


def is_bare_cleanable(code: SubsystemCode, region: Region) -> bool:
    return count_dressed(code, region) == 0


def is_dressed_cleanable(code: SubsystemCode, region: Region) -> bool:
    return count_bare(code, region) == 0


def is_correctable(code: SubsystemCode, region: Region) -> bool:
    """
    erasure of R is correctable iff R is bare-cleanable
    """
    return is_bare_cleanable(code, region)


def is_cleanable(code: SubsystemCode, region: Region, mode: str) -> bool:
    """
    :param mode: 'bare' (l_dressed(R) = 0) or 'dressed' (l_bare(R) = 0)
    """
    _check_mode(mode)
    return is_bare_cleanable(code, region) if mode == BARE else is_dressed_cleanable(code, region)


@dataclass(frozen=True)
class CleaningResult:
    """
    :param success: True if the operator could be moved off the region
    :param operator: the cleaned operator (exact phase, no support on the region)
    :param multiplier: the group element the input was multiplied by
    """
    success: bool
    operator: Optional[PauliOperator] = None
    multiplier: Optional[PauliOperator] = None

    def to_dict(self) -> dict:
        return {'success': self.success,
                'operator': str(self.operator) if self.operator is not None else None,
                'multiplier': str(self.multiplier) if self.multiplier is not None else None}


def clean_operator(code: SubsystemCode, operator: PauliOperator, region: Region, mode: str = BARE) -> CleaningResult:
    """
    multiplies a logical operator by a stabilizer (bare mode) or gauge element (dressed mode) that agrees
    with it on R, so the product has no support on R

    :param code: the code
    :param operator: a bare logical (in C(G)) for bare mode, a dressed logical (in C(S)) for dressed mode
    :param region: the region to clean
    :param mode: 'bare' or 'dressed'
    :return: the CleaningResult (success False when no group element matches on R)
    """
    _check_mode(mode)
    inside, _ = _region_parts(code, region)
    if mode == BARE:
        if not commuting_with_all(operator, code.gauge_basis):
            raise NotALogicalOperatorException(f'{operator} is not in C(G)', operator=str(operator))
        multipliers = code.stabilizer
    else:
        if not commuting_with_all(operator, code.stabilizer):
            raise NotALogicalOperatorException(f'{operator} is not in C(S)', operator=str(operator))
        multipliers = code.gauge_basis
    if not inside or len(multipliers) == 0:
        if operator.support.isdisjoint(inside):
            return CleaningResult(True, operator, PauliOperator.identity(code.n))
        return CleaningResult(False)
    target = np.concatenate([operator.x[inside], operator.z[inside]])
    combination = gf2.solve_combination(multipliers.restricted_matrix(inside), target)
    if combination is None:
        return CleaningResult(False)
    multiplier = multipliers.product(combination)
    cleaned = operator.multiply(multiplier)
    return CleaningResult(True, cleaned, multiplier)


def spatially_disjoint(code: SubsystemCode, first: Region, second: Region) -> bool:
    """
    True iff no gauge generator acts on both regions
    """
    geometry = code.require_geometry()
    for support in geometry.generator_supports:
        if not support.isdisjoint(first.qubits) and not support.isdisjoint(second.qubits):
            return False
    return True


@dataclass
class UnionLemmaReport:
    mode: str
    pairs_checked: int = 0
    attempts: int = 0
    counterexamples: List[Tuple[Region, Region]] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.counterexamples

    def to_dict(self) -> dict:
        return {'mode': self.mode,
                'pairs_checked': self.pairs_checked,
                'attempts': self.attempts,
                'counterexamples': [[a.indices, b.indices] for a, b in self.counterexamples]}


def verify_union_lemma(code: SubsystemCode,
                       samples: int,
                       rng: np.random.Generator,
                       mode: str = DRESSED,
                       *,
                       max_radius: int = 1,
                       max_attempts: Optional[int] = None) -> UnionLemmaReport:
    """
    samples pairs of spatially disjoint small balls that are both cleanable in the given mode,
    and checks that their union is cleanable too

    :param code: a code with geometry
    :param samples: the number of pairs to check
    :param rng: the random generator
    :param mode: 'dressed' (the union property always holds for local gauge generators) or 'bare'
    (may fail when the stabilizer generators are not local. failures are reported, not raised)
    :param max_radius: the largest ball radius to sample
    :param max_attempts: stop after this many candidate pairs (default 50 * samples)
    """
    _check_mode(mode)
    geometry = code.require_geometry()
    report = UnionLemmaReport(mode=mode)
    attempts_limit = max_attempts if max_attempts is not None else 50 * samples
    while report.pairs_checked < samples and report.attempts < attempts_limit:
        report.attempts += 1
        centers = rng.integers(0, code.n, size=2)
        radii = rng.integers(0, max_radius + 1, size=2)
        first = neighborhood(geometry, [int(centers[0])], int(radii[0]))
        second = neighborhood(geometry, [int(centers[1])], int(radii[1]))
        if not first.isdisjoint(second) or not spatially_disjoint(code, first, second):
            continue
        if not (is_cleanable(code, first, mode) and is_cleanable(code, second, mode)):
            continue
        report.pairs_checked += 1
        if not is_cleanable(code, first.union(second), mode):
            _logger.info(f'Union of cleanable regions {first.indices} and {second.indices} is not {mode}-cleanable')
            report.counterexamples.append((first, second))
    if report.pairs_checked < samples:
        _logger.warning(f'Only found {report.pairs_checked} of {samples} disjoint cleanable pairs '
                        f'in {report.attempts} attempts')
    return report
