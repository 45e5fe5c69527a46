"""
named invariant suites run by ``gatebound verify``.

every case draws its randomness from a generator keyed by (seed, case index), so the results do not depend on
how cases are spread over worker processes.
"""
import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional

import numpy as np

from gatebound.cleaning import BARE, DRESSED, count_bare, count_dressed, count_logical, verify_union_lemma
from gatebound.codes import Region, SubsystemCode, build_code
from gatebound.geometry import check_spread_soundness
from gatebound.hierarchy import (DenseCandidate, PhasePolynomial, controlled_z, dense_verify, diagonal_level,
                                 hierarchy_definition_equivalence, rotation)
from gatebound.multiprocessing import TrialTask, get_trial_runner
from gatebound.pauli import PauliOperator
from gatebound.utils import InvariantViolationException, TimerContext

_logger = logging.getLogger(__name__)


@dataclass
class CaseResult:
    """
    :param informational: the case reports an expected finding and never fails the suite
    """
    name: str
    passed: bool
    informational: bool = False
    details: Dict = field(default_factory=dict)
    elapsed_seconds: float = 0.0

    def to_dict(self) -> dict:
        return {'name': self.name, 'passed': self.passed, 'informational': self.informational,
                'details': self.details, 'elapsed_seconds': self.elapsed_seconds}


@dataclass
class SuiteReport:
    suite: str
    cases: List[CaseResult] = field(default_factory=list)

    @property
    def failures(self) -> List[CaseResult]:
        return [case for case in self.cases if not case.passed and not case.informational]

    def raise_for_failures(self) -> None:
        if self.failures:
            names = [case.name for case in self.failures]
            raise InvariantViolationException(f'{len(names)} invariant cases failed: {names}',
                                              inner_exceptions=[InvariantViolationException(name) for name in names],
                                              failed_cases=names)

    def to_dict(self) -> dict:
        return {'suite': self.suite, 'passed': not self.failures,
                'cases': [case.to_dict() for case in self.cases]}


def _random_region(rng: np.random.Generator, n: int) -> Region:
    size = int(rng.integers(0, n + 1))
    return Region(rng.choice(n, size=size, replace=False), n)


def _code(name: str) -> SubsystemCode:
    family, _, param = name.rpartition('-')
    if not family or not param.isdigit():
        return build_code(name)
    return build_code(family, int(param))


def _complement_case(code_name: str) -> Callable[[int, np.random.Generator], CaseResult]:
    def run(samples: int, rng: np.random.Generator) -> CaseResult:
        code = _code(code_name)
        violations = []
        for _ in range(samples):
            region = _random_region(rng, code.n)
            total = count_logical(code, region) + count_logical(code, region.complement())
            if total != 2 * code.k:
                violations.append({'region': region.indices, 'total': total})
        return CaseResult(f'lemma3:{code_name}', not violations,
                          details={'regions': samples, 'k': code.k, 'violations': violations[:5]})
    return run


def _subsystem_complement_case(code_name: str) -> Callable[[int, np.random.Generator], CaseResult]:
    def run(samples: int, rng: np.random.Generator) -> CaseResult:
        code = _code(code_name)
        violations = []
        for _ in range(samples):
            region = _random_region(rng, code.n)
            total = count_dressed(code, region) + count_bare(code, region.complement())
            if total != 2 * code.k:
                violations.append({'region': region.indices, 'total': total})
        return CaseResult(f'lemma4:{code_name}', not violations,
                          details={'regions': samples, 'k': code.k, 'violations': violations[:5]})
    return run


def _union_case(code_name: str, mode: str, pairs: int) -> Callable[[int, np.random.Generator], CaseResult]:
    def run(samples: int, rng: np.random.Generator) -> CaseResult:
        report = verify_union_lemma(_code(code_name), min(samples, pairs), rng, mode)
        return CaseResult(f'union:{code_name}:{mode}', report.holds, informational=mode == BARE,
                          details=report.to_dict())
    return run


_STANDARD_LEVELS = [('Z', rotation(1, 0, 1), 1), ('S', rotation(1, 0, 2), 2), ('T', rotation(1, 0, 3), 3),
                    ('CZ', controlled_z(2, [0, 1]), 2), ('CCZ', controlled_z(3, [0, 1, 2]), 3)]
_STANDARD_LEVELS += [(f'rot({k})', rotation(1, 0, k), k) for k in range(1, 6)]


def _standard_levels(samples: int, rng: np.random.Generator) -> CaseResult:
    mismatches = {name: diagonal_level(polynomial).value
                  for name, polynomial, expected in _STANDARD_LEVELS
                  if diagonal_level(polynomial).value != expected}
    return CaseResult('appendixA:standard-levels', not mismatches, details={'mismatches': mismatches})


def _definitions(samples: int, rng: np.random.Generator) -> CaseResult:
    report = hierarchy_definition_equivalence(samples, rng)
    return CaseResult('appendixA:definitions', report.consistent, details=report.to_dict())


def _dense_bacon_shor(samples: int, rng: np.random.Generator) -> CaseResult:
    expectations = {'x-column': (True, True), 'z-row': (True, True), 'x-diagonal': (False, True),
                    'single-x': (False, False)}
    candidates = [DenseCandidate('x-column', 'bare', PauliOperator.parse('XIIXIIXII')),
                  DenseCandidate('z-row', 'bare', PauliOperator.parse('ZZZIIIIII')),
                  DenseCandidate('x-diagonal', 'dressed', PauliOperator.parse('XIIIXIIIX')),
                  DenseCandidate('single-x', 'dressed', PauliOperator.parse('XIIIIIIII'))]
    report = dense_verify(_code('bacon-shor-3'), candidates, min(samples, 50), rng)
    wrong = [verdict.name for verdict in report.verdicts
             if (verdict.bare_logical, verdict.dressed_logical) != expectations[verdict.name]]
    return CaseResult('dense:bacon-shor-3', not wrong and report.consistent,
                      details=dict(report.to_dict(), unexpected_verdicts=wrong))


def _dense_steane(samples: int, rng: np.random.Generator) -> CaseResult:
    code = _code('steane')
    candidates = [DenseCandidate('s-all', 'bare', PhasePolynomial(code.n, 2, {(j,): 1 for j in range(code.n)})),
                  DenseCandidate('t-all', 'bare', PhasePolynomial(code.n, 3, {(j,): 1 for j in range(code.n)}))]
    report = dense_verify(code, candidates, min(samples, 50), rng)
    passed = report.verdict('s-all').bare_logical and not report.verdict('t-all').preserves_codespace
    return CaseResult('dense:steane', passed and report.consistent, details=report.to_dict())


def _spread(samples: int, rng: np.random.Generator) -> CaseResult:
    report = check_spread_soundness(_code('toric-8').require_geometry(), min(samples, 100), rng)
    return CaseResult('spread:toric-8', report.sound, details=report.to_dict())


_CASES: Dict[str, Callable[[int, np.random.Generator], CaseResult]] = {
    'lemma3:toric-3': _complement_case('toric-3'),
    'lemma3:toric-4': _complement_case('toric-4'),
    'lemma3:toric-5': _complement_case('toric-5'),
    'lemma3:steane': _complement_case('steane'),
    'lemma4:bacon-shor-3': _subsystem_complement_case('bacon-shor-3'),
    'lemma4:bacon-shor-4': _subsystem_complement_case('bacon-shor-4'),
    'lemma4:toric-3': _subsystem_complement_case('toric-3'),
    'union:toric-4:dressed': _union_case('toric-4', DRESSED, 200),
    'union:bacon-shor-3:dressed': _union_case('bacon-shor-3', DRESSED, 50),
    'union:bacon-shor-4:bare': _union_case('bacon-shor-4', BARE, 50),
    'appendixA:standard-levels': _standard_levels,
    'appendixA:definitions': _definitions,
    'dense:bacon-shor-3': _dense_bacon_shor,
    'dense:steane': _dense_steane,
    'spread:toric-8': _spread,
}

SUITES: Dict[str, List[str]] = {}
for _case_name in _CASES:
    SUITES.setdefault(_case_name.split(':')[0], []).append(_case_name)
SUITES['all'] = list(_CASES)

# descriptive names for the count identity and hierarchy suites
SUITE_ALIASES = {'complement': 'lemma3', 'subsystem-complement': 'lemma4', 'hierarchy': 'appendixA'}


class SuiteTask(TrialTask[CaseResult]):
    def __init__(self, case_names: List[str], samples: int, seed: int):
        self._case_names = case_names
        self._samples = samples
        self._seed = seed

    def run_trial(self, trial_index: int) -> CaseResult:
        name = self._case_names[trial_index]
        rng = np.random.default_rng([self._seed, trial_index])
        with TimerContext() as timer:
            result = _CASES[name](self._samples, rng)
        result.elapsed_seconds = timer.elapsed_seconds
        _logger.info(f'{name}: {"passed" if result.passed else "FAILED"} in {timer.elapsed_seconds:.2f}s')
        return result


def run_suite(suite: str, *, samples: int = 500, seed: int = 0, workers: Optional[int] = None) -> SuiteReport:
    """
    runs the cases of a named suite

    :param suite: one of SUITES, or one of SUITE_ALIASES
    :param samples: the number of random regions (or other samples) per case
    :param seed: the master seed
    :param workers: the number of processes
    :return: the report (failures are raised by ``SuiteReport.raise_for_failures``)
    """
    suite = SUITE_ALIASES.get(suite, suite)
    if suite not in SUITES:
        raise ValueError(f'unknown suite {suite!r}, expected one of {sorted(SUITES) + sorted(SUITE_ALIASES)}')
    names = SUITES[suite]
    with get_trial_runner(instance_count=workers or 1) as runner:
        cases = runner.run(SuiteTask(names, samples, seed), range(len(names)))
    return SuiteReport(suite, cases)
