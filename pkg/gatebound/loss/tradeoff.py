"""
consistency between the loss threshold and the level of logical gates.

a code with a logical gate outside level m-1 of the hierarchy can not be split into m correctable regions,
and by a union argument its loss threshold is then at most 1/m. these checks compare a measured threshold
with that limit, and sample random splits of the qubits into m and m+1 parts.
"""
import logging
from dataclasses import dataclass, field
from typing import List, Optional, Union

import numpy as np

from gatebound.cleaning import is_bare_cleanable
from gatebound.codes import Region, SubsystemCode
from gatebound.hierarchy import level_bound_from_partition
from gatebound.loss.erasure import LossCurve
from gatebound.loss.threshold import ThresholdEstimate, grid_step

_logger = logging.getLogger(__name__)


@dataclass
class RandomSplitStatistics:
    """
    :param parts: the number of parts each sample splits the qubits into
    :param samples: the number of sampled splits
    :param all_correctable: how many splits had only correctable parts
    :param bound_violations: splits with only correctable parts whose level bound exceeded parts - 1
    """
    parts: int
    samples: int = 0
    all_correctable: int = 0
    bound_violations: int = 0

    @property
    def fraction(self) -> float:
        return self.all_correctable / self.samples if self.samples else 0.0

    def to_dict(self) -> dict:
        return {'parts': self.parts, 'samples': self.samples, 'all_correctable': self.all_correctable,
                'fraction': self.fraction, 'bound_violations': self.bound_violations}


@dataclass
class TradeoffReport:
    """
    :param m: the level being tested
    :param p_hat: the measured threshold
    :param uncertainty: its uncertainty
    :param threshold_consistent: p_hat - uncertainty <= 1/m
    :param known_level: the level of a logical gate known to exist, if any
    """
    m: int
    p_hat: float
    uncertainty: float
    threshold_consistent: bool
    splits: List[RandomSplitStatistics] = field(default_factory=list)
    known_level: Optional[int] = None
    notes: List[str] = field(default_factory=list)

    @property
    def consistent(self) -> bool:
        return self.threshold_consistent and not self.notes

    def to_dict(self) -> dict:
        return {'m': self.m, 'p_hat': self.p_hat, 'uncertainty': self.uncertainty, 'limit': 1.0 / self.m,
                'threshold_consistent': self.threshold_consistent, 'known_level': self.known_level,
                'splits': [split.to_dict() for split in self.splits], 'notes': self.notes,
                'consistent': self.consistent}


def curve_threshold(curve: LossCurve) -> ThresholdEstimate:
    """
    a single-curve stand-in for the threshold: the rate where the success fraction falls through 1/2
    """
    points = sorted(curve.points, key=lambda point: point.p)
    half_step = grid_step([curve]) / 2
    for first, second in zip(points, points[1:]):
        if first.fraction >= 0.5 > second.fraction:
            p = first.p + (second.p - first.p) * (first.fraction - 0.5) / (first.fraction - second.fraction)
            return ThresholdEstimate(p_hat=float(p), uncertainty=half_step)
    edge = points[-1].p if points and points[-1].fraction >= 0.5 else points[0].p if points else 0.0
    return ThresholdEstimate(p_hat=float(edge), uncertainty=half_step)


def _random_split(rng: np.random.Generator, n: int, parts: int) -> List[Region]:
    labels = rng.integers(0, parts, size=n)
    return [Region(np.flatnonzero(labels == part), n) for part in range(parts)]


def _sample_splits(code: SubsystemCode, parts: int, samples: int, rng: np.random.Generator) -> RandomSplitStatistics:
    statistics = RandomSplitStatistics(parts=parts)
    for _ in range(samples):
        regions = _random_split(rng, code.n, parts)
        statistics.samples += 1
        if not all(is_bare_cleanable(code, region) for region in regions):
            continue
        statistics.all_correctable += 1
        report = level_bound_from_partition(code, regions[0], regions[1:])
        if report.bound is None or report.bound > parts - 1:
            statistics.bound_violations += 1
    return statistics


def tradeoff_consistency(code: SubsystemCode,
                         m: int,
                         threshold: Union[ThresholdEstimate, LossCurve],
                         samples: int,
                         rng: np.random.Generator,
                         known_level: Optional[int] = None) -> TradeoffReport:
    """
    checks a measured loss threshold against the 1/m limit and samples random splits of the qubits

    :param code: the code
    :param m: the level to test (at least 1)
    :param threshold: a threshold estimate, or a single loss curve
    :param samples: the number of random splits of each kind
    :param rng: the random generator
    :param known_level: the level of a logical gate known to exist, used to check that no split into that
    many correctable parts is found
    :return: the report (statistics never raise)
    """
    if m < 1:
        raise ValueError(f'm must be at least 1, got {m}')
    estimate = curve_threshold(threshold) if isinstance(threshold, LossCurve) else threshold
    report = TradeoffReport(m=m, p_hat=estimate.p_hat, uncertainty=estimate.uncertainty,
                            threshold_consistent=estimate.p_hat - estimate.uncertainty <= 1.0 / m,
                            known_level=known_level)
    if not report.threshold_consistent:
        report.notes.append(f'threshold {estimate.p_hat:.4f} +- {estimate.uncertainty:.4f} exceeds 1/{m}')

    for parts in (m + 1, m):
        statistics = _sample_splits(code, parts, samples, rng)
        report.splits.append(statistics)
        if statistics.bound_violations:
            report.notes.append(f'{statistics.bound_violations} correctable {parts}-way splits gave a bound '
                                f'above {parts - 1}')
        if known_level is not None and parts == known_level and statistics.all_correctable:
            report.notes.append(f'found {statistics.all_correctable} correctable {parts}-way splits although a '
                                f'level {known_level} gate exists')
    _logger.info(f'Tradeoff check for m={m}: ' + ('consistent' if report.consistent else '; '.join(report.notes)))
    return report
