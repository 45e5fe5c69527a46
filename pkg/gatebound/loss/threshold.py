import logging
from dataclasses import dataclass, field
from statistics import median
from typing import List, Optional, Sequence

import numpy as np

from gatebound.logical_search import InsufficientDataException
from gatebound.loss.erasure import LossCurve
from gatebound.utils import KwargsException

_logger = logging.getLogger(__name__)


class NoCrossingException(KwargsException):
    """
    raised when no two consecutive lattice sizes have crossing success curves
    """
    pass


@dataclass(frozen=True)
class Crossing:
    smaller_size: int
    larger_size: int
    p: float

    def to_dict(self) -> dict:
        return {'sizes': [self.smaller_size, self.larger_size], 'p': self.p}


@dataclass
class ThresholdEstimate:
    """
    :param p_hat: the median of the pairwise crossings
    :param uncertainty: half the spread of the crossings, and at least half the grid step
    """
    p_hat: float
    uncertainty: float
    crossings: List[Crossing] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {'p_hat': self.p_hat, 'uncertainty': self.uncertainty,
                'crossings': [crossing.to_dict() for crossing in self.crossings]}


def _curve_crossing(smaller: LossCurve, larger: LossCurve) -> Optional[float]:
    """
    the first rate where the larger code stops doing better than the smaller one, linearly interpolated
    """
    small = dict(zip(smaller.p_values, smaller.fractions))
    common = [(p, fraction) for p, fraction in zip(larger.p_values, larger.fractions) if p in small]
    common.sort()
    if len(common) < 2:
        raise InsufficientDataException(f'Curves of sizes {smaller.size} and {larger.size} share fewer than '
                                        f'two loss rates')
    differences = [(p, fraction - small[p]) for p, fraction in common]
    for (p0, d0), (p1, d1) in zip(differences, differences[1:]):
        if d0 > 0 >= d1:
            return p0 + (p1 - p0) * d0 / (d0 - d1)
    return None


def grid_step(curves: Sequence[LossCurve]) -> float:
    steps = [np.diff(sorted(curve.p_values)) for curve in curves if len(curve.points) > 1]
    positive = [float(step.min()) for step in steps if step.size and step.min() > 0]
    return min(positive) if positive else 0.0


def threshold_estimate(curves: Sequence[LossCurve]) -> ThresholdEstimate:
    """
    estimates the loss threshold from the crossings of the curves of consecutive lattice sizes

    :param curves: curves of at least two distinct sizes, measured on a common grid
    """
    by_size = sorted(curves, key=lambda curve: curve.size)
    if len({curve.size for curve in by_size}) < 2:
        raise InsufficientDataException('A threshold estimate needs curves of at least two sizes',
                                        sizes=[curve.size for curve in by_size])
    crossings: List[Crossing] = []
    for smaller, larger in zip(by_size, by_size[1:]):
        if smaller.size == larger.size:
            continue
        p = _curve_crossing(smaller, larger)
        if p is None:
            _logger.info(f'Curves of sizes {smaller.size} and {larger.size} do not cross')
            continue
        crossings.append(Crossing(smaller.size, larger.size, float(p)))
    if not crossings:
        raise NoCrossingException('No consecutive pair of curves crosses',
                                  sizes=[curve.size for curve in by_size])
    values = [crossing.p for crossing in crossings]
    half_range = (max(values) - min(values)) / 2
    return ThresholdEstimate(p_hat=float(median(values)),
                             uncertainty=max(half_range, grid_step(by_size) / 2),
                             crossings=crossings)
