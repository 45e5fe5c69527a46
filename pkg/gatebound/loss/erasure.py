"""
erasure (qubit loss) Monte Carlo.

in each trial every qubit draws one uniform number from a Philox stream keyed by (seed, trial index), and is
lost at rate p when its number is below p. the same numbers are reused for every p of the grid, so within a
trial the lost region only grows with p, and the estimated success fraction is monotone in p.
a trial succeeds when the lost region is correctable (bare-cleanable).
"""
import csv
import io
import logging
from dataclasses import asdict, dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from scipy.stats import norm

from gatebound.cleaning import is_bare_cleanable
from gatebound.codes import Region, SubsystemCode
from gatebound.multiprocessing import TrialTask, default_worker_count, get_trial_runner
from gatebound.utils import ObservableEvent

_logger = logging.getLogger(__name__)

_KEY_MASK = (1 << 64) - 1
CSV_COLUMNS = ('p', 'trials', 'successes', 'fraction', 'ci_low', 'ci_high')


def trial_uniforms(n: int, seed: int, trial_index: int) -> np.ndarray:
    """
    the per-qubit uniform numbers of a trial, independent of how trials are scheduled
    """
    key = ((seed & _KEY_MASK) << 64) | (trial_index & _KEY_MASK)
    return np.random.Generator(np.random.Philox(key=key)).random(n)


def erasure_trial(code: SubsystemCode, p: float, seed: int, trial_index: int = 0) -> bool:
    """
    True iff the region lost at rate p in this trial is correctable
    """
    lost = trial_uniforms(code.n, seed, trial_index) < p
    return is_bare_cleanable(code, Region.from_mask(lost, code.n))


class ErasureTrialTask(TrialTask[List[bool]]):
    """
    runs one trial at every loss rate of the grid, reusing the same uniform numbers
    """

    def __init__(self, code: SubsystemCode, p_grid: Sequence[float], seed: int):
        self._code = code
        self._p_grid = [float(p) for p in p_grid]
        self._seed = seed

    def run_trial(self, trial_index: int) -> List[bool]:
        uniforms = trial_uniforms(self._code.n, self._seed, trial_index)
        outcomes = [False] * len(self._p_grid)
        # correctable regions stay correctable when they shrink, so stop at the first failure
        for index in sorted(range(len(self._p_grid)), key=lambda i: self._p_grid[i]):
            region = Region.from_mask(uniforms < self._p_grid[index], self._code.n)
            if not is_bare_cleanable(self._code, region):
                break
            outcomes[index] = True
        return outcomes


def wilson_interval(successes: int, trials: int, confidence: float = 0.95) -> Tuple[float, float]:
    """
    the Wilson score interval of a binomial proportion
    """
    if trials <= 0:
        return 0.0, 1.0
    z = float(norm.ppf(0.5 + confidence / 2))
    fraction = successes / trials
    denominator = 1 + z * z / trials
    center = (fraction + z * z / (2 * trials)) / denominator
    half_width = z * np.sqrt(fraction * (1 - fraction) / trials + z * z / (4 * trials * trials)) / denominator
    return max(0.0, center - half_width), min(1.0, center + half_width)


@dataclass(frozen=True)
class LossPoint:
    p: float
    trials: int
    successes: int
    fraction: float
    ci_low: float
    ci_high: float

    @classmethod
    def from_counts(cls, p: float, trials: int, successes: int) -> 'LossPoint':
        low, high = wilson_interval(successes, trials)
        return cls(p=p, trials=trials, successes=successes,
                   fraction=successes / trials if trials else 0.0, ci_low=low, ci_high=high)


@dataclass
class LossCurve:
    """
    :param code_name: the code the curve was measured on
    :param size: the linear lattice size (the qubit count for codes without geometry)
    :param seed: the master seed
    :param points: one point per loss rate, in grid order
    """
    code_name: str
    size: int
    seed: int
    points: List[LossPoint] = field(default_factory=list)

    @property
    def p_values(self) -> List[float]:
        return [point.p for point in self.points]

    @property
    def fractions(self) -> List[float]:
        return [point.fraction for point in self.points]

    def to_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator='\n')
        writer.writerow(CSV_COLUMNS)
        for point in self.points:
            writer.writerow([repr(point.p), point.trials, point.successes,
                             f'{point.fraction:.6f}', f'{point.ci_low:.6f}', f'{point.ci_high:.6f}'])
        return buffer.getvalue()

    def to_dict(self) -> dict:
        return {'code': self.code_name, 'size': self.size, 'seed': self.seed,
                'points': [asdict(point) for point in self.points]}

    @classmethod
    def from_dict(cls, data: Dict) -> 'LossCurve':
        return cls(code_name=data['code'], size=int(data['size']), seed=int(data['seed']),
                   points=[LossPoint(**point) for point in data['points']])


@dataclass(frozen=True)
class LossProgress:
    code_name: str
    completed_trials: int
    total_trials: int


def code_size(code: SubsystemCode) -> int:
    return code.geometry.size if code.geometry is not None else code.n


def loss_curve(code: SubsystemCode,
               p_grid: Sequence[float],
               trials: int,
               master_seed: int,
               workers: Optional[int] = None,
               progress: Optional[ObservableEvent[LossProgress]] = None,
               batch_count: int = 10) -> LossCurve:
    """
    estimates the probability that an erasure at each rate of the grid is correctable

    :param code: the code
    :param p_grid: the loss rates
    :param trials: the number of trials (shared by all rates)
    :param master_seed: the seed every trial stream is keyed by
    :param workers: the number of processes (default from GATEBOUND_WORKERS)
    :param progress: fired after each batch of trials
    :param batch_count: the number of batches progress is reported in
    :return: the curve (the results don't depend on the worker count)
    """
    if trials < 1:
        raise ValueError(f'trials must be positive, got {trials}')
    if any(not 0.0 <= p <= 1.0 for p in p_grid):
        raise ValueError(f'loss rates must be in [0, 1], got {list(p_grid)}')
    task = ErasureTrialTask(code, p_grid, master_seed)
    successes = np.zeros(len(p_grid), dtype=np.int64)
    batch_size = -(-trials // max(1, batch_count))
    completed = 0
    name = code.name or f'n={code.n}'
    # one pool serves every batch of the curve
    with get_trial_runner(instance_count=workers if workers is not None else default_worker_count()) as runner:
        for start in range(0, trials, batch_size):
            indices = range(start, min(trials, start + batch_size))
            for outcome in runner.run(task, indices):
                successes += np.array(outcome, dtype=np.int64)
            completed += len(indices)
            _logger.debug(f'{name}: {completed}/{trials} trials')
            if progress is not None:
                progress.fire(LossProgress(name, completed, trials))

    points = [LossPoint.from_counts(float(p), trials, int(count)) for p, count in zip(p_grid, successes)]
    _logger.info(f'Loss curve of {name}: ' + ', '.join(f'{point.p:.3f}:{point.fraction:.3f}' for point in points))
    return LossCurve(code_name=name, size=code_size(code), seed=master_seed, points=points)
