import logging
import multiprocessing
import os
from abc import ABCMeta, abstractmethod
from concurrent.futures import ProcessPoolExecutor
from typing import Generic, List, Optional, Sequence, TypeVar

WORKERS_ENV_VAR = 'GATEBOUND_WORKERS'

TResult = TypeVar('TResult')


class TrialTask(Generic[TResult], metaclass=ABCMeta):
    """
    a picklable unit of independent work. each trial must depend only on its index
    (and on the task's own state), so results never depend on scheduling
    """

    @abstractmethod
    def run_trial(self, trial_index: int) -> TResult:
        """
        runs a single trial

        :param trial_index: the index of the trial
        :return: the trial result
        """
        pass


class TrialRunnerBase(metaclass=ABCMeta):
    """
    runs the trials of a TrialTask and returns their results ordered by trial index
    """

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        self.close()

    def close(self) -> None:
        """
        releases the resources the runner holds between runs
        """
        pass

    @abstractmethod
    def run(self, task: TrialTask[TResult], trial_indices: Sequence[int]) -> List[TResult]:
        pass


class InProcessTrialRunner(TrialRunnerBase):
    def run(self, task: TrialTask[TResult], trial_indices: Sequence[int]) -> List[TResult]:
        return [task.run_trial(i) for i in trial_indices]


def _run_chunk(task: TrialTask[TResult], trial_indices: Sequence[int]) -> List[TResult]:
    return [task.run_trial(i) for i in trial_indices]


class MultiProcessTrialRunner(TrialRunnerBase):
    """
    a runner that splits the trials into chunks and runs them in 'spawn' child processes.

    the process pool is created on the first run and kept until close(), so repeated runs reuse the same workers
    """

    def __init__(self, *, instance_count: int, chunks_per_instance: int = 4):
        """
        :param instance_count: the number of processes to run
        :param chunks_per_instance: how many chunks each process gets (on average)
        """
        self._instance_count = instance_count
        self._chunks_per_instance = chunks_per_instance
        self._logger = logging.getLogger(__name__)
        self._executor: Optional[ProcessPoolExecutor] = None

    @property
    def instance_count(self) -> int:
        return self._instance_count

    def run(self, task: TrialTask[TResult], trial_indices: Sequence[int]) -> List[TResult]:
        indices = list(trial_indices)
        if not indices:
            return []
        chunk_count = min(len(indices), self._instance_count * self._chunks_per_instance)
        chunk_size = -(-len(indices) // chunk_count)
        chunks = [indices[i:i + chunk_size] for i in range(0, len(indices), chunk_size)]
        self._logger.info(f'Running {len(indices)} trials in {len(chunks)} chunks '
                          f'on {self._instance_count} processes')
        executor = self._get_executor()
        futures = [executor.submit(_run_chunk, task, chunk) for chunk in chunks]
        results: List[TResult] = []
        for future in futures:
            results.extend(future.result())
        return results

    def _get_executor(self) -> ProcessPoolExecutor:
        if self._executor is None:
            self._logger.debug(f'Starting a pool of {self._instance_count} processes')
            self._executor = ProcessPoolExecutor(max_workers=self._instance_count,
                                                 mp_context=multiprocessing.get_context('spawn'))
        return self._executor

    def close(self) -> None:
        if self._executor is not None:
            self._executor.shutdown(wait=True)
            self._executor = None


def default_worker_count() -> int:
    """
    the worker count from GATEBOUND_WORKERS (1 when unset or malformed)
    """
    value = os.environ.get(WORKERS_ENV_VAR, '1')
    try:
        return max(1, int(value))
    except ValueError:
        logging.getLogger(__name__).warning(f'Ignoring malformed {WORKERS_ENV_VAR}={value!r}')
        return 1


def get_trial_runner(*, instance_count: int) -> TrialRunnerBase:
    """
    a helper method that creates a MultiProcessTrialRunner if instance_count is greater than 1.
    otherwise, it returns a runner that works in the current process.

    :param instance_count: the number of processes to run
    """
    if instance_count <= 1:
        return InProcessTrialRunner()
    else:
        return MultiProcessTrialRunner(instance_count=instance_count)
