import numpy as np
import pytest

from gatebound.cleaning import count_logical
from gatebound.codes import Region, build_reed_muller, build_toric
from gatebound.loss import (CSV_COLUMNS, ErasureTrialTask, LossCurve, erasure_trial, loss_curve, trial_uniforms,
                            wilson_interval)
from gatebound.utils import ObservableEvent

P_GRID = [0.0, 0.2, 0.4, 0.6, 0.8, 1.0]


def test_no_loss_is_correctable_and_full_loss_is_not():
    code = build_toric(3)
    for index in range(5):
        assert erasure_trial(code, 0.0, seed=1, trial_index=index)
        assert not erasure_trial(code, 1.0, seed=1, trial_index=index)


def test_trial_streams_are_keyed_by_seed_and_index():
    assert np.array_equal(trial_uniforms(10, 5, 3), trial_uniforms(10, 5, 3))
    assert not np.array_equal(trial_uniforms(10, 5, 3), trial_uniforms(10, 5, 4))
    assert not np.array_equal(trial_uniforms(10, 5, 3), trial_uniforms(10, 6, 3))


def test_task_agrees_with_single_trials():
    code = build_reed_muller(3)
    task = ErasureTrialTask(code, P_GRID, 17)
    for index in range(20):
        assert task.run_trial(index) == [erasure_trial(code, p, 17, index) for p in P_GRID]


def test_curve_is_monotone_and_reproducible():
    code = build_toric(3)
    curve = loss_curve(code, P_GRID, trials=40, master_seed=3, workers=1)
    assert curve.size == 3
    assert curve.fractions[0] == 1.0
    assert curve.fractions[-1] == 0.0
    assert all(a >= b for a, b in zip(curve.fractions, curve.fractions[1:]))
    again = loss_curve(code, P_GRID, trials=40, master_seed=3, workers=1)
    assert again.to_dict() == curve.to_dict()


def test_results_do_not_depend_on_the_worker_count():
    code = build_toric(3)
    single = loss_curve(code, P_GRID, trials=12, master_seed=8, workers=1)
    multi = loss_curve(code, P_GRID, trials=12, master_seed=8, workers=2)
    assert [point.successes for point in single.points] == [point.successes for point in multi.points]


def test_progress_is_reported_per_batch():
    events = []
    progress = ObservableEvent()
    progress.subscribe(events.append)
    loss_curve(build_reed_muller(3), [0.1, 0.5], trials=20, master_seed=0, workers=1, progress=progress,
               batch_count=4)
    assert [event.completed_trials for event in events] == [5, 10, 15, 20]
    assert all(event.total_trials == 20 for event in events)


def test_wilson_interval():
    low, high = wilson_interval(5, 10)
    assert low == pytest.approx(0.2366, abs=1e-3)
    assert high == pytest.approx(0.7634, abs=1e-3)
    assert wilson_interval(0, 10)[0] == 0.0
    assert wilson_interval(10, 10)[1] == pytest.approx(1.0)
    assert wilson_interval(0, 0) == (0.0, 1.0)


def test_curve_csv_and_dict_forms():
    curve = loss_curve(build_reed_muller(3), [0.1, 0.3], trials=10, master_seed=2, workers=1)
    lines = curve.to_csv().splitlines()
    assert lines[0] == ','.join(CSV_COLUMNS)
    assert len(lines) == 3
    assert lines[1].startswith('0.1,10,')
    again = LossCurve.from_dict(curve.to_dict())
    assert again.points == curve.points
    assert again.code_name == 'steane'


def test_bad_arguments():
    code = build_toric(3)
    with pytest.raises(ValueError):
        loss_curve(code, [0.1], trials=0, master_seed=0, workers=1)
    with pytest.raises(ValueError):
        loss_curve(code, [1.5], trials=1, master_seed=0, workers=1)


def test_trial_verdict_is_the_logical_count_of_the_lost_region():
    code = build_toric(8)
    for index in range(10):
        lost = Region.from_mask(trial_uniforms(code.n, 2024, index) < 0.3, code.n)
        verdict = erasure_trial(code, 0.3, seed=2024, trial_index=index)
        assert verdict == (count_logical(code, lost) == 0)
        assert verdict == erasure_trial(code, 0.3, seed=2024, trial_index=index)


def test_toric_code_survives_moderate_loss():
    curve = loss_curve(build_toric(8), [0.3], trials=200, master_seed=2024, workers=1)
    assert curve.points[0].fraction >= 0.9
