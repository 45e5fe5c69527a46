from .trial_runner import (TrialTask, TrialRunnerBase, InProcessTrialRunner, MultiProcessTrialRunner,
                           get_trial_runner, default_worker_count, WORKERS_ENV_VAR)
