from .erasure import (erasure_trial, loss_curve, wilson_interval, trial_uniforms, ErasureTrialTask, LossCurve,
                      LossPoint, LossProgress, CSV_COLUMNS)
from .threshold import threshold_estimate, ThresholdEstimate, Crossing, NoCrossingException
from .tradeoff import tradeoff_consistency, TradeoffReport, RandomSplitStatistics, curve_threshold
