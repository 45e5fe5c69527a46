import argparse
import logging
from dataclasses import dataclass
from typing import Any, List, Optional

import numpy as np

from gatebound.cleaning import BARE, DRESSED, clean_operator, is_cleanable, region_counts
from gatebound.cli.parsing import (gate_qubit_count, gates_polynomial, parse_gates, parse_p_grid, parse_region,
                                   per_qubit_polynomials, resolve_code)
from gatebound.cli.reports import read_json, report_result, write_json
from gatebound.cli.suites import run_suite
from gatebound.codes import InvalidRegionException, build_code, save_code
from gatebound.geometry import (Partition, fattened_tiling, random_cell_region, skewed_tiling_from_balls,
                                tube_partition)
from gatebound.hierarchy import diagonal_level, level_bound_from_partition, transversal_diagonal_logical_action
from gatebound.logical_search import distance
from gatebound.loss import LossCurve, LossProgress, loss_curve, threshold_estimate, tradeoff_consistency
from gatebound.pauli import PauliOperator
from gatebound.utils import InvariantViolationException, ObservableEvent
from gatebound.utils.filesystem import atomic_write

_logger = logging.getLogger(__name__)

DEFAULT_TRIALS = 1000
KINDS = (BARE, DRESSED)


@dataclass
class CommandOutcome:
    """
    :param result: the JSON-friendly result stored in the report
    :param summary: the human readable lines printed to stdout
    :param error: an invariant violation to raise once the report is written
    """
    result: Any
    summary: List[str]
    error: Optional[Exception] = None


def run_build(args: argparse.Namespace) -> CommandOutcome:
    code = build_code(args.family, args.param)
    save_code(code, args.output)
    summary = code.summary()
    return CommandOutcome({'code': summary, 'output': args.output},
                          [f'{code.name}: n={code.n} k={code.k} g={code.gauge_rank} s={code.stabilizer_rank}',
                           f'written to {args.output}'])


def run_distance(args: argparse.Namespace) -> CommandOutcome:
    code = resolve_code(args.code)
    result = distance(code, w_max=args.wmax, kind=args.kind)
    if result.exact:
        lines = [f'{code.name}: {args.kind} distance = {result.value}']
    else:
        lines = [f'{code.name}: {args.kind} distance >= {result.value} (no logical up to weight {args.wmax})']
    if result.witness is not None:
        lines.append(f'witness: {result.witness}')
    return CommandOutcome({'code': code.summary(), 'distance': result.to_dict()}, lines)


def run_clean(args: argparse.Namespace) -> CommandOutcome:
    code = resolve_code(args.code)
    region = parse_region(args.region, code.n, code.geometry)
    counts = region_counts(code, region)
    result = {'region': region.indices, 'counts': counts.to_dict(),
              'cleanable': is_cleanable(code, region, args.kind), 'mode': args.kind}
    lines = [f'{code.name}: region of {len(region)} qubits, l_bare={counts.bare} l_dressed={counts.dressed}',
             f'{args.kind}-cleanable: {result["cleanable"]}']
    if args.operator:
        operator = PauliOperator.parse(args.operator)
        cleaning = clean_operator(code, operator, region, args.kind)
        result['cleaning'] = cleaning.to_dict()
        lines.append(f'cleaned operator: {cleaning.operator}' if cleaning.success else
                     'the operator can not be cleaned off the region')
    return CommandOutcome(result, lines)


def _partition_from_args(args: argparse.Namespace, code, rng: np.random.Generator) -> Optional[Partition]:
    geometry = code.require_geometry()
    widths = [int(w) for w in args.widths.split(',')] if args.widths else None
    if args.scheme == 'tiling':
        if args.tile is None:
            raise ValueError('--tile is required for the tiling scheme')
        return fattened_tiling(geometry, args.tile, widths)
    if args.scheme == 'tubes':
        return tube_partition(geometry, args.q, args.width)
    cells = random_cell_region(geometry, args.p0, args.radius, args.cell_constant, rng)
    if not cells.succeeded:
        return None
    partition = skewed_tiling_from_balls(geometry, cells, widths)
    partition.metadata['balls'] = [list(center) for center in cells.balls.values()]
    return partition


def run_partition(args: argparse.Namespace) -> CommandOutcome:
    code = resolve_code(args.code)
    partition = _partition_from_args(args, code, np.random.default_rng(args.seed))
    if partition is None:
        return CommandOutcome({'succeeded': False, 'scheme': args.scheme},
                              [f'random cell construction failed for p0={args.p0}; retry with another seed '
                               f'or a larger cell constant'])
    if args.empty_bare_region:
        partition = partition.with_empty_bare_region()
    write_json(args.output, partition.to_dict())
    sizes = [len(partition.r0)] + [len(region) for region in partition.regions]
    return CommandOutcome({'succeeded': True, 'output': args.output, 'sizes': sizes,
                           'covers': partition.covers(), 'metadata': partition.metadata},
                          [f'{args.scheme} partition of {code.name}: region sizes {sizes}',
                           f'written to {args.output}'])


def run_gate_bound(args: argparse.Namespace) -> CommandOutcome:
    code = resolve_code(args.code)
    data = report_result(read_json(args.partition))
    if isinstance(data, dict) and 'partition' in data:
        data = data['partition']
    if int(data['n']) != code.n:
        raise InvalidRegionException(f'Partition is for {data["n"]} qubits, code has {code.n}',
                                     partition_n=data['n'], n=code.n)
    partition = Partition.from_dict(data)
    report = level_bound_from_partition(code, partition.r0, partition.regions, spread=args.spread)
    if report.succeeded:
        lines = [f'every logical gate of {code.name} with spread {args.spread} is in level {report.bound}']
    else:
        lines = [f'no bound: region {failure.index} ({failure.role}) supports {failure.logical_count} logicals'
                 for failure in report.failures]
    return CommandOutcome(report.to_dict(), lines)


def run_gate_level(args: argparse.Namespace) -> CommandOutcome:
    gates = parse_gates(args.gates, args.qubits)
    n = args.qubits if args.qubits is not None else gate_qubit_count(gates)
    polynomial = gates_polynomial(gates, n)
    if args.kappa is not None:
        polynomial = polynomial.scale_to(args.kappa)
    level = diagonal_level(polynomial, cap=args.cap)
    return CommandOutcome({'polynomial': polynomial.to_dict(), 'level': level.to_dict()},
                          [f'{polynomial!r}', f'level: {level}'])


def run_logical_action(args: argparse.Namespace) -> CommandOutcome:
    code = resolve_code(args.code)
    gates = parse_gates(args.gates, code.n)
    result = transversal_diagonal_logical_action(code, per_qubit_polynomials(gates, code.n))
    if result.preserves_codespace:
        lines = [f'logical action: {result.logical!r}', f'logical level: {result.level}']
    else:
        lines = ['the gate does not preserve the codespace']
    return CommandOutcome(result.to_dict(), lines)


def _log_progress(event: LossProgress) -> None:
    _logger.info(f'{event.code_name}: {event.completed_trials}/{event.total_trials} trials')


def run_loss_curve(args: argparse.Namespace) -> CommandOutcome:
    code = resolve_code(args.code)
    progress: ObservableEvent[LossProgress] = ObservableEvent()
    progress.subscribe(_log_progress)
    curve = loss_curve(code, parse_p_grid(args.p), args.trials, args.seed, workers=args.workers, progress=progress)
    if args.csv:
        atomic_write(args.csv, curve.to_csv())
    lines = [f'{code.name} ({args.trials} trials)'] + \
        [f'  p={point.p:.3f}  {point.fraction:.3f}  [{point.ci_low:.3f}, {point.ci_high:.3f}]'
         for point in curve.points]
    return CommandOutcome(curve.to_dict(), lines)


def run_threshold(args: argparse.Namespace) -> CommandOutcome:
    curves = [LossCurve.from_dict(report_result(read_json(path))) for path in args.curves]
    estimate = threshold_estimate(curves)
    result = {'estimate': estimate.to_dict()}
    lines = [f'threshold estimate {estimate.p_hat:.4f} +- {estimate.uncertainty:.4f} '
             f'from {len(estimate.crossings)} crossings']
    if args.code and args.m:
        report = tradeoff_consistency(resolve_code(args.code), args.m, estimate, args.samples,
                                      np.random.default_rng(args.seed), known_level=args.known_level)
        result['tradeoff'] = report.to_dict()
        lines.append(f'tradeoff with m={args.m}: ' + ('consistent' if report.consistent else '; '.join(report.notes)))
    return CommandOutcome(result, lines)


def run_verify(args: argparse.Namespace) -> CommandOutcome:
    report = run_suite(args.suite, samples=args.samples, seed=args.seed, workers=args.workers)
    lines = [f'{"ok  " if case.passed else "info" if case.informational else "FAIL"}  {case.name}'
             for case in report.cases]
    error = None
    try:
        report.raise_for_failures()
    except InvariantViolationException as ex:
        error = ex
    return CommandOutcome(report.to_dict(), lines, error)
