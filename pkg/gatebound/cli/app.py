"""
the ``gatebound`` command line.

exit codes: 0 on success, 1 on bad input (parse errors, missing files, invalid parameters) and 2 when an
invariant check fails.
"""
import argparse
import logging
import sys
from typing import Callable, Dict, List, NoReturn, Optional

from gatebound.cli.commands import (DEFAULT_TRIALS, KINDS, CommandOutcome, run_build, run_clean, run_distance,
                                    run_gate_bound, run_gate_level, run_logical_action, run_loss_curve,
                                    run_partition, run_threshold, run_verify)
from gatebound.cli.reports import build_report, write_json
from gatebound.cli.suites import SUITE_ALIASES, SUITES
from gatebound.cleaning import DRESSED
from gatebound.hierarchy import DEFAULT_LEVEL_CAP
from gatebound.logging import configure_logging
from gatebound.multiprocessing import default_worker_count
from gatebound.utils import InvariantViolationException, KwargsException, TimerContext

_logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_BAD_INPUT = 1
EXIT_VIOLATION = 2

_COMMANDS: Dict[str, Callable[[argparse.Namespace], CommandOutcome]] = {
    'build': run_build,
    'distance': run_distance,
    'clean': run_clean,
    'partition': run_partition,
    'gate-bound': run_gate_bound,
    'gate-level': run_gate_level,
    'logical-action': run_logical_action,
    'loss-curve': run_loss_curve,
    'threshold': run_threshold,
    'verify': run_verify,
}


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(EXIT_BAD_INPUT, f'{self.prog}: error: {message}\n')


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog='gatebound',
                             description='locality bounds on transversal and constant-depth logical gates')
    parser.add_argument('--report', help='write a JSON report of the run to this path')
    parser.add_argument('--workers', type=int, default=default_worker_count(),
                        help='the number of worker processes (default: $GATEBOUND_WORKERS or 1)')
    parser.add_argument('--seed', type=int, default=0, help='the master seed (default: 0)')
    parser.add_argument('-v', '--verbose', action='count', default=0, help='log more (repeat for debug)')
    parser.add_argument('-q', '--quiet', action='store_true', help='log errors only')
    commands = parser.add_subparsers(dest='command', metavar='COMMAND', parser_class=_ArgumentParser)
    commands.required = True

    build = commands.add_parser('build', help='build a code family member and save it')
    build.add_argument('family')
    build.add_argument('param', type=int, nargs='?', default=0)
    build.add_argument('-o', '--output', required=True)

    distance = commands.add_parser('distance', help='bare or dressed distance of a code')
    distance.add_argument('code', help='a code file or family:param')
    distance.add_argument('--wmax', type=int, default=6)
    distance.add_argument('--kind', choices=KINDS, default=DRESSED)

    clean = commands.add_parser('clean', help='logical counts and cleanability of a region')
    clean.add_argument('code')
    clean.add_argument('--region', required=True, help="e.g. '0..4', '1,3,5', 'box 0..1 x 0..2'")
    clean.add_argument('--kind', choices=KINDS, default=DRESSED)
    clean.add_argument('--operator', help='a Pauli string to clean off the region')

    partition = commands.add_parser('partition', help='partition a lattice code into correctable regions')
    partition.add_argument('code')
    partition.add_argument('--scheme', choices=('tiling', 'tubes', 'random'), default='tiling')
    partition.add_argument('--tile', type=int)
    partition.add_argument('--widths', help='comma separated fattening widths, one per level')
    partition.add_argument('--q', type=int, default=1, help='the tube parity stride')
    partition.add_argument('--width', type=int, default=1, help='the tube width')
    partition.add_argument('--p0', type=float, default=0.1)
    partition.add_argument('--radius', type=int, default=2)
    partition.add_argument('--cell-constant', type=float, default=1.0)
    partition.add_argument('--empty-bare-region', action='store_true')
    partition.add_argument('-o', '--output', required=True)

    gate_bound = commands.add_parser('gate-bound', help='the level bound implied by a saved partition')
    gate_bound.add_argument('code')
    gate_bound.add_argument('--partition', required=True)
    gate_bound.add_argument('--spread', type=int, default=0)

    gate_level = commands.add_parser('gate-level', help='the hierarchy level of a diagonal gate')
    gate_level.add_argument('--gates', required=True, help="e.g. 'T@0; CZ@0,1'")
    gate_level.add_argument('--qubits', type=int)
    gate_level.add_argument('--kappa', type=int)
    gate_level.add_argument('--cap', type=int, default=DEFAULT_LEVEL_CAP)

    logical_action = commands.add_parser('logical-action', help='the logical action of a transversal gate')
    logical_action.add_argument('code')
    logical_action.add_argument('--gates', required=True, help="e.g. 'T@all'")

    loss = commands.add_parser('loss-curve', help='Monte Carlo erasure recovery curve')
    loss.add_argument('code')
    loss.add_argument('--p', required=True, help='the loss grid a:b:step')
    loss.add_argument('--trials', type=int, default=DEFAULT_TRIALS)
    loss.add_argument('--csv')

    threshold = commands.add_parser('threshold', help='threshold estimate from loss-curve reports')
    threshold.add_argument('curves', nargs='+')
    threshold.add_argument('--code')
    threshold.add_argument('--m', type=int)
    threshold.add_argument('--samples', type=int, default=200)
    threshold.add_argument('--known-level', type=int)

    verify = commands.add_parser('verify', help='run a named invariant suite')
    verify.add_argument('--suite', choices=sorted(SUITES) + sorted(SUITE_ALIASES), default='all')
    verify.add_argument('--samples', type=int, default=500)
    return parser


def _log_level(args: argparse.Namespace) -> Optional[int]:
    if args.quiet:
        return logging.ERROR
    if args.verbose >= 2:
        return logging.DEBUG
    if args.verbose == 1:
        return logging.INFO
    return None


def main(argv: Optional[List[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(argv)
    configure_logging(_log_level(args))
    try:
        with TimerContext() as timer:
            outcome = _COMMANDS[args.command](args)
        if args.report:
            write_json(args.report, build_report(args.command, argv, args.seed, outcome.result,
                                                 timer.elapsed_seconds))
        for line in outcome.summary:
            print(line)
        if outcome.error is not None:
            raise outcome.error
    except InvariantViolationException as ex:
        print(f'gatebound: invariant violated: {ex}', file=sys.stderr)
        return EXIT_VIOLATION
    except (KwargsException, ValueError, OSError) as ex:
        _logger.debug('command failed', exc_info=True)
        print(f'gatebound: error: {ex}', file=sys.stderr)
        return EXIT_BAD_INPUT
    return EXIT_OK
