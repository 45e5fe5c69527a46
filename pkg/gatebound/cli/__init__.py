from .app import EXIT_BAD_INPUT, EXIT_OK, EXIT_VIOLATION, build_parser, main
from .parsing import GateSpecParseException, RegionSpecParseException, parse_gates, parse_p_grid, parse_region
from .suites import SUITES, run_suite
