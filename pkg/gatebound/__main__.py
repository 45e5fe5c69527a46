import sys

from gatebound.cli import main

sys.exit(main())
