import sys

from subdp.cli import main

sys.exit(main())
