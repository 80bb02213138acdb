import sys

from qzcodes.cli import main

sys.exit(main())
