import sys

from esfold.cli import main

sys.exit(main())
