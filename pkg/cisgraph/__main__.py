import sys

from cisgraph.cli import main

sys.exit(main())
