import sys

from nichegraph.cli import main

sys.exit(main())
