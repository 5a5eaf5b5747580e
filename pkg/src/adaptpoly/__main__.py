import sys

from adaptpoly.cli import main

sys.exit(main())
