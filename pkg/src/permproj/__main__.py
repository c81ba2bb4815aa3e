import sys

from permproj.cli import main

sys.exit(main())
