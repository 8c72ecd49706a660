import sys

from rainbow_lab.cli import main

sys.exit(main())
