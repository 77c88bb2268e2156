import sys

from sipoly.cli import main

sys.exit(main())
