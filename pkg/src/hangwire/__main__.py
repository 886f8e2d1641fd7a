import sys

from hangwire.cli import main

sys.exit(main())
