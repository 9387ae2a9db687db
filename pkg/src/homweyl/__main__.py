import sys

from homweyl.cli import main

sys.exit(main())
