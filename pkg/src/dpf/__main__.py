import sys

from dpf.cli import main

sys.exit(main())
