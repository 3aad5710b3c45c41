import sys

from nilhall.cli import main

sys.exit(main())
