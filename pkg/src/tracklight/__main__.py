import sys

from tracklight.cli import main

sys.exit(main())
