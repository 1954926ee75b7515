import sys

from quadgenus.cli import main

sys.exit(main())
