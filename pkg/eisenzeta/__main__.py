import sys

from eisenzeta.cli import main

sys.exit(main())
