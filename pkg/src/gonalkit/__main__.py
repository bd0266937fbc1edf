import sys

from gonalkit.cli import main

sys.exit(main())
