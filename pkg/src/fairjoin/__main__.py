import sys

from fairjoin.cli import main

sys.exit(main())
