import sys

from habitat.pipeline.cli import main

sys.exit(main())
