import sys

from pachinko.cli.main import main


sys.exit(main())
