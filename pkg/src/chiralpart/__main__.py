import sys

from chiralpart.cli import main

sys.exit(main())
