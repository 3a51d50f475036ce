import sys

from involution_voyager.main import main

sys.exit(main())
