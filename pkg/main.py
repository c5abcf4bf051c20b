import sys

from symplectic_rigidity.cli import main

if __name__ == "__main__":
    sys.exit(main())
