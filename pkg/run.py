"""Run the fracspec CLI."""
import sys

from fracspec.main import main

if __name__ == "__main__":
    sys.exit(main())
