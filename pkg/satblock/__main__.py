"""Allow ``python -m satblock``."""

from .cli import main

main()
