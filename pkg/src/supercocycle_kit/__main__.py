"""Allow ``python -m supercocycle_kit``."""

from .cli import main

raise SystemExit(main())
