"""Allow ``python -m edgelab`` as an alias for the CLI."""

from edgelab.cli import main

raise SystemExit(main())
