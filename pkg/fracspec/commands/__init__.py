"""CLI subcommands. Each module exposes register(subparsers) and handle(args)."""
