"""Command-line surface: one executable, nine subcommands."""

from .main import build_parser, main
from .runconfig import RunConfig, UsageError

__all__ = ["build_parser", "main", "RunConfig", "UsageError"]
