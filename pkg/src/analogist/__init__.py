"""analogist: explain observed behavior by analogy with past experiences.

The package splits into: kr (micro-theory knowledge files), sme (structure
mapping between two experiences), synthesis (rationale transfer across a
whole library), aie (a desk-scale behavior simulator that produces target
experiences), and a command line in cli.
"""

from importlib import resources
from pathlib import Path

__version__ = "0.1.0"


def corpus_path(name: str) -> Path:
    """Filesystem path of a bundled corpus file."""
    root = resources.files("analogist") / "corpus" / name
    return Path(str(root))


def corpus_dir() -> Path:
    return Path(str(resources.files("analogist") / "corpus"))
