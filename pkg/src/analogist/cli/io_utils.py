"""Atomic artifact output.

Every file is written to a temporary name in the destination directory and
moved into place, so a crashed run never leaves a half-written artifact and
a rerun replaces outputs in one step.
"""

from __future__ import annotations

import json
import os
import tempfile
from pathlib import Path


def _atomic_write(path: Path, payload, mode: str) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=str(path.parent), prefix=path.name + ".")
    try:
        with os.fdopen(fd, mode) as handle:
            handle.write(payload)
        os.replace(tmp, path)
    finally:
        if os.path.exists(tmp):
            os.unlink(tmp)
    return path


def atomic_write_text(path: Path, text: str) -> Path:
    return _atomic_write(path, text, "w")


def atomic_write_bytes(path: Path, blob: bytes) -> Path:
    return _atomic_write(path, blob, "wb")


def write_json(path: Path, payload: dict) -> Path:
    return atomic_write_text(path, json.dumps(payload, indent=2) + "\n")
