"""Deterministic JSON serialization for exports and reports."""

from __future__ import annotations

import json
import os
from typing import Any


def dumps(obj: Any) -> str:
    """Sorted keys, fixed indentation, trailing newline: equal inputs give equal bytes."""
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def write_json(path: str, obj: Any) -> str:
    """Write atomically (temp file then rename) and return the path."""
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    tmp = path + ".tmp"
    with open(tmp, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(dumps(obj))
    os.replace(tmp, path)
    return path


def read_json(path: str) -> Any:
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)
