from __future__ import annotations

import hashlib
import json
from pathlib import Path
from typing import Any


def stable_dumps(data: Any, *, sort_keys: bool = True, indent: int | None = 2) -> str:
    """JSON text with sorted keys, so that two runs on the same input give the same bytes."""
    return json.dumps(data, sort_keys=sort_keys, indent=indent, ensure_ascii=False)


def dump_json(
    path: str | Path,
    data: Any,
    *,
    sort_keys: bool = True,
    indent: int = 2,
) -> str:
    """
    Write stable JSON to disk and return the sha256 of the written bytes.
    """
    p = Path(path)
    p.parent.mkdir(parents=True, exist_ok=True)

    raw = stable_dumps(data, sort_keys=sort_keys, indent=indent).encode("utf-8") + b"\n"
    p.write_bytes(raw)
    return hashlib.sha256(raw).hexdigest()
