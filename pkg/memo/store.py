"""Process-wide memo tables for LR, Kronecker and Aguiar coefficients, and their cache file.

File format, one record per line::

    kind|lambda|mu|nu|value

with partitions in the text syntax (``-`` for the empty partition). Blank
lines and lines starting with ``#`` are ignored. The file is read once at
start and written once at exit; concurrent processes sharing one file are
not supported.
"""

from __future__ import annotations

from pathlib import Path
from typing import Dict, Optional, Tuple

from common.errors import CacheFormatError, PartitionSyntaxError
from partitions.core import Partition, format_sequence, parse_partition

Key = Tuple[Partition, Partition, Partition]

KINDS = ("lr", "kron", "aguiar")


def canonical_key(kind: str, lam: Partition, mu: Partition, nu: Partition) -> Key:
    if kind == "kron":
        a, b, c = sorted((lam, mu, nu))
        return (a, b, c)
    if kind in ("lr", "aguiar"):
        a, b = (lam, mu) if lam <= mu else (mu, lam)
        return (a, b, nu)
    raise ValueError(f"unknown coefficient kind: {kind!r}")


class CoefficientCache:
    def __init__(self) -> None:
        self.tables: Dict[str, Dict[Key, int]] = {k: {} for k in KINDS}

    def get(self, kind: str, lam: Partition, mu: Partition, nu: Partition) -> Optional[int]:
        return self.tables[kind].get(canonical_key(kind, lam, mu, nu))

    def put(self, kind: str, lam: Partition, mu: Partition, nu: Partition, value: int) -> None:
        self.tables[kind][canonical_key(kind, lam, mu, nu)] = int(value)

    def clear(self) -> None:
        for table in self.tables.values():
            table.clear()

    def __len__(self) -> int:
        return sum(len(t) for t in self.tables.values())


MEMO = CoefficientCache()


def load_cache(path: Path, cache: CoefficientCache = MEMO) -> int:
    """Merge records from `path` into `cache`. Missing file is a cold start. Returns the record count."""
    if not path.exists():
        return 0
    count = 0
    with open(path, "r", encoding="utf-8") as f:
        for line_no, line in enumerate(f, start=1):
            s = line.strip()
            if not s or s.startswith("#"):
                continue
            fields = s.split("|")
            if len(fields) != 5:
                raise CacheFormatError(str(path), line_no, f"expected 5 fields, got {len(fields)}")
            kind, a, b, c, v = fields
            if kind not in KINDS:
                raise CacheFormatError(str(path), line_no, f"unknown kind {kind!r}")
            try:
                lam, mu, nu = parse_partition(a), parse_partition(b), parse_partition(c)
                value = int(v)
            except (PartitionSyntaxError, ValueError) as e:
                raise CacheFormatError(str(path), line_no, str(e)) from e
            if value < 0:
                raise CacheFormatError(str(path), line_no, f"negative coefficient {value}")
            cache.put(kind, lam, mu, nu, value)
            count += 1
    return count


def save_cache(path: Path, cache: CoefficientCache = MEMO) -> int:
    """Write every table, sorted, so two saves of equal caches are byte-identical."""
    path.parent.mkdir(parents=True, exist_ok=True)
    lines = []
    for kind in KINDS:
        for (a, b, c), value in sorted(cache.tables[kind].items()):
            lines.append("|".join((kind, format_sequence(a), format_sequence(b), format_sequence(c), str(value))))
    path.write_text("".join(line + "\n" for line in lines), encoding="utf-8")
    return len(lines)
