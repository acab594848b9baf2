from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Tuple

from common.jsonio import stable_dumps
from heisenberg.product import GradedExpansion
from lr.core import SchurExpansion
from partitions.core import Partition, format_sequence, parse_partition
from stability.onset import StabilityTable

Terms = List[Tuple[str, int]]


@dataclass
class OutputRecord:
    """What one CLI invocation prints. Terms reverse-lex within a degree, degrees descending."""

    command: str
    inputs: Dict[str, str]
    components: Dict[int, Terms] = field(default_factory=dict)
    value: Optional[int] = None
    details: Dict[str, Any] = field(default_factory=dict)
    table: Optional[StabilityTable] = None
    elapsed_ms: float = 0.0

    def to_dict(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {
            "command": self.command,
            "inputs": dict(self.inputs),
            "elapsed_ms": self.elapsed_ms,
        }
        if self.components:
            # descending degree, kept as a list under sort_keys
            out["components"] = [
                {"degree": degree, "terms": [[p, c] for p, c in self.components[degree]]}
                for degree in sorted(self.components, reverse=True)
            ]
        if self.value is not None:
            out["value"] = self.value
        if self.details:
            out["details"] = self.details
        if self.table is not None:
            out["table"] = table_to_dict(self.table)
        return out


def expansion_terms(exp: SchurExpansion) -> Terms:
    return [(format_sequence(p), c) for p, c in exp.sorted_terms()]


def record_from_expansion(command: str, inputs: Dict[str, str], exp: SchurExpansion) -> OutputRecord:
    components = {exp.degree: expansion_terms(exp)} if exp.degree is not None else {}
    return OutputRecord(command=command, inputs=inputs, components=components)


def record_from_graded(command: str, inputs: Dict[str, str], graded: GradedExpansion) -> OutputRecord:
    return OutputRecord(
        command=command,
        inputs=inputs,
        components={degree: expansion_terms(graded[degree]) for degree in graded},
    )


def _format_terms(terms: Terms) -> str:
    if not terms:
        return "0"
    pieces = []
    for p, c in terms:
        coeff = "" if c == 1 else ("-" if c == -1 else f"{c} ")
        pieces.append(f"{coeff}s[{p}]")
    return " + ".join(pieces).replace("+ -", "- ")


def table_to_dict(table: StabilityTable) -> Dict[str, Any]:
    rows: Dict[str, Any] = {}
    for n, row in sorted(table.rows.items()):
        if row is None:
            rows[str(n)] = None
            continue
        rows[str(n)] = {format_sequence(p): c for p, c in row.items()}
    return {
        "lambda_bar": format_sequence(table.lam_bar),
        "mu_bar": format_sequence(table.mu_bar),
        "d": table.d,
        "h": table.h,
        "columns": [format_sequence(p) for p in table.columns],
        "rows": rows,
        "bound": table.bound,
        "onset": table.onset,
        "coefficient_onsets": {format_sequence(p): v for p, v in table.coefficient_onsets.items()},
        "recovery_bounds": {format_sequence(p): v for p, v in table.recovery_bounds.items()},
    }


def render_table_csv(table: StabilityTable) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["n"] + [format_sequence(p) for p in table.columns])
    for n in sorted(table.rows):
        writer.writerow([n] + [("" if table.value(n, p) is None else table.value(n, p)) for p in table.columns])
    writer.writerow(["onset"] + [table.coefficient_onsets[p] for p in table.columns])
    writer.writerow(["recovery_bound"] + [table.recovery_bounds[p] for p in table.columns])
    return buf.getvalue()


def render_table_text(table: StabilityTable) -> str:
    header = ["n"] + [format_sequence(p) for p in table.columns]
    lines = [header]
    for n in sorted(table.rows):
        lines.append([str(n)] + ["." if table.value(n, p) is None else str(table.value(n, p)) for p in table.columns])
    lines.append(["onset"] + [str(table.coefficient_onsets[p]) for p in table.columns])
    lines.append(["bound"] + [str(table.recovery_bounds[p]) for p in table.columns])
    widths = [max(len(row[i]) for row in lines) for i in range(len(header))]
    out = ["  ".join(cell.rjust(w) for cell, w in zip(row, widths)) for row in lines]
    out.append(f"stabilization onset {table.onset}, bound {table.bound}")
    return "\n".join(out)


def render_text(record: OutputRecord) -> str:
    lines = []
    for degree in sorted(record.components, reverse=True):
        lines.append(f"[{degree}] {_format_terms(record.components[degree])}")
    if record.value is not None:
        lines.append(str(record.value))
    for key in sorted(record.details):
        lines.append(f"{key}: {record.details[key]}")
    if record.table is not None:
        lines.append(render_table_text(record.table))
    return "\n".join(lines)


def render_csv(record: OutputRecord) -> str:
    if record.table is not None:
        return render_table_csv(record.table)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["degree", "partition", "coefficient"])
    for degree in sorted(record.components, reverse=True):
        for p, c in record.components[degree]:
            writer.writerow([degree, p, c])
    if record.value is not None:
        writer.writerow(["", "value", record.value])
    return buf.getvalue()


def render(record: OutputRecord, fmt: str) -> str:
    if fmt == "json":
        return stable_dumps(record.to_dict())
    if fmt == "csv":
        return render_csv(record).rstrip("\n")
    return render_text(record)


@dataclass
class FixtureFile:
    path: Path
    locator: str
    records: List[Dict[str, Any]]


def read_fixtures(path: Path) -> FixtureFile:
    """JSON Lines with ``#`` comment lines; the first comment names what the file reproduces."""
    if not path.exists():
        raise FileNotFoundError(str(path))
    locator = ""
    records: List[Dict[str, Any]] = []
    with open(path, "r", encoding="utf-8") as f:
        for line_no, line in enumerate(f, start=1):
            s = line.strip()
            if not s:
                continue
            if s.startswith("#"):
                if not locator:
                    locator = s.lstrip("#").strip()
                continue
            try:
                obj = json.loads(s)
            except json.JSONDecodeError as e:
                raise ValueError(f"{path}:{line_no}: JSON invalide: {e}") from e
            if not isinstance(obj, dict):
                raise ValueError(f"{path}:{line_no}: objet attendu")
            records.append(obj)
    return FixtureFile(path=path, locator=locator, records=records)


def expansion_from_text(data: Mapping[str, int]) -> Dict[Partition, int]:
    return {parse_partition(k): int(v) for k, v in data.items() if int(v) != 0}
