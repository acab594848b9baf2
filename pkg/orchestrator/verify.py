"""Fixture corpus runner and sampled monotonicity checks behind ``sharpstab.py verify``."""

from __future__ import annotations

import hashlib
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional

from common.determinism import DeterminismConfig
from heisenberg.product import aguiar_coefficient, heisenberg_component, heisenberg_product
from io_utils import read_fixtures
from jacobi_trudi.straighten import component_from_stable, recover_aguiar, straighten, straighten_expansion
from kronecker.core import kronecker_coefficient, kronecker_product, reduced_kronecker
from lr.core import lr_coefficient, schur_product
from partitions.core import Partition, format_sequence, parse_partition, parse_sequence, partitions_of
from stability.onset import (
    coefficient_at,
    coefficient_onset,
    recovery_bound,
    stabilization_bound,
    stabilization_onset,
    stable_aguiar,
    stable_component,
    stability_table,
)

DEFAULT_FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def sha256_file(p: Path) -> str:
    return hashlib.sha256(p.read_bytes()).hexdigest()


def _p(text: str) -> Partition:
    return parse_partition(text)


def _terms(mapping: Dict[Partition, int]) -> Dict[str, int]:
    return {format_sequence(p): int(c) for p, c in mapping.items() if c}


def _canonical_terms(expect: Dict[str, int]) -> Dict[str, int]:
    return {format_sequence(parse_partition(k)): int(v) for k, v in expect.items() if int(v)}


def _graded(args: List[Any], expect: Dict[str, Dict[str, int]]):
    product = heisenberg_product(_p(args[0]), _p(args[1]))
    # only the degrees named by the fixture are pinned
    actual = {degree: _terms(product.component(int(degree))) for degree in expect}
    wanted = {degree: _canonical_terms(terms) for degree, terms in expect.items()}
    return actual, wanted


def _table(args: List[Any], expect: Dict[str, Any]):
    lam_bar, mu_bar, d, h, n_min, n_max = _p(args[0]), _p(args[1]), int(args[2]), int(args[3]), int(args[4]), int(args[5])
    table = stability_table(lam_bar, mu_bar, d, h, n_min, n_max)
    actual: Dict[str, Any] = {}
    wanted: Dict[str, Any] = {}
    for key, value in expect.items():
        if key == "rows":
            actual["rows"] = {n: _terms(table.rows.get(int(n)) or {}) for n in value}
            wanted["rows"] = {n: _canonical_terms(terms) for n, terms in value.items()}
        elif key == "coefficient_onsets":
            actual[key] = {k: table.coefficient_onsets.get(_p(k)) for k in value}
            wanted[key] = dict(value)
        elif key == "recovery_bounds":
            actual[key] = {k: table.recovery_bounds.get(_p(k)) for k in value}
            wanted[key] = dict(value)
        elif key in ("onset", "bound"):
            actual[key] = getattr(table, key)
            wanted[key] = value
    return actual, wanted


def _scalar(fn: Callable[..., int], parse: List[Callable[[Any], Any]]):
    def run(args: List[Any], expect: Any):
        return fn(*[conv(a) for conv, a in zip(parse, args)]), expect

    return run


def _expansion(fn: Callable[..., Any], parse: List[Callable[[Any], Any]]):
    def run(args: List[Any], expect: Dict[str, int]):
        result = fn(*[conv(a) for conv, a in zip(parse, args)])
        return _terms(dict(result)), _canonical_terms(expect)

    return run


def _straighten(args: List[Any], expect: List[Any]):
    term = straighten(parse_sequence(args[0]))
    actual = [term.sign, format_sequence(term.partition) if term.sign else None]
    wanted = [int(expect[0]), format_sequence(_p(expect[1])) if expect[1] is not None else None]
    return actual, wanted


def _straighten_expansion(args: List[Any], expect: Dict[str, int]):
    raw = {parse_sequence(k): int(v) for k, v in args[0].items()}
    return _terms(dict(straighten_expansion(raw))), _canonical_terms(expect)


OPS: Dict[str, Callable[[List[Any], Any], Any]] = {
    "lr_coefficient": _scalar(lr_coefficient, [_p, _p, _p]),
    "schur_product": _expansion(schur_product, [_p, _p]),
    "kronecker_coefficient": _scalar(kronecker_coefficient, [_p, _p, _p]),
    "kronecker_product": _expansion(kronecker_product, [_p, _p]),
    "reduced_kronecker": _scalar(reduced_kronecker, [_p, _p, _p]),
    "aguiar_coefficient": _scalar(aguiar_coefficient, [_p, _p, _p]),
    "heisenberg_component": _expansion(heisenberg_component, [_p, _p, int]),
    "heisenberg_product": _graded,
    "stable_aguiar": _scalar(stable_aguiar, [parse_sequence, parse_sequence, parse_sequence]),
    "stable_component": _expansion(stable_component, [_p, _p, int, int]),
    "recover_aguiar": _scalar(recover_aguiar, [_p, _p, _p]),
    "component_from_stable": _expansion(component_from_stable, [_p, _p, int]),
    "stabilization_bound": _scalar(stabilization_bound, [_p, _p, int, int]),
    "stabilization_onset": _scalar(stabilization_onset, [_p, _p, int, int]),
    "coefficient_onset": _scalar(coefficient_onset, [_p, _p, _p, int, int]),
    "recovery_bound": _scalar(recovery_bound, [_p, _p, _p, int, int]),
    "straighten": _straighten,
    "straighten_expansion": _straighten_expansion,
    "table": _table,
}


def run_fixture_record(record: Dict[str, Any]) -> Dict[str, Any]:
    name = str(record.get("name", "?"))
    op = str(record.get("op", ""))
    entry: Dict[str, Any] = {"name": name, "op": op}
    if op not in OPS:
        entry.update({"status": "error", "error": f"unknown op {op!r}"})
        return entry
    try:
        actual, wanted = OPS[op](list(record.get("args", [])), record.get("expect"))
    except Exception as e:
        entry.update({"status": "error", "error": f"{type(e).__name__}: {e}"})
        return entry
    entry["status"] = "pass" if actual == wanted else "fail"
    if entry["status"] == "fail":
        entry["expected"] = wanted
        entry["actual"] = actual
    return entry


def run_fixtures(paths: Optional[List[Path]] = None) -> Dict[str, Any]:
    """Run every record of every fixture file. Files are taken in sorted order."""
    if paths is None:
        paths = sorted(DEFAULT_FIXTURES.glob("*.jsonl"))
    files: List[Dict[str, Any]] = []
    passed = failed = 0
    for path in paths:
        fixture = read_fixtures(path)
        results = [run_fixture_record(r) for r in fixture.records]
        ok = sum(1 for r in results if r["status"] == "pass")
        passed += ok
        failed += len(results) - ok
        files.append(
            {
                "file": path.name,
                "sha256": sha256_file(path),
                "locator": fixture.locator,
                "results": results,
            }
        )
    return {"files": files, "passed": passed, "failed": failed}


def _small_partitions(max_size: int) -> List[Partition]:
    return [p for k in range(max_size + 1) for p in partitions_of(k)]


def run_sampled_checks(count: int, config: DeterminismConfig, *, extra_steps: int = 2) -> Dict[str, Any]:
    """Random (lam_bar, mu_bar, nu_bar, d, h) families; a^{nu_bar[n+h]}_{lam_bar[n],mu_bar[n-d]} must not decrease in n."""
    pool = _small_partitions(config.max_size)
    checks: List[Dict[str, Any]] = []
    failed = 0
    for run_id in range(count):
        lam_bar, mu_bar, nu_bar, d, h = config.draw_family(run_id, pool)
        bound = stabilization_bound(lam_bar, mu_bar, d, h)
        values = []
        for n in range(0, bound + extra_steps + 1):
            v = coefficient_at(lam_bar, mu_bar, nu_bar, d, h, n)
            if v is not None:
                values.append(v)
        monotone = all(a <= b for a, b in zip(values, values[1:]))
        stable = stable_component(lam_bar, mu_bar, d, h).get(nu_bar, 0)
        settled = not values or values[-1] == stable
        ok = monotone and settled
        failed += 0 if ok else 1
        checks.append(
            {
                "run_id": run_id,
                "seed": config.seed_for_run(run_id),
                "family": [format_sequence(lam_bar), format_sequence(mu_bar), format_sequence(nu_bar), d, h],
                "values": values,
                "status": "pass" if ok else "fail",
            }
        )
    return {"checks": checks, "failed": failed}
