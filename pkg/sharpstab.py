#!/usr/bin/env python3
"""
sharpstab - CLI unique: produit de Heisenberg des fonctions de Schur, coefficients d'Aguiar,
valeurs stables, seuils de stabilisation, reconstruction par Jacobi-Trudi.

Exemples:
  python sharpstab.py product 2,1,1 2,1
  python sharpstab.py heisenberg 1,1,1 1,1
  python sharpstab.py heisenberg 2,1,1 2,1 --degree 4
  python sharpstab.py stable 2,1,1 2,1 2,2
  python sharpstab.py stable 2,1,1 2,1 -- -2,3,3
  python sharpstab.py recover 2,1,1 2,1 2,2
  python sharpstab.py recover 2,1,1 2,1 --degree 4
  python sharpstab.py onset 1,1 1 --d 1 --h 0
  python sharpstab.py table 1,1 1 --d 1 --h 0 --n 3:8 --format csv
  python sharpstab.py verify --sample 20 --output-dir _ci_out/verify
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path
from typing import List, Optional, Tuple

ROOT = Path(__file__).resolve().parent
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from common.determinism import DeterminismConfig, elapsed_ms, utc_timestamp  # noqa: E402
from common.errors import SharpstabError  # noqa: E402
from common.jsonio import dump_json  # noqa: E402
from heisenberg.product import heisenberg_component, heisenberg_product  # noqa: E402
from io_utils import OutputRecord, record_from_expansion, record_from_graded, render  # noqa: E402
from jacobi_trudi.straighten import component_from_stable, recovery_terms  # noqa: E402
from kronecker.core import kronecker_product  # noqa: E402
from lr.core import schur_product  # noqa: E402
from memo.store import MEMO, load_cache, save_cache  # noqa: E402
from orchestrator.verify import run_fixtures, run_sampled_checks  # noqa: E402
from partitions.core import format_sequence, parse_partition, parse_sequence  # noqa: E402
from stability.onset import (  # noqa: E402
    coefficient_onset,
    recovery_bound,
    reduce_triple,
    stabilization_bound,
    stabilization_onset,
    stable_aguiar,
    stability_table,
)


def ensure_dir(p: Path) -> None:
    p.mkdir(parents=True, exist_ok=True)


def parse_range(text: str) -> Tuple[int, int]:
    try:
        lo, hi = (int(x) for x in text.split(":"))
    except ValueError as e:
        raise SharpstabError(f"range attendu sous la forme a:b, reçu {text!r}") from e
    if lo > hi:
        raise SharpstabError(f"range vide: {text!r}")
    return lo, hi


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json", "csv"], default="text")
    common.add_argument("--cache", type=Path, default=None, help="Cache de coefficients kind|lambda|mu|nu|value")
    common.add_argument("--output-dir", type=Path, default=None, help="Écrit sharpstab_summary.json ici")

    parser = argparse.ArgumentParser(
        description="sharpstab: produit de Heisenberg, coefficients d'Aguiar et leur stabilité, en arithmétique exacte",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("product", parents=[common], help="Produit usuel s_lambda s_mu")
    p.add_argument("lam")
    p.add_argument("mu")

    p = sub.add_parser("kronecker", parents=[common], help="Produit de Kronecker s_lambda * s_mu")
    p.add_argument("lam")
    p.add_argument("mu")

    p = sub.add_parser("heisenberg", parents=[common], help="Produit de Heisenberg (toutes composantes ou --degree)")
    p.add_argument("lam")
    p.add_argument("mu")
    p.add_argument("--degree", type=int, default=None)

    p = sub.add_parser("stable", parents=[common], help="Coefficient d'Aguiar stable (données réduites)")
    p.add_argument("lam", help="Suite entière, queue partition")
    p.add_argument("mu")
    p.add_argument("nu")

    p = sub.add_parser("recover", parents=[common], help="Reconstruction depuis les valeurs stables")
    p.add_argument("lam")
    p.add_argument("mu")
    p.add_argument("nu", nargs="?", default=None)
    p.add_argument("--degree", type=int, default=None, help="Reconstruit toute la composante de ce degré")

    p = sub.add_parser("onset", parents=[common], help="Seuil de stabilisation (composante, ou coefficient si nu)")
    p.add_argument("lam_bar")
    p.add_argument("mu_bar")
    p.add_argument("nu_bar", nargs="?", default=None)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--h", type=int, required=True)

    p = sub.add_parser("table", parents=[common], help="Grille n x nu_bar avec seuils")
    p.add_argument("lam_bar")
    p.add_argument("mu_bar")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--n", type=str, required=True, help="a:b")

    p = sub.add_parser("verify", parents=[common], help="Rejoue le corpus de fixtures")
    p.add_argument("--fixtures", type=Path, default=None, help="Dossier de fichiers .jsonl")
    p.add_argument("--sample", type=int, default=0, help="Nombre de familles aléatoires à contrôler")
    p.add_argument("--seed", type=int, default=1000)

    return parser


def run_command(args: argparse.Namespace) -> Tuple[OutputRecord, int]:
    """Dispatch one subcommand. Returns the record and the exit code it asks for."""
    cmd = args.command

    if cmd == "product":
        lam, mu = parse_partition(args.lam), parse_partition(args.mu)
        return record_from_expansion(cmd, {"lambda": args.lam, "mu": args.mu}, schur_product(lam, mu)), 0

    if cmd == "kronecker":
        lam, mu = parse_partition(args.lam), parse_partition(args.mu)
        return record_from_expansion(cmd, {"lambda": args.lam, "mu": args.mu}, kronecker_product(lam, mu)), 0

    if cmd == "heisenberg":
        lam, mu = parse_partition(args.lam), parse_partition(args.mu)
        inputs = {"lambda": args.lam, "mu": args.mu}
        if args.degree is not None:
            inputs["degree"] = str(args.degree)
            return record_from_expansion(cmd, inputs, heisenberg_component(lam, mu, args.degree)), 0
        return record_from_graded(cmd, inputs, heisenberg_product(lam, mu)), 0

    if cmd == "stable":
        lam, mu, nu = parse_sequence(args.lam), parse_sequence(args.mu), parse_sequence(args.nu)
        t = reduce_triple(lam, mu, nu)
        record = OutputRecord(cmd, {"lambda": args.lam, "mu": args.mu, "nu": args.nu}, value=stable_aguiar(lam, mu, nu))
        record.details = {"d": t.d, "h": t.h}
        return record, 0

    if cmd == "recover":
        lam, mu = parse_partition(args.lam), parse_partition(args.mu)
        inputs = {"lambda": args.lam, "mu": args.mu}
        if args.nu is not None:
            nu = parse_partition(args.nu)
            inputs["nu"] = args.nu
            terms = recovery_terms(lam, mu, nu)
            value = sum(v if i % 2 else -v for i, _, v in terms)
            record = OutputRecord(cmd, inputs, value=value)
            record.details = {"terms": [[i, format_sequence(seq), v] for i, seq, v in terms if v]}
            return record, 0
        if args.degree is None:
            raise SharpstabError("recover: donner nu ou --degree")
        inputs["degree"] = str(args.degree)
        return record_from_expansion(cmd, inputs, component_from_stable(lam, mu, args.degree)), 0

    if cmd == "onset":
        lam_bar, mu_bar = parse_partition(args.lam_bar), parse_partition(args.mu_bar)
        inputs = {"lambda_bar": args.lam_bar, "mu_bar": args.mu_bar, "d": str(args.d), "h": str(args.h)}
        if args.nu_bar is not None:
            nu_bar = parse_partition(args.nu_bar)
            inputs["nu_bar"] = args.nu_bar
            record = OutputRecord(cmd, inputs, value=coefficient_onset(lam_bar, mu_bar, nu_bar, args.d, args.h))
            record.details = {"recovery_bound": recovery_bound(lam_bar, mu_bar, nu_bar, args.d, args.h)}
            return record, 0
        record = OutputRecord(cmd, inputs, value=stabilization_onset(lam_bar, mu_bar, args.d, args.h))
        record.details = {"bound": stabilization_bound(lam_bar, mu_bar, args.d, args.h)}
        return record, 0

    if cmd == "table":
        lam_bar, mu_bar = parse_partition(args.lam_bar), parse_partition(args.mu_bar)
        lo, hi = parse_range(args.n)
        inputs = {"lambda_bar": args.lam_bar, "mu_bar": args.mu_bar, "d": str(args.d), "h": str(args.h), "n": args.n}
        return OutputRecord(cmd, inputs, table=stability_table(lam_bar, mu_bar, args.d, args.h, lo, hi)), 0

    if cmd == "verify":
        paths = sorted(args.fixtures.glob("*.jsonl")) if args.fixtures is not None else None
        report = run_fixtures(paths)
        failed = int(report["failed"])
        details = {
            "passed": report["passed"],
            "failed": failed,
            "files": {f["file"]: f"{sum(r['status'] == 'pass' for r in f['results'])}/{len(f['results'])}" for f in report["files"]},
        }
        inputs = {"fixtures": str(args.fixtures) if args.fixtures else "fixtures"}
        if args.sample > 0:
            sampled = run_sampled_checks(args.sample, DeterminismConfig(seed_base=args.seed))
            details["sampled_failed"] = sampled["failed"]
            failed += int(sampled["failed"])
            inputs["sample"] = str(args.sample)
        record = OutputRecord(cmd, inputs, value=failed, details=details)
        record.details["report"] = report
        return record, (3 if failed else 0)

    raise SharpstabError(f"commande inconnue: {cmd}")


def _echo(msg: str, fmt: str) -> None:
    # json and csv keep stdout machine-readable
    print(msg, file=sys.stderr if fmt != "text" else sys.stdout)


def main(argv: Optional[List[str]] = None) -> None:
    parser = build_parser()
    args = parser.parse_args(argv)

    outdir = getattr(args, "output_dir", None)
    if isinstance(outdir, Path):
        ensure_dir(outdir)

    summary: dict = {
        "generated_at_utc": utc_timestamp(),
        "command": args.command,
        "status": "ok",
    }

    exit_code = 0
    cache_loaded = False

    try:
        if args.cache is not None:
            n = load_cache(args.cache)
            cache_loaded = True
            summary["cache"] = {"path": str(args.cache), "loaded": n}

        start = time.perf_counter()
        record, exit_code = run_command(args)
        record.elapsed_ms = elapsed_ms(start, time.perf_counter())

        if args.command == "verify" and args.format == "text":
            report = record.details.pop("report")
            print(render(record, args.format))
            for f in report["files"]:
                for r in f["results"]:
                    if r["status"] != "pass":
                        print(f"{r['status'].upper()}: {f['file']}: {r['name']}")
            record.details["report"] = report
        else:
            print(render(record, args.format))

        summary["result"] = record.to_dict()
        if exit_code:
            summary["status"] = "failed"

    except Exception as e:
        summary["status"] = "error"
        summary["error"] = {"type": type(e).__name__, "message": str(e)}
        exit_code = 2
        print(f"ERREUR: {type(e).__name__}: {e}", file=sys.stderr)

    if cache_loaded:
        written = save_cache(args.cache)
        summary["cache"]["saved"] = written
        _echo(f"Cache sauvegardé: {args.cache} ({written} entrées, {len(MEMO)} en mémoire)", args.format)

    if isinstance(outdir, Path):
        primary = outdir / "sharpstab_summary.json"
        digest = dump_json(primary, summary)
        _echo(f"Summary sauvegardé: {primary} sha256={digest}", args.format)

    raise SystemExit(exit_code)


if __name__ == "__main__":
    main()
