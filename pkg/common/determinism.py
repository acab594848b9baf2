"""Horodatage reproductible, graines des contrôles échantillonnés, chronométrage."""

from __future__ import annotations

import os
import random
from dataclasses import dataclass
from datetime import datetime, timezone
from typing import Sequence, Tuple, TypeVar

T = TypeVar("T")


def utc_timestamp() -> str:
    """UTC ISO8601 timestamp with Z suffix. Reproductible si SOURCE_DATE_EPOCH est défini."""
    sde = os.getenv("SOURCE_DATE_EPOCH")
    if sde:
        dt = datetime.fromtimestamp(int(sde), tz=timezone.utc)
        return dt.isoformat().replace("+00:00", "Z")
    return datetime.now(timezone.utc).replace(microsecond=0).isoformat().replace("+00:00", "Z")


def seed_effective(seed_base: int, run_id: int, salt: int = 0) -> int:
    """Stable 32-bit seed; the golden ratio constant decorrelates sequential run ids."""
    return (seed_base ^ (run_id * 0x9E3779B1) ^ salt) & 0xFFFFFFFF


@dataclass(frozen=True)
class DeterminismConfig:
    """Tirage des familles (lam_bar, mu_bar, nu_bar, d, h) de ``verify --sample``.

    max_size borne |lam_bar|, |mu_bar|, |nu_bar|; max_offset borne d et h.
    """

    seed_base: int = 1000
    seed_mode: str = "per-run"  # "fixed" or "per-run"
    salt: int = 0
    max_size: int = 2
    max_offset: int = 1

    def seed_for_run(self, run_id: int) -> int:
        if self.seed_mode == "fixed":
            return int(self.seed_base) & 0xFFFFFFFF
        if self.seed_mode == "per-run":
            return seed_effective(int(self.seed_base), int(run_id), int(self.salt))
        raise ValueError(f"Unsupported seed_mode: {self.seed_mode!r}")

    def rng_for_run(self, run_id: int) -> random.Random:
        return random.Random(self.seed_for_run(run_id))

    def draw_family(self, run_id: int, pool: Sequence[T]) -> Tuple[T, T, T, int, int]:
        rng = self.rng_for_run(run_id)
        lam_bar, mu_bar, nu_bar = rng.choice(pool), rng.choice(pool), rng.choice(pool)
        return lam_bar, mu_bar, nu_bar, rng.randint(0, self.max_offset), rng.randint(0, self.max_offset)


def elapsed_ms(start: float, end: float) -> float:
    """Durée en millisecondes; 0.0 quand SOURCE_DATE_EPOCH fige la sortie."""
    if os.getenv("SOURCE_DATE_EPOCH"):
        return 0.0
    return round((end - start) * 1000.0, 3)
