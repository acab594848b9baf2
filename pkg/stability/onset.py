"""Stable Aguiar coefficients and where the families a_{lam[n],mu[n-d]}^{nu[n+h]} stop moving.

Reduced data: an integer sequence whose tail (second entry on) is a
partition. Only the tail and the sizes matter; d = |lam| - |mu| and
h = |nu| - |lam| fix the family. The degree-(n+h) component of
s_{lam_bar[n]} # s_{mu_bar[n-d]} is constant under nu_bar[n+h] <-> nu_bar from
n = |lam_bar| + |mu_bar| + lam_bar_1 + mu_bar_1 + 3h + 2d on, and not before.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from common.errors import NegativeOffsetError, ReducedDataError
from heisenberg.product import aguiar_coefficient, heisenberg_component
from partitions.core import (
    IntSequence,
    Partition,
    embed_partition,
    format_sequence,
    strip_first,
    table_order_key,
)

ReducedComponent = Dict[Partition, int]


@dataclass(frozen=True)
class ReducedTriple:
    lam_bar: Partition
    mu_bar: Partition
    nu_bar: Partition
    d: int
    h: int


def _tail(seq: Sequence[int], label: str) -> Partition:
    s = IntSequence(seq)
    tail = s.tail()
    if not tail.is_partition():
        raise ReducedDataError(f"{label}: tail of {format_sequence(s)} is not a partition")
    return Partition(tail)


def reduce_triple(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> ReducedTriple:
    """Reduced data of a triple. Swaps lam and mu when |lam| < |mu| so that d >= 0."""
    lam_s, mu_s, nu_s = IntSequence(lam), IntSequence(mu), IntSequence(nu)
    lam_bar = _tail(lam_s, "lambda")
    mu_bar = _tail(mu_s, "mu")
    nu_bar = _tail(nu_s, "nu")
    if lam_s.size < mu_s.size:
        lam_s, mu_s = mu_s, lam_s
        lam_bar, mu_bar = mu_bar, lam_bar
    return ReducedTriple(lam_bar, mu_bar, nu_bar, d=lam_s.size - mu_s.size, h=nu_s.size - lam_s.size)


def _check_offsets(d: int, h: int) -> None:
    if d < 0 or h < 0:
        raise NegativeOffsetError(f"offsets must be nonnegative, got d={d}, h={h}")


def stabilization_bound(lam_bar: Partition, mu_bar: Partition, d: int, h: int) -> int:
    _check_offsets(d, h)
    return lam_bar.size + mu_bar.size + lam_bar.first + mu_bar.first + 3 * h + 2 * d


def _first_valid_n(lam_bar: Partition, mu_bar: Partition, d: int) -> int:
    return max(lam_bar.size + lam_bar.first, mu_bar.size + mu_bar.first + d, d)


def component_at(lam_bar: Partition, mu_bar: Partition, d: int, h: int, n: int) -> Optional[ReducedComponent]:
    """(s_{lam_bar[n]} # s_{mu_bar[n-d]})_{n+h} keyed by nu_bar; None when an embed is not a partition."""
    lam = embed_partition(lam_bar, n)
    mu = embed_partition(mu_bar, n - d)
    if lam is None or mu is None:
        return None
    if not (max(lam.size, mu.size) <= n + h <= lam.size + mu.size):
        return {}
    return {strip_first(nu): c for nu, c in heisenberg_component(lam, mu, n + h).items()}


@lru_cache(maxsize=None)
def _stable_component(lam_bar: Partition, mu_bar: Partition, d: int, h: int) -> Tuple[Tuple[Partition, int], ...]:
    n = max(stabilization_bound(lam_bar, mu_bar, d, h), _first_valid_n(lam_bar, mu_bar, d))
    comp = component_at(lam_bar, mu_bar, d, h, n) or {}
    return tuple(sorted(comp.items(), key=lambda kv: table_order_key(kv[0])))


def stable_component(lam_bar: Partition, mu_bar: Partition, d: int, h: int) -> ReducedComponent:
    """The stable component in reduced indexing, evaluated once at the stabilization bound."""
    _check_offsets(d, h)
    return dict(_stable_component(lam_bar, mu_bar, d, h))


def stable_aguiar(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    """abar_{lam,mu}^{nu} for reduced data; 0 when h < 0."""
    t = reduce_triple(lam, mu, nu)
    if t.h < 0:
        return 0
    bound = stabilization_bound(t.lam_bar, t.mu_bar, t.d, t.h)
    # nu_bar only embeds past the bound, where the component no longer changes
    if t.nu_bar.size + t.nu_bar.first > bound + t.h:
        return 0
    return stable_component(t.lam_bar, t.mu_bar, t.d, t.h).get(t.nu_bar, 0)


def stabilization_onset(lam_bar: Partition, mu_bar: Partition, d: int, h: int) -> int:
    """Smallest n whose reduced component equals the stable one."""
    bound = stabilization_bound(lam_bar, mu_bar, d, h)
    stable = stable_component(lam_bar, mu_bar, d, h)
    for n in range(_first_valid_n(lam_bar, mu_bar, d), bound + 1):
        if component_at(lam_bar, mu_bar, d, h, n) == stable:
            return n
    return bound


def coefficient_at(lam_bar: Partition, mu_bar: Partition, nu_bar: Partition, d: int, h: int, n: int) -> Optional[int]:
    """a_{lam_bar[n],mu_bar[n-d]}^{nu_bar[n+h]}; None when lam_bar[n] or mu_bar[n-d] is not a partition."""
    lam = embed_partition(lam_bar, n)
    mu = embed_partition(mu_bar, n - d)
    if lam is None or mu is None:
        return None
    nu = embed_partition(nu_bar, n + h)
    if nu is None:
        return 0
    return aguiar_coefficient(lam, mu, nu)


def coefficient_onset(lam_bar: Partition, mu_bar: Partition, nu_bar: Partition, d: int, h: int) -> int:
    bound = stabilization_bound(lam_bar, mu_bar, d, h)
    target = stable_component(lam_bar, mu_bar, d, h).get(nu_bar, 0)
    for n in range(_first_valid_n(lam_bar, mu_bar, d), bound + 1):
        if coefficient_at(lam_bar, mu_bar, nu_bar, d, h, n) == target:
            return n
    return bound


def recovery_bound(lam_bar: Partition, mu_bar: Partition, nu_bar: Partition, d: int, h: int) -> int:
    """Smallest integer n >= (|lam|+|mu|+|nu|+lam_1+mu_1+nu_1-1)/2 + h + d on the reduced data."""
    _check_offsets(d, h)
    num = lam_bar.size + mu_bar.size + nu_bar.size + lam_bar.first + mu_bar.first + nu_bar.first - 1
    return -(-num // 2) + h + d


def tightness_witness(lam_bar: Partition, mu_bar: Partition, d: int, h: int) -> Partition:
    """nu |- bound + h with nu_1 = nu_2 = lam_bar_1 + mu_bar_1 + 2h + d, nonzero at the bound."""
    _check_offsets(d, h)
    top = lam_bar.first + mu_bar.first + 2 * h + d
    rest = [lam_bar.part(i) + mu_bar.part(i) for i in range(2, max(len(lam_bar), len(mu_bar)) + 1)]
    return Partition([top, top] + rest)


@dataclass
class StabilityTable:
    lam_bar: Partition
    mu_bar: Partition
    d: int
    h: int
    columns: List[Partition]
    rows: Dict[int, Optional[ReducedComponent]]
    bound: int
    onset: int
    coefficient_onsets: Dict[Partition, int]
    recovery_bounds: Dict[Partition, int]

    def value(self, n: int, nu_bar: Partition) -> Optional[int]:
        row = self.rows.get(n)
        if row is None:
            return None
        return row.get(nu_bar, 0)


def stability_table(lam_bar: Partition, mu_bar: Partition, d: int, h: int, n_min: int, n_max: int) -> StabilityTable:
    """Rows n_min..n_max of reduced components, columns in size then reverse-lex order."""
    _check_offsets(d, h)
    rows = {n: component_at(lam_bar, mu_bar, d, h, n) for n in range(n_min, n_max + 1)}
    stable = stable_component(lam_bar, mu_bar, d, h)
    support = set(stable)
    for row in rows.values():
        if row:
            support.update(row)
    columns = sorted(support, key=table_order_key)
    return StabilityTable(
        lam_bar=lam_bar,
        mu_bar=mu_bar,
        d=d,
        h=h,
        columns=columns,
        rows=rows,
        bound=stabilization_bound(lam_bar, mu_bar, d, h),
        onset=stabilization_onset(lam_bar, mu_bar, d, h),
        coefficient_onsets={nu: coefficient_onset(lam_bar, mu_bar, nu, d, h) for nu in columns},
        recovery_bounds={nu: recovery_bound(lam_bar, mu_bar, nu, d, h) for nu in columns},
    )
