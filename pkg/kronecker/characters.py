"""Conjugacy classes of S_n and irreducible characters by the Murnaghan-Nakayama rule."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Tuple

from common.errors import SizeMismatchError
from partitions.core import Partition, partitions_of


@dataclass(frozen=True)
class ConjugacyClass:
    cycle_type: Partition
    class_size: int


def centralizer_order(rho: Partition) -> int:
    """z_rho = prod_k k^{m_k} m_k!"""
    z = 1
    for k, m in Counter(rho).items():
        z *= k**m * math.factorial(m)
    return z


@lru_cache(maxsize=None)
def class_table(n: int) -> Tuple[ConjugacyClass, ...]:
    fact = math.factorial(n)
    out = [ConjugacyClass(rho, fact // centralizer_order(rho)) for rho in partitions_of(n)]
    out.reverse()
    return tuple(out)


def conjugacy_classes(n: int) -> List[ConjugacyClass]:
    """One entry per partition of n, lexicographically increasing cycle types."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    return list(class_table(n))


def _beta_set(lam: Partition) -> Tuple[int, ...]:
    length = len(lam)
    return tuple(lam[i] + (length - 1 - i) for i in range(length))


def _from_beta_set(beta: List[int]) -> Partition:
    beta = sorted(beta, reverse=True)
    length = len(beta)
    parts = [beta[i] - (length - 1 - i) for i in range(length)]
    while parts and parts[-1] == 0:
        parts.pop()
    return Partition.trusted(tuple(parts))


@lru_cache(maxsize=None)
def _chi(lam: Partition, rho: Partition) -> int:
    if not rho:
        return 1 if not lam else 0
    k = rho[0]
    rest = Partition.trusted(rho[1:])
    beta = _beta_set(lam)
    occupied = set(beta)
    total = 0
    # removing a border strip of length k = sliding one bead k positions down
    for b in beta:
        target = b - k
        if target < 0 or target in occupied:
            continue
        height = sum(1 for x in beta if target < x < b)
        new_beta = [x for x in beta if x != b] + [target]
        value = _chi(_from_beta_set(new_beta), rest)
        total += -value if height % 2 else value
    return total


def character(lam: Partition, rho: Partition) -> int:
    """chi_lam(rho), border strips removed largest part of rho first."""
    if lam.size != rho.size:
        raise SizeMismatchError(f"character of a partition of {lam.size} on a class of {rho.size}")
    return _chi(lam, rho)


@lru_cache(maxsize=None)
def character_row(lam: Partition) -> Tuple[int, ...]:
    """chi_lam on every class of S_|lam|, in conjugacy_classes order."""
    return tuple(_chi(lam, cls.cycle_type) for cls in class_table(lam.size))
