"""Kronecker coefficients g_{lam,mu,nu} and their reduced (stable) versions.

g is the inner product of three irreducible characters of S_n, summed over
conjugacy classes and divided by n!. The reduced coefficient gbar is g read
off at lam_bar[n], mu_bar[n], nu_bar[n] for n large enough that it no longer
changes.
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Dict

from common.errors import SizeMismatchError
from kronecker.characters import class_table, character_row
from lr.core import PartitionLike, SchurExpansion, as_partition
from memo.store import MEMO
from partitions.core import Partition, embed_partition, partitions_of, strip_first


def _inner_product(lam: Partition, mu: Partition, nu: Partition) -> int:
    n = lam.size
    classes = class_table(n)
    a, b, c = character_row(lam), character_row(mu), character_row(nu)
    total = sum(cls.class_size * x * y * z for cls, x, y, z in zip(classes, a, b, c))
    q, r = divmod(total, math.factorial(n))
    if r:
        raise ArithmeticError(f"character sum {total} for ({lam}, {mu}, {nu}) is not divisible by {n}!")
    return q


def kronecker_coefficient(lam: PartitionLike, mu: PartitionLike, nu: PartitionLike) -> int:
    """g_{lam,mu,nu}; 0 when the sizes differ or an argument is not a partition."""
    a, b, c = as_partition(lam), as_partition(mu), as_partition(nu)
    if a is None or b is None or c is None:
        return 0
    if not (a.size == b.size == c.size):
        return 0
    cached = MEMO.get("kron", a, b, c)
    if cached is not None:
        return cached
    value = _inner_product(a, b, c)
    MEMO.put("kron", a, b, c, value)
    return value


@lru_cache(maxsize=None)
def _kronecker_product(lam: Partition, mu: Partition) -> SchurExpansion:
    terms: Dict[Partition, int] = {}
    for nu in partitions_of(lam.size):
        g = kronecker_coefficient(lam, mu, nu)
        if g:
            terms[nu] = g
    return SchurExpansion(terms, lam.size)


def kronecker_product(lam: Partition, mu: Partition) -> SchurExpansion:
    """s_lam * s_mu (internal product), as sum_nu g_{lam,mu,nu} s_nu."""
    if lam.size != mu.size:
        raise SizeMismatchError(f"Kronecker product of partitions of {lam.size} and {mu.size}")
    a, b = (lam, mu) if lam <= mu else (mu, lam)
    return _kronecker_product(a, b)


def _reduced_point(lam: Partition, mu: Partition, nu: Partition = Partition()) -> int:
    return max(
        lam.size + mu.size + lam.first + mu.first,
        lam.size + lam.first,
        mu.size + mu.first,
        nu.size + nu.first,
    )


def reduced_kronecker(lam_bar: Partition, mu_bar: Partition, nu_bar: Partition) -> int:
    """gbar: g_{lam[n],mu[n],nu[n]} for n past the point where it stops moving."""
    n = _reduced_point(lam_bar, mu_bar, nu_bar)
    return kronecker_coefficient(
        embed_partition(lam_bar, n), embed_partition(mu_bar, n), embed_partition(nu_bar, n)
    )


def reduced_kronecker_expansion(lam_bar: Partition, mu_bar: Partition) -> Dict[Partition, int]:
    """Every nonzero gbar_{lam_bar,mu_bar}^{nu_bar}, keyed by nu_bar.

    Supported on |nu_bar| <= |lam_bar| + |mu_bar|; at top size the values
    are the Littlewood-Richardson coefficients.
    """
    n = _reduced_point(lam_bar, mu_bar)
    product = kronecker_product(embed_partition(lam_bar, n), embed_partition(mu_bar, n))
    return {strip_first(nu): g for nu, g in product.items()}

