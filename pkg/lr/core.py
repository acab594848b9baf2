"""Littlewood-Richardson coefficients and Schur-basis products.

c_{lam,mu}^{nu} counts the semistandard fillings of the skew shape nu/mu with
content lam whose reading word (rows right to left, top to bottom) is a lattice
word. Fillings are built cell by cell in reading order, so the lattice
condition is checked on every prefix and dead branches are cut at once.
"""

from __future__ import annotations

from collections import defaultdict
from functools import lru_cache
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Tuple, Union

from memo.store import MEMO
from partitions.core import (
    IntSequence,
    Partition,
    SkewShape,
    contains,
    format_sequence,
    partitions_containing,
    partitions_inside,
)

PartitionLike = Union[Partition, IntSequence, Tuple[int, ...]]


def as_partition(x: PartitionLike) -> Optional[Partition]:
    """Partition view of `x`, or None when `x` is not a partition (extended convention: coefficient 0)."""
    if isinstance(x, Partition):
        return x
    seq = IntSequence(x)
    if not seq.is_partition():
        return None
    return Partition(seq)


class SchurExpansion(Mapping[Partition, int]):
    """Homogeneous element sum c_nu s_nu. Zero coefficients are never stored."""

    __slots__ = ("_terms", "degree")

    def __init__(
        self,
        terms: Union[Mapping[Partition, int], Iterable[Tuple[Partition, int]], None] = None,
        degree: Optional[int] = None,
    ) -> None:
        acc: Dict[Partition, int] = defaultdict(int)
        items = terms.items() if isinstance(terms, Mapping) else (terms or ())
        for p, c in items:
            key = p if isinstance(p, Partition) else Partition(p)
            acc[key] += int(c)
        data = {p: c for p, c in acc.items() if c != 0}
        sizes = {p.size for p in data}
        if len(sizes) > 1:
            raise ValueError(f"mixed degrees in a Schur expansion: {sorted(sizes)}")
        if degree is None:
            degree = next(iter(sizes)) if sizes else None
        elif sizes and sizes != {degree}:
            raise ValueError(f"terms of size {sizes.pop()} in an expansion of degree {degree}")
        self._terms = data
        self.degree = degree

    def __getitem__(self, key: Partition) -> int:
        return self._terms[key]

    def __iter__(self) -> Iterator[Partition]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def coefficient(self, p: PartitionLike) -> int:
        q = as_partition(p)
        if q is None:
            return 0
        return self._terms.get(q, 0)

    def sorted_terms(self) -> List[Tuple[Partition, int]]:
        """Reverse-lexicographic order."""
        return sorted(self._terms.items(), key=lambda kv: kv[0], reverse=True)

    def scaled(self, k: int) -> "SchurExpansion":
        return SchurExpansion({p: k * c for p, c in self._terms.items()}, self.degree)

    def __add__(self, other: "SchurExpansion") -> "SchurExpansion":
        acc: Dict[Partition, int] = defaultdict(int)
        for src in (self, other):
            for p, c in src.items():
                acc[p] += c
        return SchurExpansion(acc, self.degree if self.degree is not None else other.degree)

    def __neg__(self) -> "SchurExpansion":
        return self.scaled(-1)

    def __sub__(self, other: "SchurExpansion") -> "SchurExpansion":
        return self + (-other)

    def __repr__(self) -> str:
        body = ", ".join(f"{format_sequence(p)}: {c}" for p, c in self.sorted_terms())
        return f"SchurExpansion({{{body}}}, degree={self.degree})"


def _count_lr_fillings(shape: SkewShape, weight: Partition) -> int:
    shape = shape.normalized()
    rows = shape.rows()
    cells: List[Tuple[int, int]] = []
    for r, (start, end) in enumerate(rows):
        for j in range(end - 1, start - 1, -1):
            cells.append((r, j))
    if len(cells) != weight.size:
        return 0
    if not cells:
        return 1

    letters = len(weight)
    filled: List[Dict[int, int]] = [dict() for _ in rows]
    counts = [0] * (letters + 1)

    def rec(k: int) -> int:
        if k == len(cells):
            return 1
        r, j = cells[k]
        start, end = rows[r]
        hi = letters
        if j + 1 < end:
            hi = min(hi, filled[r][j + 1])
        # entries in row r of an LR filling never exceed r + 1
        hi = min(hi, r + 1)
        lo = 1
        if r > 0:
            above_start, above_end = rows[r - 1]
            if above_start <= j < above_end:
                lo = filled[r - 1][j] + 1
        total = 0
        for v in range(lo, hi + 1):
            if counts[v] >= weight[v - 1]:
                continue
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            counts[v] += 1
            filled[r][j] = v
            total += rec(k + 1)
            counts[v] -= 1
        filled[r].pop(j, None)
        return total

    return rec(0)


def lr_coefficient(lam: PartitionLike, mu: PartitionLike, nu: PartitionLike) -> int:
    a, b, c = as_partition(lam), as_partition(mu), as_partition(nu)
    if a is None or b is None or c is None:
        return 0
    if a.size + b.size != c.size:
        return 0
    if not contains(a, c) or not contains(b, c):
        return 0
    if len(c) > len(a) + len(b) or c.first > a.first + b.first:
        return 0
    cached = MEMO.get("lr", a, b, c)
    if cached is not None:
        return cached
    # fill the smaller factor into the skew shape cut by the larger one
    weight, inner = (a, b) if (a.size, a) <= (b.size, b) else (b, a)
    value = _count_lr_fillings(SkewShape(c, inner), weight)
    MEMO.put("lr", a, b, c, value)
    return value


@lru_cache(maxsize=None)
def _schur_product(small: Partition, big: Partition) -> SchurExpansion:
    degree = small.size + big.size
    terms: Dict[Partition, int] = {}
    for nu in partitions_containing(big, small.size, len(big) + len(small)):
        if nu.first > big.first + small.first or not contains(small, nu):
            continue
        c = lr_coefficient(small, big, nu)
        if c:
            terms[nu] = c
    return SchurExpansion(terms, degree)


def schur_product(lam: Partition, mu: Partition) -> SchurExpansion:
    """s_lam * s_mu in the Schur basis (ordinary product)."""
    small, big = (lam, mu) if (lam.size, lam) <= (mu.size, mu) else (mu, lam)
    return _schur_product(small, big)


@lru_cache(maxsize=None)
def skew_expansion(outer: Partition, inner: Partition) -> SchurExpansion:
    """s_{outer/inner} = sum_beta c_{inner,beta}^{outer} s_beta."""
    size = outer.size - inner.size
    if size < 0 or not contains(inner, outer):
        return SchurExpansion((), max(size, 0))
    terms: Dict[Partition, int] = {}
    for beta in partitions_inside(outer, size):
        c = lr_coefficient(inner, beta, outer)
        if c:
            terms[beta] = c
    return SchurExpansion(terms, size)


def product_of_expansions(left: SchurExpansion, right: SchurExpansion) -> SchurExpansion:
    acc: Dict[Partition, int] = defaultdict(int)
    for p, c in left.items():
        for q, d in right.items():
            for nu, e in schur_product(p, q).items():
                acc[nu] += c * d * e
    degree = None
    if left.degree is not None and right.degree is not None:
        degree = left.degree + right.degree
    return SchurExpansion(acc, degree)
