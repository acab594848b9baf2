"""Partitions, integer sequences and the shape arithmetic every other module builds on.

Text syntax (CLI, fixtures, cache keys): comma-separated parts, ``2,1,1``;
the empty partition is ``-`` or the empty string. Sequences use the same
syntax and may carry zeros and negatives, ``-2,3,3``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Tuple

from common.errors import EmptyPartitionError, InvalidPartitionError, PartitionSyntaxError

EMPTY_TEXT = "-"


class IntSequence(tuple):
    """Finite integer sequence. Length is significant (trailing zeros are kept)."""

    def __new__(cls, entries: Iterable[int] = ()) -> "IntSequence":
        return tuple.__new__(cls, (int(x) for x in entries))

    @property
    def size(self) -> int:
        return sum(self)

    def is_partition(self) -> bool:
        """True when the entries are weakly decreasing and nonnegative (trailing zeros allowed)."""
        prev = None
        for x in self:
            if x < 0:
                return False
            if prev is not None and x > prev:
                return False
            prev = x
        return True

    def to_partition(self) -> "Partition":
        if not self.is_partition():
            raise InvalidPartitionError(f"not a partition: {format_sequence(self)}")
        return Partition(self)

    def tail(self) -> "IntSequence":
        return IntSequence(self[1:])

    def __repr__(self) -> str:
        return f"IntSequence({format_sequence(self)})"


class Partition(tuple):
    """Weakly decreasing tuple of positive integers, stored without trailing zeros.

    Equality and hashing are those of the underlying tuple.
    """

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        values = [int(x) for x in parts]
        while values and values[-1] == 0:
            values.pop()
        for i, x in enumerate(values):
            if x <= 0 or (i > 0 and x > values[i - 1]):
                raise InvalidPartitionError(f"not a partition: {format_sequence(values)}")
        return tuple.__new__(cls, values)

    @classmethod
    def trusted(cls, parts: Tuple[int, ...]) -> "Partition":
        """Skip validation. Callers guarantee canonical form."""
        return tuple.__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def first(self) -> int:
        return self[0] if self else 0

    def part(self, i: int) -> int:
        """1-based part access, 0 past the length."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def __repr__(self) -> str:
        return f"Partition({format_sequence(self)})"

    def __str__(self) -> str:
        return format_sequence(self)


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition

    def __post_init__(self) -> None:
        if not contains(self.inner, self.outer):
            raise InvalidPartitionError(f"{self.inner} is not contained in {self.outer}")

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    def rows(self) -> list[tuple[int, int]]:
        """(start, end) column span of every row, inner padded with zeros."""
        return [(self.inner.part(i + 1), self.outer[i]) for i in range(len(self.outer))]

    def normalized(self) -> "SkewShape":
        """Drop leading rows that are entirely inside the inner shape."""
        k = 0
        while k < len(self.outer) and self.inner.part(k + 1) == self.outer[k]:
            k += 1
        if k == 0:
            return self
        return SkewShape(Partition.trusted(self.outer[k:]), Partition(self.inner[k:]))


# Text syntax


def parse_sequence(text: str) -> IntSequence:
    s = text.strip()
    if s in ("", EMPTY_TEXT):
        return IntSequence()
    try:
        return IntSequence(int(tok) for tok in s.split(","))
    except ValueError as e:
        raise PartitionSyntaxError(f"malformed sequence {text!r}") from e


def parse_partition(text: str) -> Partition:
    seq = parse_sequence(text)
    if not seq.is_partition():
        raise PartitionSyntaxError(f"not a partition: {text!r}")
    return Partition(seq)


def format_sequence(seq: Iterable[int]) -> str:
    items = list(seq)
    if not items:
        return EMPTY_TEXT
    return ",".join(str(x) for x in items)


# Operations


def embed(lam: Partition, n: int) -> IntSequence:
    """lam[n] = (n - |lam|, lam_1, lam_2, ...)."""
    return IntSequence((n - lam.size,) + tuple(lam))


def embeds_as_partition(lam: Partition, n: int) -> bool:
    return n >= lam.size + lam.first


def embed_partition(lam: Partition, n: int) -> Optional[Partition]:
    """lam[n] as a Partition, or None when it is not one."""
    if not embeds_as_partition(lam, n):
        return None
    return Partition((n - lam.size,) + tuple(lam))


def strip_first(lam: Iterable[int]) -> Partition:
    parts = tuple(lam)
    return Partition(parts[1:])


def bump_first(lam: Partition, delta: int) -> IntSequence:
    if delta not in (1, -1):
        raise ValueError(f"delta must be +1 or -1, got {delta}")
    if not lam:
        if delta == -1:
            raise EmptyPartitionError("cannot decrease the first part of the empty partition")
        return IntSequence((1,))
    return IntSequence((lam[0] + delta,) + tuple(lam[1:]))


def dagger(nu: Partition, i: int) -> IntSequence:
    """nu^{dagger i} = (nu_i - i + 1, nu_1 + 1, ..., nu_{i-1} + 1, nu_{i+1}, ...), nu_j = 0 past the length."""
    if i < 1:
        raise ValueError(f"dagger index must be >= 1, got {i}")
    head = nu.part(i) - i + 1
    shifted = [nu.part(j) + 1 for j in range(1, i)]
    rest = list(nu[i:])
    return IntSequence([head] + shifted + rest)


def contains(mu: Iterable[int], nu: Iterable[int]) -> bool:
    a = tuple(mu)
    b = tuple(nu)
    if len(a) > len(b):
        return all(x == 0 for x in a[len(b):]) and all(x <= y for x, y in zip(a, b))
    return all(x <= y for x, y in zip(a, b))


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return lam
    return Partition.trusted(tuple(sum(1 for x in lam if x > j) for j in range(lam[0])))


def syt_count(lam: Partition) -> int:
    """Hook length formula."""
    conj = conjugate(lam)
    d = math.factorial(lam.size)
    for i, row in enumerate(lam):
        for j in range(row):
            hook = (row - j) + (conj[j] - i) - 1
            d //= hook
    return d


def table_order_key(p: Partition) -> Tuple[int, Tuple[int, ...]]:
    """Size ascending, then reverse-lexicographic."""
    return (p.size, tuple(-x for x in p))


# Generators


def partitions_of(n: int, max_part: Optional[int] = None) -> Iterator[Partition]:
    """Partitions of n in reverse-lexicographic order."""
    if n < 0:
        return
    if max_part is None or max_part > n:
        max_part = n
    if n == 0:
        yield Partition.trusted(())
        return

    def rec(remaining: int, cap: int, prefix: Tuple[int, ...]) -> Iterator[Partition]:
        if remaining == 0:
            yield Partition.trusted(prefix)
            return
        for k in range(min(cap, remaining), 0, -1):
            yield from rec(remaining - k, k, prefix + (k,))

    yield from rec(n, max_part, ())


def partitions_inside(outer: Partition, size: int) -> Iterator[Partition]:
    """Partitions of `size` contained in `outer`."""
    if size < 0 or size > outer.size:
        return
    # capacity of rows i.. of outer, to prune early
    suffix = [0] * (len(outer) + 1)
    for i in range(len(outer) - 1, -1, -1):
        suffix[i] = suffix[i + 1] + outer[i]

    def rec(i: int, remaining: int, cap: int, prefix: Tuple[int, ...]) -> Iterator[Partition]:
        if remaining == 0:
            yield Partition.trusted(prefix)
            return
        if i >= len(outer):
            return
        hi = min(cap, outer[i], remaining)
        for k in range(hi, 0, -1):
            if remaining - k > min(suffix[i + 1], k * (len(outer) - i - 1)):
                break
            yield from rec(i + 1, remaining - k, k, prefix + (k,))

    yield from rec(0, size, size, ())


def partitions_containing(inner: Partition, extra: int, max_length: Optional[int] = None) -> Iterator[Partition]:
    """Partitions obtained from `inner` by adding `extra` boxes, at most `max_length` rows."""
    if extra < 0:
        return
    limit = len(inner) + extra if max_length is None else max_length
    if limit < len(inner):
        return

    def rec(i: int, remaining: int, cap: Optional[int], prefix: Tuple[int, ...]) -> Iterator[Partition]:
        base = inner.part(i + 1)
        if i >= limit:
            if remaining == 0:
                yield Partition.trusted(prefix)
            return
        if remaining == 0 and base == 0:
            yield Partition.trusted(prefix)
            return
        hi = base + remaining if cap is None else min(cap, base + remaining)
        for k in range(hi, base - 1, -1):
            if k == 0:
                if remaining == 0:
                    yield Partition.trusted(prefix)
                continue
            yield from rec(i + 1, remaining - (k - base), k, prefix + (k,))

    yield from rec(0, extra, None, ())
