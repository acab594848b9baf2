"""Heisenberg product of Schur functions and its structure constants.

For |lam| = n, |mu| = m and max(n, m) <= l <= n + m, the degree-l component
of s_lam # s_mu is

    sum  c_{alpha,beta}^{lam} c_{eta,rho}^{mu} g_{beta,eta,delta}
         c_{alpha,delta}^{tau} c_{tau,rho}^{nu} s_nu

over alpha |- a, beta, eta |- b, rho |- c with a = l - m, b = n + m - l,
c = l - n. The first two factors are skew expansions, the middle one a
Kronecker product and the last two ordinary products, so each component is
evaluated on its own, without enumerating the other degrees.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Tuple, Union

from common.errors import DegreeRangeError
from kronecker.core import kronecker_product
from lr.core import PartitionLike, SchurExpansion, as_partition, product_of_expansions, skew_expansion
from memo.store import MEMO
from partitions.core import Partition, format_sequence, partitions_of


@dataclass(frozen=True)
class HeisenbergIndex:
    n: int
    m: int
    l: int
    a: int
    b: int
    c: int


def heisenberg_index(n: int, m: int, l: int) -> HeisenbergIndex:
    if not (max(n, m) <= l <= n + m):
        raise DegreeRangeError(f"degree {l} outside [{max(n, m)}, {n + m}] for sizes {n} and {m}")
    return HeisenbergIndex(n=n, m=m, l=l, a=l - m, b=n + m - l, c=l - n)


class GradedExpansion(Mapping[int, SchurExpansion]):
    """Finite sum of homogeneous Schur expansions keyed by degree. Empty components are dropped."""

    __slots__ = ("_components",)

    def __init__(self, components: Union[Mapping[int, SchurExpansion], Iterable[Tuple[int, SchurExpansion]], None] = None):
        items = components.items() if isinstance(components, Mapping) else (components or ())
        acc: Dict[int, SchurExpansion] = {}
        for degree, exp in items:
            acc[degree] = acc[degree] + exp if degree in acc else exp
        self._components = {d: e for d, e in acc.items() if len(e)}

    @classmethod
    def from_schur(cls, exp: SchurExpansion) -> "GradedExpansion":
        if exp.degree is None:
            return cls()
        return cls({exp.degree: exp})

    @classmethod
    def single(cls, lam: Partition, coefficient: int = 1) -> "GradedExpansion":
        return cls({lam.size: SchurExpansion({lam: coefficient}, lam.size)})

    def __getitem__(self, degree: int) -> SchurExpansion:
        return self._components[degree]

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self._components, reverse=True))

    def __len__(self) -> int:
        return len(self._components)

    def component(self, degree: int) -> SchurExpansion:
        return self._components.get(degree, SchurExpansion((), degree))

    def terms(self) -> Iterator[Tuple[int, Partition, int]]:
        """(degree, partition, coefficient), degrees descending, partitions reverse-lex."""
        for degree in self:
            for p, c in self._components[degree].sorted_terms():
                yield degree, p, c

    def scaled(self, k: int) -> "GradedExpansion":
        return GradedExpansion({d: e.scaled(k) for d, e in self._components.items()})

    def __add__(self, other: "GradedExpansion") -> "GradedExpansion":
        return GradedExpansion(list(self._components.items()) + list(other._components.items()))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, GradedExpansion):
            return self._components == other._components
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple((d, tuple(sorted(e.items()))) for d, e in sorted(self._components.items())))

    def __repr__(self) -> str:
        parts = []
        for degree in self:
            body = ", ".join(f"{format_sequence(p)}: {c}" for p, c in self._components[degree].sorted_terms())
            parts.append(f"{degree}: {{{body}}}")
        return "GradedExpansion({" + ", ".join(parts) + "})"


@lru_cache(maxsize=None)
def _component(lam: Partition, mu: Partition, l: int) -> SchurExpansion:
    idx = heisenberg_index(lam.size, mu.size, l)
    acc: Dict[Partition, int] = defaultdict(int)
    for alpha in partitions_of(idx.a):
        left = skew_expansion(lam, alpha)
        if not left:
            continue
        for rho in partitions_of(idx.c):
            right = skew_expansion(mu, rho)
            if not right:
                continue
            middle: Dict[Partition, int] = defaultdict(int)
            for beta, cb in left.items():
                for eta, ce in right.items():
                    for delta, g in kronecker_product(beta, eta).items():
                        middle[delta] += cb * ce * g
            spread = product_of_expansions(SchurExpansion({alpha: 1}, idx.a), SchurExpansion(middle, idx.b))
            for nu, v in product_of_expansions(spread, SchurExpansion({rho: 1}, idx.c)).items():
                acc[nu] += v
    return SchurExpansion(acc, l)


def heisenberg_component(lam: Partition, mu: Partition, l: int) -> SchurExpansion:
    """(s_lam # s_mu)_l. Raises DegreeRangeError outside [max(|lam|,|mu|), |lam|+|mu|]."""
    heisenberg_index(lam.size, mu.size, l)
    return _component(lam, mu, l)


def heisenberg_product(lam: Partition, mu: Partition) -> GradedExpansion:
    lo, hi = max(lam.size, mu.size), lam.size + mu.size
    return GradedExpansion({l: _component(lam, mu, l) for l in range(lo, hi + 1)})


def aguiar_coefficient(lam: PartitionLike, mu: PartitionLike, nu: PartitionLike) -> int:
    """a_{lam,mu}^{nu}; 0 for a non-partition argument or |nu| outside the degree range."""
    a, b, c = as_partition(lam), as_partition(mu), as_partition(nu)
    if a is None or b is None or c is None:
        return 0
    l = c.size
    if not (max(a.size, b.size) <= l <= a.size + b.size):
        return 0
    cached = MEMO.get("aguiar", a, b, c)
    if cached is not None:
        return cached
    comp = _component(a, b, l)
    for p, v in comp.items():
        MEMO.put("aguiar", a, b, p, v)
    value = comp.coefficient(c)
    MEMO.put("aguiar", a, b, c, value)
    return value


def sharp(left: GradedExpansion, right: GradedExpansion) -> GradedExpansion:
    """Bilinear extension of the Heisenberg product to finite Schur sums."""
    out: List[Tuple[int, SchurExpansion]] = []
    for _, p, c in left.terms():
        for _, q, d in right.terms():
            for degree, exp in heisenberg_product(p, q).items():
                out.append((degree, exp.scaled(c * d)))
    return GradedExpansion(out)


def top_and_bottom(lam: Partition, mu: Partition) -> Tuple[SchurExpansion, Optional[SchurExpansion]]:
    """Top component (ordinary product) and, for |lam| = |mu|, the bottom one (Kronecker product)."""
    top = heisenberg_component(lam, mu, lam.size + mu.size)
    bottom = heisenberg_component(lam, mu, lam.size) if lam.size == mu.size else None
    return top, bottom
