"""Slow, independent reference computations used as ground truth by the tests.

Nothing here is memoized or pruned, and nothing imports the optimized
modules' enumeration code: Schur polynomials come from semistandard
tableaux, LR coefficients from polynomial multiplication, characters from
permutation modules, Jacobi-Trudi determinants from their Leibniz expansion.
Polynomials are sympy sparse ring elements over ZZ in lex order.
"""

from __future__ import annotations

import itertools
import math
from collections import defaultdict
from typing import Dict, List, Sequence, Tuple

from sympy.combinatorics.permutations import Permutation
from sympy.polys.domains import ZZ
from sympy.polys.orderings import lex
from sympy.polys.rings import PolyElement, PolyRing, ring

from common.errors import OracleRangeError, SizeMismatchError, VariableCountError
from partitions.core import IntSequence, Partition, partitions_of

MonomialPolynomial = PolyElement

MAX_PERMUTATION_DEGREE = 6


def polynomial_ring(variables: int) -> PolyRing:
    if variables < 1:
        raise VariableCountError(f"need at least one variable, got {variables}")
    return ring(f"x1:{variables + 1}", ZZ, lex)[0]


def _ssyt_contents(lam: Partition, variables: int):
    cells = [(i, j) for i, row in enumerate(lam) for j in range(row)]
    filling: Dict[Tuple[int, int], int] = {}

    def rec(k: int):
        if k == len(cells):
            content = [0] * variables
            for v in filling.values():
                content[v] += 1
            yield tuple(content)
            return
        i, j = cells[k]
        lo = 0
        if j > 0:
            lo = filling[(i, j - 1)]
        if i > 0:
            lo = max(lo, filling[(i - 1, j)] + 1)
        for v in range(lo, variables):
            filling[(i, j)] = v
            yield from rec(k + 1)
        filling.pop((i, j), None)

    yield from rec(0)


def schur_poly(lam: Partition, variables: int) -> MonomialPolynomial:
    """Sum over semistandard tableaux of shape lam, entries <= variables, of x^content."""
    if variables < len(lam):
        raise VariableCountError(f"{variables} variables cannot carry a partition of length {len(lam)}")
    R = polynomial_ring(variables)
    terms: Dict[Tuple[int, ...], int] = defaultdict(int)
    for content in _ssyt_contents(lam, variables):
        terms[content] += 1
    return R.from_dict(dict(terms))


def schur_expand(poly: MonomialPolynomial, variables: int) -> Dict[Partition, int]:
    """Schur coefficients of a symmetric polynomial by greedy leading-monomial elimination."""
    out: Dict[Partition, int] = {}
    remaining = poly
    while remaining:
        lead = remaining.LM
        coefficient = int(remaining.LC)
        shape = Partition(lead)
        out[shape] = coefficient
        remaining = remaining - schur_poly(shape, variables) * coefficient
    return out


def product_via_polynomials(lam: Partition, mu: Partition) -> Dict[Partition, int]:
    variables = max(lam.size + mu.size, 1)
    return schur_expand(schur_poly(lam, variables) * schur_poly(mu, variables), variables)


def lr_via_polynomials(lam: Partition, mu: Partition, nu: Partition) -> int:
    if lam.size + mu.size != nu.size:
        return 0
    return product_via_polynomials(lam, mu).get(nu, 0)


# Permutation modules


def permutation_classes(n: int) -> List[Tuple[Partition, int, Permutation]]:
    """(cycle type, class size, representative) by walking all of S_n."""
    if n == 0:
        return [(Partition(), 1, None)]
    buckets: Dict[Partition, List] = {}
    for images in itertools.permutations(range(n)):
        perm = Permutation(list(images), size=n)
        cycle_type = Partition(sorted(
            (length for length, count in perm.cycle_structure.items() for _ in range(count)),
            reverse=True,
        ))
        if cycle_type in buckets:
            buckets[cycle_type][0] += 1
        else:
            buckets[cycle_type] = [1, perm]
    return [(rho, size, rep) for rho, (size, rep) in sorted(buckets.items())]


def _tabloids(shape: Partition, n: int):
    """Row labels of every point, one tuple per tabloid of the given shape."""
    def rec(row: int, free: Tuple[int, ...], labels: Dict[int, int]):
        if row == len(shape):
            yield tuple(labels[x] for x in range(n))
            return
        for chosen in itertools.combinations(free, shape[row]):
            rest = tuple(x for x in free if x not in chosen)
            for x in chosen:
                labels[x] = row
            yield from rec(row + 1, rest, labels)

    yield from rec(0, tuple(range(n)), {})


def _fixed_tabloids(shape: Partition, perm: Permutation, n: int) -> int:
    images = perm.array_form if perm is not None else []
    return sum(
        1 for labels in _tabloids(shape, n)
        if all(labels[images[x]] == labels[x] for x in range(n))
    )


def irreducible_characters_via_perm_modules(n: int) -> Tuple[List[Tuple[Partition, int]], Dict[Partition, List[int]]]:
    """Character table of S_n from permutation-module characters, unitriangular elimination.

    Shapes are treated from (n) down in reverse-lex order; each permutation
    character minus its components on the shapes already done is irreducible.
    """
    if n > MAX_PERMUTATION_DEGREE:
        raise OracleRangeError(f"permutation-module oracle limited to n <= {MAX_PERMUTATION_DEGREE}, got {n}")
    classes = permutation_classes(n)
    order = math.factorial(n)

    def inner(f: Sequence[int], g: Sequence[int]) -> int:
        total = sum(size * a * b for (_, size, _), a, b in zip(classes, f, g))
        return total // order

    table: Dict[Partition, List[int]] = {}
    for shape in partitions_of(n):
        chi = [_fixed_tabloids(shape, rep, n) for _, _, rep in classes]
        for psi in table.values():
            k = inner(chi, psi)
            if k:
                chi = [a - k * b for a, b in zip(chi, psi)]
        table[shape] = chi
    return [(rho, size) for rho, size, _ in classes], table


def kronecker_from_table(classes: List[Tuple[Partition, int]], table: Dict[Partition, List[int]],
                         lam: Partition, mu: Partition, nu: Partition) -> int:
    order = sum(size for _, size in classes)
    total = sum(size * a * b * c for (_, size), a, b, c in zip(classes, table[lam], table[mu], table[nu]))
    return total // order


def kronecker_via_perm_modules(lam: Partition, mu: Partition, nu: Partition) -> int:
    if not (lam.size == mu.size == nu.size):
        raise SizeMismatchError(f"sizes {lam.size}, {mu.size}, {nu.size} differ")
    classes, table = irreducible_characters_via_perm_modules(lam.size)
    return kronecker_from_table(classes, table, lam, mu, nu)


# Jacobi-Trudi


def jacobi_trudi_h_expansion(seq: Sequence[int]) -> Dict[Tuple[int, ...], int]:
    """det(h_{a_j + i - j}) expanded over permutations; keys are sorted h-index tuples, h_0 dropped."""
    a = IntSequence(seq)
    length = len(a)
    out: Dict[Tuple[int, ...], int] = defaultdict(int)
    for sigma in itertools.permutations(range(length)):
        indices = []
        for i in range(length):
            k = a[sigma[i]] + i - sigma[i]
            if k < 0:
                break
            if k:
                indices.append(k)
        else:
            out[tuple(sorted(indices, reverse=True))] += Permutation(list(sigma)).signature() if length else 1
    return {k: v for k, v in out.items() if v}


def complete_homogeneous(k: int, variables: int) -> MonomialPolynomial:
    R = polynomial_ring(variables)
    terms: Dict[Tuple[int, ...], int] = defaultdict(int)
    for combo in itertools.combinations_with_replacement(range(variables), k):
        exponent = [0] * variables
        for x in combo:
            exponent[x] += 1
        terms[tuple(exponent)] += 1
    return R.from_dict(dict(terms))


def jacobi_trudi_determinant(seq: Sequence[int], variables: int) -> MonomialPolynomial:
    if variables < len(seq):
        raise VariableCountError(f"{variables} variables for a sequence of length {len(seq)}")
    R = polynomial_ring(variables)
    total = R.zero
    for indices, sign in jacobi_trudi_h_expansion(seq).items():
        term = R.one * sign
        for k in indices:
            term = term * complete_homogeneous(k, variables)
        total = total + term
    return total


def syt_count_by_enumeration(lam: Partition) -> int:
    """Standard tableaux counted by removing the cell holding the largest entry."""
    if not lam:
        return 1
    total = 0
    for i in range(len(lam)):
        if i + 1 == len(lam) or lam[i] > lam[i + 1]:
            smaller = list(lam)
            smaller[i] -= 1
            total += syt_count_by_enumeration(Partition(smaller))
    return total
