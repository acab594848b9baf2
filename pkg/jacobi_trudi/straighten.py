"""Jacobi-Trudi straightening and recovery of Aguiar coefficients from stable ones.

For any integer sequence a of length l, s_a = det(h_{a_j + i - j}) with
h_0 = 1 and h_k = 0 for k < 0. Adding the staircase (l-1, ..., 1, 0) turns
the columns into h_{v_j - l + i}; permuting columns sorts v, so s_a is 0
when two v_j coincide (or one is negative) and otherwise +-s_{sorted v - staircase}.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, List, Mapping, Sequence, Tuple

from common.errors import HypothesisError, SizeMismatchError
from lr.core import SchurExpansion
from partitions.core import IntSequence, Partition, dagger, embed, format_sequence
from stability.onset import stable_aguiar, stable_component


@dataclass(frozen=True)
class SignedSchur:
    sign: int
    partition: Partition = Partition()

    def __str__(self) -> str:
        if self.sign == 0:
            return "0"
        return f"{'-' if self.sign < 0 else ''}s_{format_sequence(self.partition)}"


ZERO = SignedSchur(0)


def straighten(seq: Sequence[int]) -> SignedSchur:
    s = IntSequence(seq)
    length = len(s)
    v = [s[i] + (length - 1 - i) for i in range(length)]
    if any(x < 0 for x in v) or len(set(v)) != length:
        return ZERO
    inversions = sum(1 for i in range(length) for j in range(i + 1, length) if v[i] < v[j])
    ordered = sorted(v, reverse=True)
    parts = [ordered[i] - (length - 1 - i) for i in range(length)]
    return SignedSchur(-1 if inversions % 2 else 1, Partition(parts))


def straighten_expansion(raw: Mapping[Sequence[int], int]) -> SchurExpansion:
    """Termwise straightening of sum c_a s_a, signs carried into the coefficients."""
    sizes = {sum(seq) for seq in raw}
    if len(sizes) > 1:
        raise SizeMismatchError(f"sequences of different sizes {sorted(sizes)} in one expansion")
    acc: Dict[Partition, int] = defaultdict(int)
    for seq, coefficient in raw.items():
        term = straighten(seq)
        if term.sign:
            acc[term.partition] += term.sign * coefficient
    return SchurExpansion(acc, next(iter(sizes)) if sizes else None)


def _check_hypothesis(lam: Partition, mu: Partition, size: int) -> None:
    if not (size >= lam.size >= mu.size):
        raise HypothesisError(
            f"recovery needs |nu| >= |lambda| >= |mu|, got {size}, {lam.size}, {mu.size}"
        )


def recovery_terms(lam: Partition, mu: Partition, nu: Partition) -> List[Tuple[int, IntSequence, int]]:
    """(i, nu dagger i, abar_{lam,mu}^{nu dagger i}) for i = 1 .. 4|nu| - |lam| - |mu|."""
    _check_hypothesis(lam, mu, nu.size)
    lam_s, mu_s = IntSequence(lam), IntSequence(mu)
    # the empty triple still needs its i = 1 term
    last = max(4 * nu.size - lam.size - mu.size, 1)
    out = []
    for i in range(1, last + 1):
        seq = dagger(nu, i)
        out.append((i, seq, stable_aguiar(lam_s, mu_s, seq)))
    return out


def recover_aguiar(lam: Partition, mu: Partition, nu: Partition) -> int:
    """a_{lam,mu}^{nu} as the alternating sum of stable values at nu dagger i."""
    return sum(value if i % 2 else -value for i, _, value in recovery_terms(lam, mu, nu))


def component_from_stable(lam: Partition, mu: Partition, l: int) -> SchurExpansion:  # noqa: E741
    """(s_lam # s_mu)_l rebuilt from the stable component: re-embed every nu_bar at l and straighten."""
    _check_hypothesis(lam, mu, l)
    lam_bar, mu_bar = Partition(lam[1:]), Partition(mu[1:])
    stable = stable_component(lam_bar, mu_bar, lam.size - mu.size, l - lam.size)
    raw = {embed(nu_bar, l): c for nu_bar, c in stable.items()}
    return straighten_expansion(raw) if raw else SchurExpansion((), l)
