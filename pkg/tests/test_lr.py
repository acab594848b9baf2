import os
import sys
import unittest
from pathlib import Path

from hypothesis import given, settings, strategies as st

ROOT = Path(__file__).resolve().parent.parent
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from lr.core import (  # noqa: E402
    SchurExpansion,
    _count_lr_fillings,
    lr_coefficient,
    product_of_expansions,
    schur_product,
    skew_expansion,
)
from oracle.reference import product_via_polynomials  # noqa: E402
from partitions.core import IntSequence, Partition, SkewShape, bump_first, contains, partitions_of, syt_count  # noqa: E402

SLOW = bool(os.getenv("SHARPSTAB_SLOW"))


def small_partitions(max_size):
    return [p for k in range(max_size + 1) for p in partitions_of(k)]


pick = st.sampled_from(small_partitions(4))


class TestCoefficients(unittest.TestCase):
    def test_examples(self) -> None:
        self.assertEqual(lr_coefficient(Partition((2, 1)), Partition((2, 1)), Partition((3, 2, 1))), 2)
        self.assertEqual(lr_coefficient(Partition((1,)), Partition((1,)), Partition((1, 1))), 1)
        self.assertEqual(lr_coefficient(Partition((2,)), Partition((2,)), Partition((2, 1, 1))), 0)

    def test_extended_convention(self) -> None:
        self.assertEqual(lr_coefficient(IntSequence((1, 2)), Partition((1,)), Partition((2, 2))), 0)
        self.assertEqual(lr_coefficient(Partition((1,)), Partition((1,)), IntSequence((-1, 3))), 0)
        self.assertEqual(lr_coefficient(Partition((1,)), Partition((1,)), Partition((3,))), 0)

    def test_empty_factor(self) -> None:
        nu = Partition((3, 1))
        self.assertEqual(lr_coefficient(Partition(), nu, nu), 1)
        self.assertEqual(schur_product(Partition(), nu), SchurExpansion({nu: 1}))

    def test_product_dimension(self) -> None:
        # |lam|+|mu| choose |lam| times f^lam f^mu
        lam, mu = Partition((2, 1)), Partition((2, 1))
        total = sum(c * syt_count(nu) for nu, c in schur_product(lam, mu).items())
        self.assertEqual(total, 20 * syt_count(lam) * syt_count(mu))

    def test_pieri(self) -> None:
        for lam in small_partitions(4):
            product = schur_product(lam, Partition((1,)))
            self.assertEqual(set(product.values()), {1})
            # one new box per distinct part, plus a new row
            self.assertEqual(len(product), len(set(lam)) + 1)

    def test_skew_expansion(self) -> None:
        self.assertEqual(
            skew_expansion(Partition((2, 1)), Partition((1,))),
            SchurExpansion({Partition((2,)): 1, Partition((1, 1)): 1}),
        )
        self.assertEqual(len(skew_expansion(Partition((2,)), Partition((1, 1)))), 0)

    def test_product_of_expansions(self) -> None:
        one = SchurExpansion({Partition((1,)): 1})
        self.assertEqual(
            product_of_expansions(one, one),
            SchurExpansion({Partition((2,)): 1, Partition((1, 1)): 1}),
        )

    @settings(max_examples=60, deadline=None)
    @given(pick, pick)
    def test_symmetry(self, lam: Partition, mu: Partition) -> None:
        # nu/mu filled with content lam against nu/lam filled with content mu
        for nu in partitions_of(lam.size + mu.size):
            if contains(mu, nu) and contains(lam, nu):
                self.assertEqual(
                    _count_lr_fillings(SkewShape(nu, mu), lam),
                    _count_lr_fillings(SkewShape(nu, lam), mu),
                    msg=f"{lam} {mu} {nu}",
                )

    def test_against_polynomial_multiplication(self) -> None:
        limit = 8 if SLOW else 5
        pool = small_partitions(limit)
        for lam in pool:
            for mu in pool:
                if lam.size + mu.size > limit or lam > mu:
                    continue
                self.assertEqual(dict(schur_product(lam, mu)), product_via_polynomials(lam, mu), msg=f"{lam} {mu}")


class TestShiftIdentities(unittest.TestCase):
    """Adding one box to the first rows of mu and nu, when nu (or mu) has a long enough first row."""

    def _triples(self):
        for lam in small_partitions(3):
            for mu in small_partitions(5):
                for nu in partitions_of(lam.size + mu.size):
                    yield lam, mu, nu

    def test_shift_when_first_row_is_long(self) -> None:
        for lam, mu, nu in self._triples():
            if nu.part(1) - nu.part(2) < lam.size and mu.part(1) - mu.part(2) < lam.size:
                continue
            shifted = lr_coefficient(lam, bump_first(mu, 1), bump_first(nu, 1))
            self.assertEqual(shifted, lr_coefficient(lam, mu, nu), msg=f"{lam} {mu} {nu}")

    def test_shift_never_decreases(self) -> None:
        for lam, mu, nu in self._triples():
            self.assertLessEqual(
                lr_coefficient(lam, mu, nu),
                lr_coefficient(lam, bump_first(mu, 1), bump_first(nu, 1)),
                msg=f"{lam} {mu} {nu}",
            )


if __name__ == "__main__":
    unittest.main()
