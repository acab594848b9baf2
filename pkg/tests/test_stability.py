import itertools
import sys
import unittest
from pathlib import Path

from hypothesis import given, settings, strategies as st

ROOT = Path(__file__).resolve().parent.parent
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from common.errors import NegativeOffsetError, ReducedDataError  # noqa: E402
from kronecker.core import reduced_kronecker_expansion  # noqa: E402
from partitions.core import IntSequence, Partition, embed_partition, partitions_of  # noqa: E402
from stability.onset import (  # noqa: E402
    coefficient_at,
    coefficient_onset,
    component_at,
    recovery_bound,
    reduce_triple,
    stabilization_bound,
    stabilization_onset,
    stability_table,
    stable_aguiar,
    stable_component,
    tightness_witness,
)


def P(*parts):
    return Partition(parts)


def S(*entries):
    return IntSequence(entries)


def small_partitions(max_size):
    return [p for k in range(max_size + 1) for p in partitions_of(k)]


LOWEST = (P(1, 1), P(1), 1, 0)


class TestReducedData(unittest.TestCase):
    def test_reduce_triple(self) -> None:
        t = reduce_triple(S(2, 1, 1), S(2, 1), S(2, 2))
        self.assertEqual((t.lam_bar, t.mu_bar, t.nu_bar, t.d, t.h), (P(1, 1), P(1), P(2), 1, 0))
        swapped = reduce_triple(S(2, 1), S(2, 1, 1), S(2, 2))
        self.assertEqual((swapped.lam_bar, swapped.d), (P(1, 1), 1))

    def test_rejects_non_partition_tail(self) -> None:
        with self.assertRaises(ReducedDataError):
            reduce_triple(S(2, 1, 2), S(1), S(3))
        with self.assertRaises(NegativeOffsetError):
            stabilization_bound(P(1), P(), -1, 0)
        with self.assertRaises(NegativeOffsetError):
            stable_component(P(1), P(), 0, -1)

    def test_stable_values(self) -> None:
        self.assertEqual(stable_aguiar(S(2, 1, 1), S(2, 1), S(2, 2)), 4)
        self.assertEqual(stable_aguiar(S(2, 1, 1), S(2, 1), S(1, 3)), 2)
        self.assertEqual(stable_aguiar(S(2, 1, 1), S(2, 1), S(-2, 3, 3)), 0)
        self.assertEqual(stable_aguiar(S(2, 1, 1), S(2, 1), S(-3, 3, 3, 1)), 0)
        self.assertEqual(stable_aguiar(S(2, 1, 1), S(2, 1), S(2)), 0)

    def test_stable_value_ignores_first_entry(self) -> None:
        # only the tails and the three sizes matter
        self.assertEqual(
            stable_aguiar(S(2, 1, 1), S(2, 1), S(2, 2)),
            stable_aguiar(S(7, 1, 1), S(7, 1), S(7, 2)),
        )


class TestBounds(unittest.TestCase):
    def test_bound_values(self) -> None:
        self.assertEqual(stabilization_bound(*LOWEST), 7)
        self.assertEqual(stabilization_bound(P(1, 1), P(1), 1, 1), 10)
        self.assertEqual(stabilization_bound(P(), P(), 0, 0), 0)

    def test_onsets_of_the_worked_family(self) -> None:
        self.assertEqual(stabilization_onset(*LOWEST), 7)
        self.assertEqual(stabilization_onset(P(1, 1), P(1), 1, 1), 10)

    def test_onset_equals_bound(self) -> None:
        pool = small_partitions(2)
        for lam_bar in pool:
            for mu_bar in pool:
                for d, h in itertools.product(range(3), range(2)):
                    self.assertEqual(
                        stabilization_onset(lam_bar, mu_bar, d, h),
                        stabilization_bound(lam_bar, mu_bar, d, h),
                        msg=f"{lam_bar} {mu_bar} d={d} h={h}",
                    )

    def test_stable_past_the_bound(self) -> None:
        lam_bar, mu_bar, d, h = LOWEST
        stable = stable_component(lam_bar, mu_bar, d, h)
        for n in (8, 9):
            self.assertEqual(component_at(lam_bar, mu_bar, d, h, n), stable)

    def test_tightness_witness(self) -> None:
        for lam_bar, mu_bar, d, h in [LOWEST, (P(1, 1), P(1), 1, 1), (P(1), P(1), 0, 0)]:
            bound = stabilization_bound(lam_bar, mu_bar, d, h)
            nu = tightness_witness(lam_bar, mu_bar, d, h)
            self.assertEqual(nu.size, bound + h)
            nu_bar = Partition(nu[1:])
            self.assertEqual(embed_partition(nu_bar, bound + h), nu)
            self.assertIsNone(embed_partition(nu_bar, bound + h - 1))
            self.assertEqual(coefficient_at(lam_bar, mu_bar, nu_bar, d, h, bound - 1), 0)
            self.assertGreater(stable_component(lam_bar, mu_bar, d, h).get(nu_bar, 0), 0)

    def test_witness_of_worked_families(self) -> None:
        self.assertEqual(tightness_witness(*LOWEST), P(3, 3, 1))
        self.assertEqual(tightness_witness(P(1, 1), P(1), 1, 1), P(5, 5, 1))


class TestCoefficientOnsets(unittest.TestCase):
    def test_columns(self) -> None:
        cases = {P(): 3, P(1): 4, P(2): 5, P(1, 1): 5, P(3): 6, P(2, 1): 6, P(3, 1): 7, P(1, 1, 1, 1): 5}
        for nu_bar, onset in cases.items():
            self.assertEqual(coefficient_onset(P(1, 1), P(1), nu_bar, 1, 0), onset, msg=str(nu_bar))

    def test_recovery_bound_values(self) -> None:
        cases = {P(): 3, P(1): 4, P(2): 5, P(1, 1): 5, P(3): 6, P(2, 1): 6, P(3, 1): 7, P(1, 1, 1, 1): 6}
        for nu_bar, bound in cases.items():
            self.assertEqual(recovery_bound(P(1, 1), P(1), nu_bar, 1, 0), bound, msg=str(nu_bar))

    def test_onset_never_exceeds_recovery_bound(self) -> None:
        table = stability_table(P(1, 1), P(1), 1, 0, 3, 8)
        below = []
        for nu_bar in table.columns:
            self.assertLessEqual(table.coefficient_onsets[nu_bar], table.recovery_bounds[nu_bar])
            if table.coefficient_onsets[nu_bar] < table.recovery_bounds[nu_bar]:
                below.append(nu_bar)
        self.assertEqual(below, [P(1, 1, 1, 1)])

    def test_onset_never_exceeds_recovery_bound_grid(self) -> None:
        pool = small_partitions(1)
        for lam_bar in pool:
            for mu_bar in pool:
                for d, h in [(0, 0), (1, 0), (0, 1)]:
                    for nu_bar in stable_component(lam_bar, mu_bar, d, h):
                        self.assertLessEqual(
                            coefficient_onset(lam_bar, mu_bar, nu_bar, d, h),
                            recovery_bound(lam_bar, mu_bar, nu_bar, d, h),
                        )

    def test_values_never_decrease(self) -> None:
        for lam_bar, mu_bar, d, h in [LOWEST, (P(1, 1), P(1), 1, 1)]:
            last = stabilization_bound(lam_bar, mu_bar, d, h) + 3
            for nu_bar in stable_component(lam_bar, mu_bar, d, h):
                seen = [coefficient_at(lam_bar, mu_bar, nu_bar, d, h, n) for n in range(3, last + 1)]
                values = [v for v in seen if v is not None]
                self.assertEqual(values, sorted(values), msg=f"{nu_bar} d={d} h={h}")

    @settings(max_examples=20, deadline=None)
    @given(
        st.sampled_from(small_partitions(1)),
        st.sampled_from(small_partitions(1)),
        st.sampled_from(small_partitions(2)),
        st.integers(min_value=0, max_value=1),
        st.integers(min_value=0, max_value=1),
    )
    def test_random_families_never_decrease(self, lam_bar, mu_bar, nu_bar, d, h) -> None:
        bound = stabilization_bound(lam_bar, mu_bar, d, h)
        seen = [coefficient_at(lam_bar, mu_bar, nu_bar, d, h, n) for n in range(bound + 3)]
        values = [v for v in seen if v is not None]
        self.assertEqual(values, sorted(values))
        self.assertEqual(values[-1], stable_component(lam_bar, mu_bar, d, h).get(nu_bar, 0))


class TestStableComponent(unittest.TestCase):
    def test_lowest_family(self) -> None:
        stable = stable_component(*LOWEST)
        self.assertEqual(len(stable), 11)
        self.assertEqual(stable[P(2, 1)], 5)
        self.assertEqual(sum(stable.values()), 27)

    def test_second_family_size(self) -> None:
        self.assertEqual(len(stable_component(P(1, 1), P(1), 1, 1)), 28)

    def test_equal_sizes_lowest_is_reduced_kronecker(self) -> None:
        for lam_bar in small_partitions(2):
            for mu_bar in small_partitions(2):
                self.assertEqual(
                    stable_component(lam_bar, mu_bar, 0, 0),
                    reduced_kronecker_expansion(lam_bar, mu_bar),
                    msg=f"{lam_bar} {mu_bar}",
                )

    def test_table_shape(self) -> None:
        table = stability_table(*LOWEST, 3, 8)
        self.assertEqual(table.bound, 7)
        self.assertEqual(table.onset, 7)
        self.assertEqual(table.value(5, P(2, 1)), 4)
        self.assertEqual(table.value(5, P(3)), 0)
        self.assertEqual(table.value(7, P(3, 1)), 1)
        self.assertEqual(table.columns[0], P())
        self.assertEqual(len(table.columns), 11)


if __name__ == "__main__":
    unittest.main()
