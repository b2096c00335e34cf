import unittest
import os
import sys
from itertools import combinations

from hypothesis import given, strategies as st

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from modules.combinatorics import (
    ClassRef,
    Combination,
    Universe,
    binomial,
    brute_force_class,
    class_ref,
    enumerate_class,
    rank,
    rank_by_enumeration,
    resolve,
    unrank,
)
from modules.exceptions import (
    ClassOutOfRangeError,
    NotASubsetError,
    PlaceOutOfRangeError,
    UsageError,
)


def c(*members):
    return Combination(members)


class TestBinomial(unittest.TestCase):
    def test_known_values(self):
        self.assertEqual(binomial(6, 4), 15)
        self.assertEqual(binomial(5, 0), 1)
        self.assertEqual(binomial(12, 6), 924)

    def test_m_greater_than_n(self):
        self.assertEqual(binomial(3, 5), 0)

    def test_pascal_recurrence(self):
        for n in range(1, 40):
            for m in range(1, n + 1):
                self.assertEqual(binomial(n, m), binomial(n - 1, m - 1) + binomial(n - 1, m))

    def test_large_values_are_exact(self):
        self.assertEqual(binomial(200, 100) % 10, 0)
        self.assertGreater(binomial(200, 100), 2 ** 64)

    def test_negative_arguments(self):
        with self.assertRaises(ValueError):
            binomial(-1, 0)


class TestUniverse(unittest.TestCase):
    def test_of_size(self):
        universe = Universe.of_size(4)
        self.assertEqual(universe.labels, (1, 2, 3, 4))
        self.assertEqual(universe.k, 4)

    def test_rejects_unordered_labels(self):
        with self.assertRaises(UsageError):
            Universe((3, 3, 6))
        with self.assertRaises(UsageError):
            Universe((6, 3))

    def test_rejects_zero_and_empty(self):
        with self.assertRaises(UsageError):
            Universe((0, 1))
        with self.assertRaises(UsageError):
            Universe(())
        with self.assertRaises(ValueError):
            Universe.of_size(0)

    def test_combination_checks_membership(self):
        universe = Universe((3, 6, 7, 9))
        self.assertEqual(universe.combination([9, 3]), c(3, 9))
        with self.assertRaises(NotASubsetError):
            universe.combination([4])


class TestEnumerateClass(unittest.TestCase):
    def test_second_class_over_3679(self):
        universe = Universe((3, 6, 7, 9))
        self.assertEqual(
            enumerate_class(universe, 2),
            [c(3, 6), c(3, 7), c(3, 9), c(6, 7), c(6, 9), c(7, 9)],
        )

    def test_fourth_class_of_six(self):
        members = enumerate_class(Universe.of_size(6), 4)
        self.assertEqual(len(members), 15)
        self.assertEqual(members[0], c(1, 2, 3, 4))
        self.assertEqual(members[4], c(1, 2, 4, 6))
        self.assertEqual(members[5], c(1, 2, 5, 6))
        self.assertEqual(members[-1], c(3, 4, 5, 6))

    def test_class_zero(self):
        self.assertEqual(enumerate_class(Universe.of_size(3), 0), [c()])

    def test_class_out_of_range(self):
        with self.assertRaises(ClassOutOfRangeError):
            enumerate_class(Universe.of_size(3), 4)

    def test_counts_match_binomial(self):
        for k in range(1, 13):
            universe = Universe.of_size(k)
            for cls in range(0, k + 1):
                self.assertEqual(len(enumerate_class(universe, cls)), binomial(k, cls))

    def test_agrees_with_brute_force(self):
        for k in range(1, 11):
            universe = Universe.of_size(k)
            for cls in range(0, k + 1):
                self.assertEqual(enumerate_class(universe, cls), brute_force_class(universe, cls))


class TestRankUnrank(unittest.TestCase):
    def test_rank_examples(self):
        self.assertEqual(rank(c(6, 9), Universe((3, 6, 7, 9))), 5)
        self.assertEqual(rank(c(1, 4, 5, 6), Universe.of_size(6)), 10)
        self.assertEqual(rank(c(1, 2, 3), Universe.of_size(7)), 1)
        self.assertEqual(rank(c(1, 4), Universe.of_size(4)), 3)

    def test_rank_of_empty_combination(self):
        self.assertEqual(rank(c(), Universe.of_size(5)), 1)

    def test_rank_rejects_foreign_label(self):
        with self.assertRaises(NotASubsetError):
            rank(c(3, 5), Universe((3, 6, 7, 9)))

    def test_unrank_examples(self):
        self.assertEqual(unrank(2, 1, Universe((3, 6, 7, 9))), c(3, 6))
        self.assertEqual(unrank(4, 15, Universe.of_size(6)), c(3, 4, 5, 6))
        self.assertEqual(unrank(4, 4, Universe.of_size(6)), c(1, 2, 4, 5))
        self.assertEqual(unrank(5, 1, Universe.of_size(5)), c(1, 2, 3, 4, 5))

    def test_unrank_out_of_range(self):
        universe = Universe((3, 6, 7, 9))
        with self.assertRaises(PlaceOutOfRangeError):
            unrank(2, 7, universe)
        with self.assertRaises(PlaceOutOfRangeError):
            unrank(2, 0, universe)
        with self.assertRaises(ClassOutOfRangeError):
            unrank(5, 1, universe)

    def test_bijection_exhaustive(self):
        for k in range(1, 13):
            universe = Universe.of_size(k)
            for cls in range(0, k + 1):
                for place, s in enumerate(enumerate_class(universe, cls), start=1):
                    self.assertEqual(rank(s, universe), place)
                    self.assertEqual(unrank(cls, place, universe), s)

    def test_rank_agrees_with_enumeration_oracle(self):
        for k in range(1, 9):
            universe = Universe.of_size(k)
            for cls in range(0, k + 1):
                for members in combinations(universe.labels, cls):
                    s = Combination(members)
                    self.assertEqual(rank(s, universe), rank_by_enumeration(s, universe))

    def test_label_independence(self):
        plain = Universe.of_size(4)
        relabeled = Universe((3, 6, 7, 9))
        mapping = dict(zip(plain.labels, relabeled.labels))
        for cls in range(0, 5):
            for s in enumerate_class(plain, cls):
                moved = relabeled.combination(mapping[x] for x in s.members)
                self.assertEqual(rank(s, plain), rank(moved, relabeled))

    @given(st.lists(st.integers(min_value=1, max_value=10 ** 6), min_size=1, max_size=30, unique=True), st.data())
    def test_round_trip_on_random_universes(self, labels, data):
        universe = Universe(tuple(sorted(labels)))
        members = data.draw(st.lists(st.sampled_from(universe.labels), unique=True))
        s = universe.combination(members)
        self.assertEqual(unrank(s.exponent, rank(s, universe), universe), s)


class TestClassRef(unittest.TestCase):
    def test_class_ref_round_trip(self):
        universe = Universe((3, 6, 7, 9))
        ref = class_ref(c(6, 9), universe)
        self.assertEqual(ref, ClassRef(2, 5))
        self.assertEqual(resolve(ref, universe), c(6, 9))

    def test_class_ref_bounds(self):
        universe = Universe.of_size(4)
        with self.assertRaises(ClassOutOfRangeError):
            ClassRef(0, 1).check(universe)
        with self.assertRaises(PlaceOutOfRangeError):
            ClassRef(3, 5).check(universe)


if __name__ == "__main__":
    unittest.main()
