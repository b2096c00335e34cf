import unittest
import os
import sys

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from modules.claims import (
    Methodology,
    complexiones_simpliciter,
    genus_species_decomposition,
    language_size,
    leibniz_claim_check,
    paper_derived_term_count,
    proposition_terms,
    semi_fractional_count,
)
from modules.combinatorics import Combination, Universe, binomial, brute_force_class
from modules.exceptions import KTooSmallError, UndefinedExponentError
from modules.semantics import generate_language


def c(*members):
    return Combination(members)


class TestCounts(unittest.TestCase):
    def test_complexiones_simpliciter(self):
        self.assertEqual(complexiones_simpliciter(3), 7)
        self.assertEqual(complexiones_simpliciter(1), 1)
        self.assertEqual(complexiones_simpliciter(6), 63)

    def test_complexiones_simpliciter_against_brute_force(self):
        for k in range(1, 13):
            universe = Universe.of_size(k)
            brute = sum(len(brute_force_class(universe, cls)) for cls in range(1, k + 1))
            self.assertEqual(complexiones_simpliciter(k), brute)

    def test_language_size(self):
        self.assertEqual(language_size(6), 36)
        self.assertEqual(language_size(2), 4)
        self.assertEqual(language_size(4), 16)

    def test_semi_fractional_count(self):
        self.assertEqual(semi_fractional_count(6), 30)
        self.assertEqual(semi_fractional_count(2), 2)
        self.assertEqual(semi_fractional_count(3), 6)

    def test_k_too_small(self):
        with self.assertRaises(KTooSmallError):
            language_size(1)
        with self.assertRaises(KTooSmallError):
            complexiones_simpliciter(0)

    def test_proposition_identity(self):
        for k in range(2, 65):
            rows = binomial(k, k - 1)
            self.assertEqual(rows + rows * binomial(k - 1, k - 2), k * k)
            self.assertEqual(proposition_terms(k).total, language_size(k))

    def test_counts_agree_with_generated_tables(self):
        for k in range(2, 11):
            table = generate_language(Universe.of_size(k))
            self.assertEqual(table.sign_count, language_size(k))
            if k >= 3:
                self.assertEqual(table.fraction_sign_count(), semi_fractional_count(k))


class TestGenusSpecies(unittest.TestCase):
    def test_con3nation(self):
        groups = genus_species_decomposition(c(1, 2, 3))
        self.assertEqual(list(groups), [3, 2, 1])
        self.assertEqual(groups[3], [c(1, 2, 3)])
        self.assertEqual(groups[2], [c(1, 2), c(1, 3), c(2, 3)])
        self.assertEqual(groups[1], [c(1), c(2), c(3)])

    def test_singleton(self):
        self.assertEqual(genus_species_decomposition(c(5)), {1: [c(5)]})

    def test_totals(self):
        self.assertEqual(sum(len(g) for g in genus_species_decomposition(c(2, 4, 6, 8)).values()), 15)
        for e in range(1, 11):
            groups = genus_species_decomposition(Universe.of_size(e).full())
            self.assertEqual(sum(len(g) for g in groups.values()), complexiones_simpliciter(e))

    def test_empty_combination(self):
        with self.assertRaises(KTooSmallError):
            genus_species_decomposition(c())


class TestLeibnizClaim(unittest.TestCase):
    def test_derived_term_counts(self):
        self.assertEqual(paper_derived_term_count(2).count, 2)
        self.assertEqual(paper_derived_term_count(3).count, 7)
        self.assertEqual(paper_derived_term_count(4).count, 16)

    def test_methodologies_differ(self):
        self.assertEqual(paper_derived_term_count(2).methodology, Methodology.PRIMITIVE_PAIR)
        self.assertEqual(paper_derived_term_count(3).methodology, Methodology.GENUS_SPECIES)
        self.assertEqual(paper_derived_term_count(4).methodology, Methodology.SEMI_FRACTIONAL)

    def test_undefined_exponents(self):
        for e in (1, 5, 0):
            with self.assertRaises(UndefinedExponentError):
                paper_derived_term_count(e)

    def test_claim_holds_only_for_three(self):
        expected = {2: (2, 3, False), 3: (7, 7, True), 4: (16, 15, False)}
        for e, (paper, simpliciter, matches) in expected.items():
            report = leibniz_claim_check(e)
            self.assertEqual(report.paper_count, paper)
            self.assertEqual(report.simpliciter_count, simpliciter)
            self.assertEqual(report.matches, matches)


if __name__ == "__main__":
    unittest.main()
