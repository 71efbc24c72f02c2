from __future__ import annotations

import unittest
from math import comb

from hypothesis import given
from hypothesis import strategies as st

from hilbert_depth.entities.monomial import SquarefreeIdeal
from hilbert_depth.entities.monomial import SquarefreeMonomial
from hilbert_depth.exceptions import CapacityError
from hilbert_depth.exceptions import DomainError
from hilbert_depth.use_cases.ideal_operations import alpha_of_complement
from hilbert_depth.use_cases.ideal_operations import alpha_of_ideal
from hilbert_depth.use_cases.ideal_operations import alpha_of_quotient
from hilbert_depth.use_cases.ideal_operations import check_enumerable
from hilbert_depth.use_cases.ideal_operations import contains
from hilbert_depth.use_cases.ideal_operations import enumerate_minimal_ideals
from hilbert_depth.use_cases.ideal_operations import ideal_contains
from hilbert_depth.use_cases.ideal_operations import is_in_m2
from hilbert_depth.use_cases.ideal_operations import is_principal
from hilbert_depth.use_cases.ideal_operations import minimalize
from hilbert_depth.use_cases.ideal_operations import monomial_ideal


class TestIdealConstruction(unittest.TestCase):
    def test_minimalize_drops_multiples_and_duplicates(self):
        ideal = minimalize(3, [(1, 2), (1,), (2, 3), (3, 2)])
        self.assertEqual(list(ideal.supports()), [(1,), (2, 3)])
        self.assertEqual(str(ideal), "(x1, x2*x3) in n=3")

    def test_minimalize_rejects_out_of_range_indices(self):
        with self.assertRaises(DomainError):
            minimalize(3, [(0, 1)])
        with self.assertRaises(DomainError):
            monomial_ideal(3, (2, 4))

    def test_membership(self):
        ideal = monomial_ideal(4, (1, 2), (3,))
        self.assertTrue(contains(ideal, SquarefreeMonomial.of(1, 2, 4)))
        self.assertTrue(contains(ideal, SquarefreeMonomial.of(3)))
        self.assertFalse(contains(ideal, SquarefreeMonomial.of(1, 4)))
        self.assertTrue(ideal_contains(ideal, monomial_ideal(4, (1, 2, 3), (3, 4))))
        self.assertFalse(ideal_contains(ideal, monomial_ideal(4, (1,))))

    def test_predicates(self):
        self.assertTrue(is_principal(monomial_ideal(4, (1, 2))))
        self.assertFalse(is_principal(monomial_ideal(4, (1, 2), (3, 4))))
        self.assertTrue(is_in_m2(monomial_ideal(4, (1, 2), (3, 4))))
        self.assertFalse(is_in_m2(monomial_ideal(4, (1,), (3, 4))))


generator_lists = st.lists(
    st.sets(st.integers(min_value=1, max_value=6), min_size=1, max_size=4),
    min_size=1,
    max_size=6,
)


class TestIdealProperties(unittest.TestCase):
    @given(generator_lists)
    def test_minimalize_is_idempotent(self, generators):
        ideal = minimalize(6, generators)
        self.assertEqual(minimalize(6, ideal.generators), ideal)

    @given(generator_lists, generator_lists)
    def test_containment_shrinks_the_quotient(self, first, second):
        small = minimalize(6, first)
        big = minimalize(6, first + second)
        self.assertTrue(ideal_contains(big, small))
        for outer, inner in zip(alpha_of_complement(big).values, alpha_of_complement(small).values):
            self.assertLessEqual(outer, inner)


class TestAlphaVectors(unittest.TestCase):
    def test_principal_ideal_in_two_variables(self):
        ideal = monomial_ideal(2, (1, 2))
        self.assertEqual(alpha_of_complement(ideal).values, (1, 2, 0))
        self.assertEqual(alpha_of_ideal(ideal).values, (0, 0, 1))

    def test_variable_ideal(self):
        ideal = monomial_ideal(3, (1,))
        self.assertEqual(alpha_of_complement(ideal).values, (1, 2, 1, 0))
        self.assertEqual(alpha_of_ideal(ideal).values, (0, 1, 2, 1))

    def test_quotient_of_two_ideals(self):
        J = monomial_ideal(2, (1,))
        I = monomial_ideal(2, (1, 2))
        self.assertEqual(alpha_of_quotient(J, I).values, (0, 1, 0))

    def test_quotient_needs_containment(self):
        with self.assertRaises(DomainError):
            alpha_of_quotient(monomial_ideal(2, (1, 2)), monomial_ideal(2, (1,)))
        with self.assertRaises(DomainError):
            alpha_of_quotient(monomial_ideal(3, (1,)), monomial_ideal(2, (1,)))

    def test_zero_ideal_complement_is_the_whole_ring(self):
        self.assertEqual(alpha_of_complement(SquarefreeIdeal(n=4)).values, (1, 4, 6, 4, 1))

    def test_complement_and_ideal_partition_every_degree(self):
        for ideal in enumerate_minimal_ideals(4):
            quotient = alpha_of_complement(ideal).values
            inside = alpha_of_ideal(ideal).values
            self.assertEqual([a + b for a, b in zip(quotient, inside)], [comb(4, j) for j in range(5)])

    def test_chunking_does_not_change_counts(self):
        ideal = monomial_ideal(10, (1, 2), (3, 4, 5), (6, 9), (2, 7, 10))
        self.assertEqual(alpha_of_complement(ideal, chunk_bits=4), alpha_of_complement(ideal))

    def test_enumeration_cap(self):
        with self.assertRaises(CapacityError) as raised:
            alpha_of_complement(monomial_ideal(5, (1,)), enumeration_cap=4)
        self.assertEqual(raised.exception.cap, 4)

    def test_bitmask_variable_limit(self):
        self.assertEqual(minimalize(64, [(1, 64)]).n, 64)
        with self.assertRaises(CapacityError) as raised:
            minimalize(100, [(1, 2)])
        self.assertEqual(raised.exception.cap, 64)
        with self.assertRaises(CapacityError):
            check_enumerable(26, enumeration_cap=25)
        check_enumerable(25, enumeration_cap=25)


class TestEnumerateMinimalIdeals(unittest.TestCase):
    def test_counts_match_dedekind_numbers(self):
        # Dedekind numbers minus the empty antichain and {emptyset}
        self.assertEqual(sum(1 for _ in enumerate_minimal_ideals(1)), 1)
        self.assertEqual(sum(1 for _ in enumerate_minimal_ideals(2)), 4)
        self.assertEqual(sum(1 for _ in enumerate_minimal_ideals(3)), 18)
        self.assertEqual(sum(1 for _ in enumerate_minimal_ideals(4)), 166)

    def test_ideals_are_distinct(self):
        ideals = list(enumerate_minimal_ideals(4))
        self.assertEqual(len(set(ideals)), len(ideals))

    def test_size_limit(self):
        with self.assertRaises(CapacityError):
            next(enumerate_minimal_ideals(7))


if __name__ == "__main__":
    unittest.main()
