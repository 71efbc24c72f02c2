from __future__ import annotations

import unittest
from math import comb

from hypothesis import given
from hypothesis import settings
from hypothesis import strategies as st

from hilbert_depth.entities.alpha_vector import AlphaVector
from hilbert_depth.exceptions import DomainError
from hilbert_depth.use_cases.hilbert import beta_entry
from hilbert_depth.use_cases.hilbert import beta_row_recurrence_check
from hilbert_depth.use_cases.hilbert import beta_sum_identity_check
from hilbert_depth.use_cases.hilbert import beta_table
from hilbert_depth.use_cases.hilbert import beta_values
from hilbert_depth.use_cases.hilbert import complement_alpha
from hilbert_depth.use_cases.hilbert import hdepth
from hilbert_depth.use_cases.hilbert import hdepth_gap_criterion
from hilbert_depth.use_cases.ideal_operations import alpha_of_complement
from hilbert_depth.use_cases.ideal_operations import alpha_of_ideal
from hilbert_depth.use_cases.ideal_operations import enumerate_minimal_ideals
from hilbert_depth.use_cases.ideal_operations import monomial_ideal
from hilbert_depth.use_cases.verify.random_ideal import random_ideal


class TestBetaRows(unittest.TestCase):
    def test_row_values(self):
        alpha = (1, 2, 0)
        self.assertEqual(beta_values(alpha, 2), [1, 0, -1])
        self.assertEqual(beta_values(alpha, 1), [1, 1])
        self.assertEqual(beta_entry(alpha, 2, 2), -1)

    def test_row_needs_enough_entries(self):
        with self.assertRaises(DomainError):
            beta_values((1, 2, 0), 3)
        with self.assertRaises(DomainError):
            beta_entry((1, 2), 3, 2)

    def test_whole_ring_row(self):
        # beta_k^n(S) = C(k-1, k): one in degree zero, zero above
        alpha = AlphaVector(n=6, values=tuple(comb(6, j) for j in range(7)))
        self.assertEqual(beta_table(alpha, 6).values, (1, 0, 0, 0, 0, 0, 0))

    def test_beta_table_range(self):
        alpha = AlphaVector(n=2, values=(1, 2, 0))
        with self.assertRaises(DomainError):
            beta_table(alpha, 3)


class TestHdepth(unittest.TestCase):
    def test_principal_ideal_in_two_variables(self):
        ideal = monomial_ideal(2, (1, 2))
        quotient = hdepth(alpha_of_complement(ideal))
        self.assertEqual(quotient.hdepth, 1)
        self.assertEqual(quotient.witness_beta.values, (1, 1))
        self.assertEqual(len(quotient.failure_certificates), 1)
        certificate = quotient.failure_certificates[0]
        self.assertEqual((certificate.q, certificate.k, certificate.value), (2, 2, -1))
        self.assertEqual(hdepth(alpha_of_ideal(ideal)).hdepth, 2)

    def test_certificates_cover_every_larger_q(self):
        ideal = monomial_ideal(5, (1, 2), (2, 3), (3, 4), (4, 5))
        result = hdepth(alpha_of_complement(ideal))
        self.assertEqual([c.q for c in result.failure_certificates], list(range(result.hdepth + 1, 6)))
        for certificate in result.failure_certificates:
            self.assertLess(beta_values(alpha_of_complement(ideal).values, certificate.q)[certificate.k], 0)

    def test_zero_module(self):
        with self.assertRaises(DomainError):
            hdepth(AlphaVector(n=3, values=(0, 0, 0, 0)))

    def test_whole_ring(self):
        alpha = AlphaVector(n=5, values=tuple(comb(5, j) for j in range(6)))
        self.assertEqual(hdepth(alpha).hdepth, 5)

    def test_principal_ideals_exhaustively(self):
        for ideal in enumerate_minimal_ideals(4):
            quotient = hdepth(alpha_of_complement(ideal)).hdepth
            inside = hdepth(alpha_of_ideal(ideal)).hdepth
            principal = len(ideal.generators) == 1
            self.assertEqual(quotient == 3, principal, msg=str(ideal))
            self.assertEqual(inside == 4, principal, msg=str(ideal))


class TestIdentities(unittest.TestCase):
    def test_complement_alpha_is_an_involution(self):
        alpha = alpha_of_complement(monomial_ideal(4, (1, 2), (3,)))
        self.assertEqual(complement_alpha(alpha), alpha_of_ideal(monomial_ideal(4, (1, 2), (3,))))
        self.assertEqual(complement_alpha(complement_alpha(alpha)), alpha)

    def test_identities_over_every_ideal_of_four_variables(self):
        for ideal in enumerate_minimal_ideals(4):
            alpha = alpha_of_complement(ideal)
            for q in range(5):
                self.assertTrue(beta_sum_identity_check(alpha, q), msg=f"{ideal}, q={q}")
            for q in range(4):
                self.assertTrue(beta_row_recurrence_check(alpha, q), msg=f"{ideal}, q={q}")

    def test_recurrence_range(self):
        alpha = alpha_of_complement(monomial_ideal(3, (1, 2)))
        with self.assertRaises(DomainError):
            beta_row_recurrence_check(alpha, 3)

    @settings(max_examples=40, deadline=None)
    @given(st.integers(min_value=2, max_value=10), st.integers(min_value=0, max_value=2**32 - 1))
    def test_sum_identity_on_random_ideals(self, n, seed):
        alpha = alpha_of_complement(random_ideal(n, (1, n), (1, n), seed))
        for q in range(n + 1):
            self.assertTrue(beta_sum_identity_check(alpha, q))


class TestLinearity(unittest.TestCase):
    @given(
        st.lists(st.integers(min_value=-50, max_value=50), min_size=6, max_size=6),
        st.lists(st.integers(min_value=-50, max_value=50), min_size=6, max_size=6),
        st.integers(min_value=0, max_value=5),
    )
    def test_beta_rows_are_linear(self, first, second, q):
        summed = [a + b for a, b in zip(first, second)]
        self.assertEqual(
            beta_values(summed, q),
            [a + b for a, b in zip(beta_values(first, q), beta_values(second, q))],
        )


class TestGapCriterion(unittest.TestCase):
    def test_criterion_agrees_with_direct_hdepths(self):
        for n in (3, 4):
            for ideal in enumerate_minimal_ideals(n):
                alpha = alpha_of_complement(ideal)
                quotient = hdepth(alpha).hdepth
                inside = hdepth(alpha_of_ideal(ideal)).hdepth
                for ell in range(0, 3):
                    self.assertEqual(hdepth_gap_criterion(alpha, ell), inside >= quotient - ell, msg=str(ideal))

    def test_negative_ell(self):
        with self.assertRaises(DomainError):
            hdepth_gap_criterion(alpha_of_complement(monomial_ideal(3, (1, 2))), -1)


if __name__ == "__main__":
    unittest.main()
