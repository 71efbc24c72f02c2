from __future__ import annotations

import unittest

from hilbert_depth.exceptions import DomainError
from hilbert_depth.use_cases.family import REFERENCE_PAIRS
from hilbert_depth.use_cases.family import family_alpha
from hilbert_depth.use_cases.family import family_beta
from hilbert_depth.use_cases.family import family_hdepth_ideal
from hilbert_depth.use_cases.family import family_hdepth_quotient
from hilbert_depth.use_cases.family import family_ideal
from hilbert_depth.use_cases.family import family_record
from hilbert_depth.use_cases.family import minimal_witness
from hilbert_depth.use_cases.family import sweep_witnesses
from hilbert_depth.use_cases.family_explorer import FamilyExplorer
from hilbert_depth.use_cases.hilbert import beta_values
from hilbert_depth.use_cases.hilbert import complement_alpha
from hilbert_depth.use_cases.hilbert import hdepth
from hilbert_depth.use_cases.ideal_operations import alpha_of_complement


class TestFamilyClosedForms(unittest.TestCase):
    def test_family_ideal_generators(self):
        ideal = family_ideal(4, 2)
        self.assertEqual(list(ideal.supports()), [(1, 2, 3), (1, 2, 4)])

    def test_pair_domain(self):
        for n, m in ((4, 4), (4, 0), (3, 5)):
            with self.assertRaises(DomainError):
                family_alpha(n, m)
            with self.assertRaises(DomainError):
                family_hdepth_ideal(n, m)
        with self.assertRaises(DomainError):
            family_beta(6, 2, 7, 1)

    def test_alpha_and_beta_match_enumeration(self):
        for n in range(2, 9):
            for m in range(1, n):
                alpha = alpha_of_complement(family_ideal(n, m))
                self.assertEqual(family_alpha(n, m), alpha, msg=f"n={n}, m={m}")
                for q in range(n + 1):
                    expected = beta_values(alpha.values, q)
                    self.assertEqual([family_beta(n, m, q, k) for k in range(q + 1)], expected)

    def test_hdepths_match_the_general_algorithm(self):
        for n in range(2, 9):
            for m in range(1, n):
                alpha = family_alpha(n, m)
                self.assertEqual(family_hdepth_quotient(n, m), hdepth(alpha).hdepth, msg=f"n={n}, m={m}")
                self.assertEqual(family_hdepth_ideal(n, m), hdepth(complement_alpha(alpha)).hdepth)

    def test_fast_paths_agree_with_the_full_scan(self):
        for n in range(2, 41):
            for m in range(1, n):
                full = family_hdepth_quotient(n, m)
                self.assertEqual(family_hdepth_quotient(n, m, odd_only=True), full, msg=f"n={n}, m={m}")
                self.assertEqual(family_hdepth_quotient(n, m, odd_only=True, bisect=True), full)

    def test_examples(self):
        self.assertEqual(family_hdepth_quotient(6, 2), 4)
        self.assertEqual(family_hdepth_quotient(15, 3), 11)
        self.assertEqual(family_hdepth_ideal(10, 2), 6)
        self.assertEqual(family_hdepth_ideal(6, 2), 4)
        record = family_record(10, 2)
        self.assertEqual((record.q, record.h_ideal, record.d), (7, 6, 1))

    def test_reference_pairs(self):
        self.assertEqual(len(REFERENCE_PAIRS), 16)
        self.assertEqual(REFERENCE_PAIRS[0], (6, 2))
        self.assertEqual(REFERENCE_PAIRS[-1], (350, 7))


class TestWitnessSearch(unittest.TestCase):
    def test_minimal_witnesses(self):
        witness = minimal_witness(0, 20, jobs=1)
        self.assertEqual((witness.n, witness.m, witness.q), (6, 2, 4))
        witness = minimal_witness(1, 20, jobs=1)
        self.assertEqual((witness.n, witness.m, witness.q), (10, 2, 7))

    def test_gap_ten_first_appears_at_55_11(self):
        witness = minimal_witness(10, 60, jobs=1)
        self.assertEqual((witness.n, witness.m, witness.q, witness.d), (55, 11, 43, 10))
        self.assertEqual(witness.h_ideal, 33)

    def test_not_found_within_cap(self):
        self.assertIsNone(minimal_witness(5, 12, jobs=1))

    def test_sweep_reports_every_gap_in_order(self):
        found = sweep_witnesses(2, n_cap=20, jobs=1)
        self.assertEqual(list(found), [0, 1, 2])
        self.assertEqual((found[2].n, found[2].m, found[2].q), (15, 3, 11))

    def test_negative_gap(self):
        with self.assertRaises(DomainError):
            minimal_witness(-1, 10)
        with self.assertRaises(DomainError):
            sweep_witnesses(-1)


class TestFamilyExplorer(unittest.TestCase):
    def setUp(self):
        self.explorer = FamilyExplorer(n_cap=20, jobs=1)

    def test_single_pair(self):
        [record] = self.explorer.single(10, 2, fast=True)
        self.assertEqual((record.q, record.h_ideal, record.d), (7, 6, 1))

    def test_reference_table_and_sweep(self):
        self.assertEqual(len(self.explorer.table()), 16)
        rows = self.explorer.table(d_max=2)
        self.assertEqual([(row.n, row.m) for row in rows], [(6, 2), (10, 2), (15, 3)])

    def test_witness_uses_the_default_cap(self):
        witness = self.explorer.witness(3)
        self.assertEqual((witness.n, witness.m, witness.q), (20, 4, 15))
        self.assertIsNone(self.explorer.witness(5, n_cap=12))


if __name__ == "__main__":
    unittest.main()
