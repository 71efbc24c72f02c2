from __future__ import annotations

import unittest

from hilbert_depth.exceptions import DomainError
from hilbert_depth.use_cases.verify.verifier import Verifier


class TestVerifier(unittest.TestCase):
    def setUp(self):
        self.verifier = Verifier(node_cap=5, jobs=1)

    def test_default_node_cap_applies(self):
        report = self.verifier.lemma("L3.2-q5", 9)
        self.assertTrue(report.truncated)
        self.assertEqual(report.explored, 5)

    def test_explicit_node_cap_wins(self):
        report = self.verifier.lemma("L3.2-q4", 6, node_cap=100_000)
        self.assertFalse(report.truncated)
        self.assertTrue(report.certified)

    def test_tables(self):
        report = self.verifier.tables(table_id="f2to5-q8-L3.4")
        self.assertEqual(report.tables, ["f2to5-q8-L3.4"])
        self.assertTrue(report.ok)

    def test_oracle_and_theorem(self):
        self.assertTrue(self.verifier.oracle(6, 3).ok)
        self.assertTrue(self.verifier.theorem(4).ok)

    def test_campaign_is_seeded(self):
        first = self.verifier.campaign([5, 6], trials=10, seed=3)
        second = self.verifier.campaign((5, 6), trials=10, seed=3)
        self.assertEqual(first, second)
        self.assertEqual(first.checked, 20)

    def test_domain_errors_pass_through(self):
        with self.assertRaises(DomainError):
            self.verifier.lemma("L3.7", 12)


if __name__ == "__main__":
    unittest.main()
