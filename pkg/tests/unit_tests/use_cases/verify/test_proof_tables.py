from __future__ import annotations

import unittest

from hilbert_depth.exceptions import DomainError
from hilbert_depth.use_cases.verify.proof_tables import KNOWN_TYPOS
from hilbert_depth.use_cases.verify.proof_tables import check_proof_tables
from hilbert_depth.use_cases.verify.proof_tables import evaluate_expression
from hilbert_depth.use_cases.verify.proof_tables import proof_table
from hilbert_depth.use_cases.verify.proof_tables import select_tables


class TestEvaluateExpression(unittest.TestCase):
    def test_sums(self):
        # f = C(x,3) - 6 C(x,2), g = C(x,2) - 6x
        self.assertEqual(evaluate_expression("fg-q9", "f(10)"), -150)
        self.assertEqual(evaluate_expression("fg-q9", "g(10)"), -15)
        self.assertEqual(evaluate_expression("fg-q9", "f(10)+g(9)-3"), -171)
        self.assertEqual(evaluate_expression("fg-q9", "f(10) + g(9) - 3"), -171)

    def test_binomials_and_coefficients(self):
        self.assertEqual(evaluate_expression("fg-q9", "C(14,4)+C(7,3)+C(5,2)"), 1046)
        self.assertEqual(evaluate_expression("fg-q9", "C(13,5)-1628-15*16+21"), -560)
        self.assertEqual(evaluate_expression("f2to7-q8-L3.6", "3*C(11,4)-7*C(11,3)"), -165)
        # f_k = C(x,k) - 2 C(x,k-1)
        self.assertEqual(evaluate_expression("f2to6-q8-L3.5", "f6(13)"), 1716 - 2 * 1287)
        self.assertEqual(evaluate_expression("f2to6-q8-L3.5", "f6(13)+f5(9)+f4(5)+f3(2)"), -1001)

    def test_errors(self):
        with self.assertRaises(DomainError):
            evaluate_expression("fg-q9", "h(3)")
        with self.assertRaises(DomainError):
            evaluate_expression("fg-q9", "f(10)*2")
        with self.assertRaises(DomainError):
            evaluate_expression("no-such-table", "f(1)")
        with self.assertRaises(DomainError):
            evaluate_expression("fg-q9", "C(5)")
        with self.assertRaises(DomainError):
            evaluate_expression("fg-q9", "f(5,2)")


class TestProofTables(unittest.TestCase):
    def test_table_values(self):
        table = proof_table("fgh-q8")
        # f = C(x,4) - 4 C(x,3)
        self.assertEqual(table.row("f").values[8], 70 - 224)
        self.assertEqual(table.row("h").values[1], -4)

    def test_selection(self):
        self.assertEqual(select_tables(q=9), ["fg-q9"])
        self.assertEqual(len(select_tables(q=8)), 4)
        self.assertEqual(select_tables(table_id="fg-q10"), ["fg-q10"])
        self.assertEqual(len(select_tables()), 6)
        with self.assertRaises(DomainError):
            select_tables(q=7)
        with self.assertRaises(DomainError):
            select_tables(table_id="fg-q11")

    def test_diffs_are_exactly_the_known_typos(self):
        report = check_proof_tables()
        self.assertEqual({diff.location for diff in report.diffs}, set(KNOWN_TYPOS))
        self.assertFalse(report.unexpected)
        self.assertFalse(report.missing_known_typos)
        self.assertTrue(report.ok)

    def test_single_table_only_reports_its_typos(self):
        report = check_proof_tables(["fg-q10"])
        self.assertEqual({diff.location for diff in report.diffs}, {"fg-q10/n=14/f(13)+g(3)"})
        self.assertTrue(report.ok)

    def test_shifted_binomial_tables_recheck_their_case_claims(self):
        report = check_proof_tables(["f2to5-q8-L3.4"])
        self.assertGreater(report.claims_checked, 40)
        self.assertEqual(report.diffs, [])

        report = check_proof_tables(["f2to6-q8-L3.5"])
        self.assertGreater(report.claims_checked, 40)
        by_location = {diff.location: diff for diff in report.diffs}
        self.assertEqual(
            set(by_location),
            {
                "f2to6-q8-L3.5/n=13/f6(13)",
                "f2to6-q8-L3.5/n=12/C(11,5)+C(10,4)+C(4,3)+C(2,2)",
                "f2to6-q8-L3.5/n=11/C(10,5)+C(8,4)+C(7,3)+C(2,2)+C(1,1)",
            },
        )
        self.assertEqual(by_location["f2to6-q8-L3.5/n=13/f6(13)"].computed, "-858")
        self.assertEqual(by_location["f2to6-q8-L3.5/n=13/f6(13)"].printed, "-880")
        self.assertTrue(report.ok)

        report = check_proof_tables(["f2to7-q8-L3.6"])
        self.assertEqual(
            [(diff.printed, diff.computed) for diff in report.diffs],
            [("-137", "-147")],
        )


if __name__ == "__main__":
    unittest.main()
