from __future__ import annotations

import unittest
from pathlib import Path
from unittest.mock import MagicMock

from hilbert_depth.entities.monomial import SquarefreeIdeal
from hilbert_depth.exceptions import CapacityError
from hilbert_depth.exceptions import DomainError
from hilbert_depth.use_cases.hdepth_calculator import HdepthCalculator
from hilbert_depth.use_cases.ideal_operations import minimalize
from hilbert_depth.use_cases.interface.ideal_reader_interface import IdealReaderInterface


class TestHdepthCalculator(unittest.TestCase):
    def setUp(self):
        self.reader = MagicMock(spec=IdealReaderInterface)
        # path on five vertices
        self.reader.read.return_value = minimalize(5, [(1, 2), (2, 3), (3, 4), (4, 5)])
        self.calculator = HdepthCalculator(self.reader)
        self.path = Path("path5.txt")

    def test_both_modules(self):
        summaries = self.calculator.compute(self.path, 5)
        self.reader.read.assert_called_once_with(self.path, 5)
        self.assertEqual([summary.module for summary in summaries], ["S/I", "I"])
        self.assertTrue(all(summary.explanation is None for summary in summaries))
        self.assertGreaterEqual(summaries[1].hdepth, summaries[0].hdepth - 1)

    def test_principal_ideal(self):
        self.reader.read.return_value = minimalize(3, [(1, 2)])
        summaries = self.calculator.compute(self.path, 3, mode="quotient", explain=True)
        self.assertEqual(len(summaries), 1)
        self.assertEqual(summaries[0].hdepth, 2)
        self.assertEqual(summaries[0].explanation.witness_beta.q, 2)

    def test_zero_ideal(self):
        self.reader.read.return_value = SquarefreeIdeal(n=3)
        with self.assertRaises(DomainError):
            self.calculator.compute(self.path, 3)

    def test_unknown_mode(self):
        with self.assertRaises(DomainError):
            self.calculator.compute(self.path, 5, mode="module")
        self.reader.read.assert_not_called()

    def test_capacity_is_checked_before_reading(self):
        with self.assertRaises(CapacityError):
            self.calculator.compute(self.path, 100)
        self.reader.read.assert_not_called()


if __name__ == "__main__":
    unittest.main()
