from __future__ import annotations

import tempfile
import unittest
from pathlib import Path

from hilbert_depth.adapters.ideal_file_reader import IdealFileReader
from hilbert_depth.adapters.ideal_file_reader import parse_ideal
from hilbert_depth.exceptions import DomainError
from hilbert_depth.exceptions import IdealParseError


class TestParseIdeal(unittest.TestCase):
    def test_variable_notation(self):
        ideal = parse_ideal("# path of length two\nx1*x2\n\nx2*x3\n", 3)
        self.assertEqual(list(ideal.supports()), [(1, 2), (2, 3)])

    def test_index_notation_is_minimalized(self):
        ideal = parse_ideal("1 2\n1 2 3\n  3   4 \n", 4)
        self.assertEqual(list(ideal.supports()), [(1, 2), (3, 4)])

    def test_empty_file_is_the_zero_ideal(self):
        self.assertTrue(parse_ideal("# nothing\n\n", 3).is_zero)

    def test_errors_name_the_line(self):
        cases = {
            "x1*x2\nx1*y3\n": 2,
            "1 2\n1 a\n": 2,
            "x1*x5\n": 1,
            "1 1\n": 1,
            "x1*x2\n2 3\n": 2,
            "0 1\n": 1,
        }
        for text, line_number in cases.items():
            with self.assertRaises(IdealParseError, msg=text) as raised:
                parse_ideal(text, 4)
            self.assertEqual(raised.exception.line_number, line_number)
            self.assertTrue(str(raised.exception).startswith(f"line {line_number}: "))

    def test_n_must_be_positive(self):
        with self.assertRaises(DomainError):
            parse_ideal("1\n", 0)


class TestIdealFileReader(unittest.TestCase):
    def test_read(self):
        with tempfile.TemporaryDirectory() as directory:
            path = Path(directory) / "ideal.txt"
            path.write_text("x1*x3\nx2\n", encoding="utf-8")
            ideal = IdealFileReader().read(path, 3)
        self.assertEqual(list(ideal.supports()), [(2,), (1, 3)])

    def test_invalid_encoding(self):
        with tempfile.TemporaryDirectory() as directory:
            path = Path(directory) / "ideal.txt"
            path.write_bytes(b"\xff\xfe1 2\n")
            with self.assertRaises(IdealParseError):
                IdealFileReader().read(path, 3)


if __name__ == "__main__":
    unittest.main()
