from __future__ import annotations

import json
import unittest

from hilbert_depth.adapters.report_writer import ReportWriter
from hilbert_depth.entities.family_record import FamilyRecord
from hilbert_depth.entities.output_format import OutputFormat
from hilbert_depth.entities.verification import OracleReport

COLUMNS = ("n", "m", "q", "h_ideal", "d")


class TestReportWriter(unittest.TestCase):
    def setUp(self):
        self.writer = ReportWriter()
        self.records = [
            FamilyRecord(n=6, m=2, q=4, h_ideal=4, d=0),
            FamilyRecord(n=10, m=2, q=7, h_ideal=6, d=1),
        ]

    def test_json(self):
        document = json.loads(self.writer.render("family", self.records, OutputFormat.JSON, COLUMNS))
        self.assertEqual(document["kind"], "family")
        self.assertEqual(document["records"][1], {"n": 10, "m": 2, "q": 7, "h_ideal": 6, "d": 1})

    def test_csv(self):
        rendered = self.writer.render("family", self.records, OutputFormat.CSV, COLUMNS)
        self.assertEqual(rendered, "n,m,q,h_ideal,d\n6,2,4,4,0\n10,2,7,6,1\n")

    def test_text_table(self):
        rendered = self.writer.render("family", self.records, OutputFormat.TEXT, COLUMNS)
        lines = rendered.splitlines()
        self.assertEqual(lines[0], "family")
        self.assertEqual(lines[1].split(), list(COLUMNS))
        self.assertEqual(lines[3].split(), ["10", "2", "7", "6", "1"])

    def test_text_lines_take_precedence(self):
        rendered = self.writer.render("family", self.records, OutputFormat.TEXT, COLUMNS, ["custom"])
        self.assertEqual(rendered, "custom\n")

    def test_computed_fields_and_lists(self):
        report = OracleReport(n_max=3, k_max=2, checked=9)
        rendered = self.writer.render("oracle", [report], OutputFormat.CSV, ("n_max", "mismatches", "ok"))
        self.assertEqual(rendered, "n_max,mismatches,ok\n3,[],true\n")


if __name__ == "__main__":
    unittest.main()
