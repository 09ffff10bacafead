import unittest
from unittest.mock import patch

from src.census import reference
from src.cli.report import Report, build_report, representable_counts


class TestReport(unittest.TestCase):

    def test_sections(self):
        report = Report()
        report.check("same", 1, 1)
        report.check("different", 2, 3)
        report.note("free text", "anything")
        self.assertFalse(report.ok)
        rendered = report.render()
        self.assertIn("FAIL different", rendered)
        self.assertIn("(expected 2)", rendered)
        self.assertTrue(rendered.endswith("2/3 sections match"))
        payload = report.as_dict()
        self.assertEqual([s["match"] for s in payload["sections"]], [True, False, True])

    def test_representable_counts_match(self):
        report = Report()
        representable_counts(report)
        self.assertEqual(len(report.sections), len(reference.REPRESENTABLE_COUNTS))
        self.assertTrue(report.ok, report.render())

    def test_build_report_runs_every_section(self):
        with patch("src.cli.report.inventories") as inventories, \
                patch("src.cli.report.degree_census") as degree_census, \
                patch("src.cli.report.representable_counts") as counts:
            report = build_report(threads=2, numeric_q=(2,), max_f=3)
        counts.assert_called_once_with(report)
        inventories.assert_called_once_with(report, 2, (2,))
        degree_census.assert_called_once_with(report, 2)
        self.assertTrue(report.sections)
        self.assertTrue(all(s.name.startswith("cubic") for s in report.sections))
        self.assertTrue(report.ok, report.render())


if __name__ == '__main__':
    unittest.main()
