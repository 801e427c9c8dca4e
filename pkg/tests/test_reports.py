"""
Tests for reports module.
"""
import json

import pytest

from classification import TorsionStructure, generate_table1
from curve import EllipticCurve, GrowthReport, growth_fields
from families import CheckResult
from reports import render_checks, render_growth, render_scan, render_tables, render_torsion
from scan import Configuration, ScanSummary

C = TorsionStructure.parse


@pytest.fixture(scope="module")
def report_11a1():
    """Growth report of 11a1 with factor lists."""
    return growth_fields(EllipticCurve([0, -1, 1, -10, -20]), label="11a1", keep_factors=True)


@pytest.fixture
def summary():
    """Scan summary with one known and one unknown configuration."""
    summary = ScanSummary(total=3, processed=2, skipped=0, errors=[("37a1", "boom")])
    summary.add("11a1", 11, Configuration.parse("C5", "(5,5)"))
    summary.add("9999a1", 9999, Configuration.parse("C1", "(7)^3"))
    return summary


class TestRenderTorsion:
    """Tests for render_torsion."""

    def test_text(self, curve_y2_x3_1):
        """Test the text form over Q."""
        lines = render_torsion("36a1", curve_y2_x3_1, C("C6"), [curve_y2_x3_1.point(2, 3)])
        assert lines[0] == "Curve 36a1: [0,0,0,0,1]"
        assert lines[1] == "Torsion over Q: C6 (order 6)"
        assert lines[-1] == "  (2 : 3 : 1)"

    def test_no_generators(self, curve_50a2):
        """Test that trivial torsion prints none."""
        lines = render_torsion("50a2", curve_50a2, C("C1"), [])
        assert lines[-1] == "  none"

    def test_jsonl(self, curve_y2_x3_1):
        """Test the JSON-lines form."""
        (line,) = render_torsion("36a1", curve_y2_x3_1, C("C6"), [curve_y2_x3_1.point(2, 3)], fmt="jsonl")
        data = json.loads(line)
        assert data["field"] == "Q"
        assert data["torsion"] == "C6"
        assert data["points"] == ["(2 : 3 : 1)"]


class TestRenderGrowth:
    """Tests for render_growth."""

    def test_text(self, report_11a1):
        """Test the field list and configuration line."""
        lines = render_growth(report_11a1)
        assert lines[1] == "Torsion over Q: C5"
        assert lines[-1] == "Configuration: (5,5) (size 1)"
        assert not any(line.startswith("Factors") for line in lines)

    def test_verbose_lists_factors(self, report_11a1):
        """Test that verbose mode prints the factors per n."""
        lines = render_growth(report_11a1, verbose=True)
        assert "Factors of degree 1, 2 and 4:" in lines
        assert "  psi_5:" in lines

    def test_jsonl_drops_factors_unless_verbose(self, report_11a1):
        """Test the JSON-lines form."""
        data = json.loads(render_growth(report_11a1, fmt="jsonl")[0])
        assert "factors" not in data
        assert data["configuration"] == ["(5,5)"]
        verbose = json.loads(render_growth(report_11a1, fmt="jsonl", verbose=True)[0])
        assert set(verbose["factors"]) == {"3", "5"}

    def test_no_growth(self, curve_y2_x3_1):
        """Test the message for a curve without growth."""
        report = GrowthReport(curve_y2_x3_1, "36a1", C("C6"), [])
        assert render_growth(report)[-1] == "No torsion growth over quadratic or quartic fields"


class TestRenderScan:
    """Tests for render_scan."""

    def test_text(self, summary):
        """Test groups, new configurations and errors."""
        lines = render_scan(summary)
        assert "G = C1" in lines
        assert "G = C5" in lines
        assert any(line.endswith("NEW") and "(7)^3" in line for line in lines)
        assert "Largest configuration size h = 3" in lines
        assert "New configurations: 1" in lines
        assert lines[-1] == "  37a1: boom"

    def test_jsonl(self, summary):
        """Test one line per configuration and a closing summary line."""
        lines = [json.loads(line) for line in render_scan(summary, fmt="jsonl")]
        assert [line["configuration"] for line in lines[:-1]] == ["(7)^3", "(5,5)"]
        assert lines[0]["known"] is False
        assert lines[-1]["h"] == 3
        assert lines[-1]["errors"] == [{"label": "37a1", "error": "boom"}]


class TestRenderTables:
    """Tests for render_tables."""

    def test_text(self):
        """Test that the sets and every table row are printed."""
        table = generate_table1()
        lines = render_tables(table)
        assert any(line.startswith("PHI(1): ") for line in lines)
        assert any(line.startswith("PHI*_Q(4, C1): C1, C3, C5") for line in lines)
        assert sum(1 for line in lines if line.startswith("C24 ")) == 1

    def test_jsonl_cells(self):
        """Test one JSON line per table cell."""
        table = generate_table1()
        lines = [json.loads(line) for line in render_tables(table, fmt="jsonl")]
        cells = [line for line in lines if "verdict" in line]
        assert len(cells) == len(table.rows) * len(table.columns)
        cell = next(line for line in cells if line["G"] == "C4" and line["H"] == "C20")
        assert cell["verdict"] == "teo-5"


class TestRenderChecks:
    """Tests for render_checks."""

    def test_text(self):
        """Test sections, marks and the totals line."""
        checks = [
            ("classification", CheckResult("stored table invariants", "pass")),
            ("C15 curves", CheckResult("j(450b2)", "skip", "missing data")),
            ("C15 curves", CheckResult("j(50a1)", "fail", "computed 0")),
        ]
        lines = render_checks(checks)
        assert "[classification]" in lines
        assert "  SKIP  j(450b2)  (missing data)" in lines
        assert "  FAIL  j(50a1)  (computed 0)" in lines
        assert lines[-1] == "Passed: 1  Failed: 1  Skipped: 1"

    def test_jsonl(self):
        """Test the JSON-lines form."""
        (line,) = render_checks([("witnesses", CheckResult("y^2 = x^6 + 1 at (0, 1)", "pass"))], fmt="jsonl")
        assert json.loads(line) == {
            "section": "witnesses",
            "check": "y^2 = x^6 + 1 at (0, 1)",
            "status": "pass",
            "detail": "",
        }
