"""
Tests for curve_db module.
"""
import pytest

from curve import EllipticCurve
from curve_db import (
    CurveDatabase,
    CurveDatabaseError,
    CurveRecord,
    ingest_db,
    label_key,
    load_fixture,
    parse_line,
    select_curve,
)


class TestParseLine:
    """Tests for parse_line."""

    def test_full_line(self):
        """Test a line with rank and torsion order."""
        record = parse_line("50 a 2 [1,0,1,-126,-552] 0 1")
        assert record.label == "50a2"
        assert record.conductor == 50
        assert record.ainvs == (1, 0, 1, -126, -552)
        assert record.rank == 0
        assert record.torsion_order == 1

    def test_line_without_rank(self):
        """Test that rank and torsion order are optional."""
        record = parse_line("11 a 1 [0,-1,1,-10,-20]")
        assert record.rank is None
        assert record.torsion_order is None

    @pytest.mark.parametrize("line", [
        "50a2 [1,0,1,-126,-552]",
        "50 a 2 [1,0,1,-126]",
        "50 a 2 [1,0,1/2,-126,-552] 0 1",
        "11 a 1 [0,0,0,0,0] 0 1",
    ])
    def test_rejected_lines(self, line):
        """Test malformed, short, non-integral and singular lines."""
        with pytest.raises(ValueError):
            parse_line(line)

    def test_to_line(self):
        """Test that a record prints back as an allcurves line."""
        line = "90 c 4 [1,-1,1,-2597,-50281] 0 2"
        assert parse_line(line).to_line() == line

    def test_record_curve(self):
        """Test the curve of a record."""
        record = CurveRecord("14a1", 14, (1, 0, 1, 4, -6))
        assert record.curve() == EllipticCurve([1, 0, 1, 4, -6])


class TestLabels:
    """Tests for label ordering."""

    def test_label_order(self):
        """Test conductor, class and number order."""
        labels = ["50b1", "11a3", "50a10", "50a2", "9999zz1", "14a1"]
        assert sorted(labels, key=label_key) == ["11a3", "14a1", "50a2", "50a10", "50b1", "9999zz1"]

    def test_unparsable_label_sorts_last(self):
        """Test that odd labels go to the end."""
        assert sorted(["x", "11a1"], key=label_key) == ["11a1", "x"]


class TestIngest:
    """Tests for ingest_db."""

    def test_ingest_skips_comments_and_blank_lines(self, write_curve_file):
        """Test that comments and blank lines are ignored."""
        path = write_curve_file([
            "# conductor class number ainvs rank torsion",
            "",
            "50 a 2 [1,0,1,-126,-552] 0 1",
            "11 a 1 [0,-1,1,-10,-20] 0 5",
        ])
        db = ingest_db(path)
        assert len(db) == 2
        assert db.labels() == ["11a1", "50a2"]
        assert db.errors == []

    def test_malformed_lines_are_quarantined(self, write_curve_file):
        """Test that bad lines are collected with their line numbers."""
        path = write_curve_file([
            "11 a 1 [0,-1,1,-10,-20] 0 5",
            "garbage",
            "11 a 1 [0,-1,1,-10,-20] 0 5",
        ])
        db = ingest_db(path)
        assert len(db) == 1
        assert [number for number, _, _ in db.errors] == [2, 3]
        assert "duplicate" in db.errors[1][2]

    def test_missing_file(self, temp_dir):
        """Test that an unreadable file raises CurveDatabaseError."""
        with pytest.raises(CurveDatabaseError):
            ingest_db(temp_dir / "missing.txt")

    def test_file_without_records(self, write_curve_file):
        """Test that a file with no valid line raises CurveDatabaseError."""
        with pytest.raises(CurveDatabaseError):
            ingest_db(write_curve_file(["# nothing here"]))

    def test_up_to_conductor(self, fixture_records):
        """Test the conductor filter."""
        small = fixture_records.up_to_conductor(15)
        assert {r.conductor for r in small} <= {11, 14, 15}
        assert len(fixture_records.up_to_conductor()) == len(fixture_records)


class TestFixture:
    """Tests for the bundled fixture."""

    def test_fixture_loads(self):
        """Test that the bundled fixture has the worked examples."""
        db = load_fixture()
        assert "50a2" in db
        assert "90c4" in db
        assert db.errors == []

    def test_fixture_is_sorted(self, fixture_records):
        """Test that records iterate in label order."""
        labels = [r.label for r in fixture_records]
        assert labels == sorted(labels, key=label_key)


class TestSelectCurve:
    """Tests for select_curve."""

    def test_by_label(self, fixture_records):
        """Test lookup by label."""
        label, curve = select_curve("90c4", fixture_records)
        assert label == "90c4"
        assert curve.ainvs == (1, -1, 1, -2597, -50281)

    def test_by_invariants(self):
        """Test a literal a-invariant list."""
        label, curve = select_curve(" [0,0,0,0,1] ")
        assert label == "[0,0,0,0,1]"
        assert curve.a6 == 1

    def test_unknown_label(self, fixture_records):
        """Test that an unknown label raises CurveDatabaseError."""
        with pytest.raises(CurveDatabaseError):
            select_curve("37a1", fixture_records)

    def test_label_without_records(self):
        """Test that labels need a database."""
        with pytest.raises(CurveDatabaseError):
            select_curve("50a2")

    def test_dict_lookup(self):
        """Test that a plain dict works as a record source."""
        record = parse_line("19 a 1 [0,1,1,-9,-15] 0 3")
        db = CurveDatabase([record])
        assert select_curve("19a1", {"19a1": record})[0] == select_curve("19a1", db)[0]
