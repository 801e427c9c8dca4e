"""
Tests for families module.
"""
from fractions import Fraction

import pytest

from classification import TorsionStructure
from curve import EllipticCurve, exact_order
from exactmath import Poly
from families import (
    C15_LABELS,
    HalvingError,
    PlaneCurveWitness,
    c15_check,
    halve_point,
    halving_polynomial,
    j_eval,
    kubert_curve,
    kubert_params,
    kubert_suite,
    verify_witnesses,
)


class TestKubert:
    """Tests for the Kubert-Tate families."""

    def test_c10_parameters(self):
        """Test b and c of the C10 family at t = 2."""
        params = kubert_params("C10", 2)
        assert (params.b, params.c) == (24, 6)

    def test_c12_parameters(self):
        """Test b and c of the C12 family at t = 2."""
        params = kubert_params("C12", 2)
        assert (params.b, params.c) == (210, -42)

    @pytest.mark.parametrize("target, order", [("C10", 10), ("C12", 12)])
    def test_marked_point_order(self, target, order):
        """Test that (0, 0) has the family order."""
        curve, P = kubert_curve(target, Fraction(1, 3))
        assert exact_order(curve, P, 24) == order

    def test_unknown_family(self):
        """Test that only C10 and C12 are known."""
        with pytest.raises(ValueError):
            kubert_params("C9", 2)

    def test_c12_pole(self):
        """Test that t = 1 is a pole of the C12 family."""
        with pytest.raises(ValueError):
            kubert_params("C12", 1)

    def test_singular_member(self):
        """Test that t = 0 gives a singular C10 curve."""
        with pytest.raises(ValueError):
            kubert_curve("C10", 0)

    def test_suite_is_deterministic(self, mocker):
        """Test that a fixed seed draws the same parameters."""
        mocker.patch("families.torsion_over_Q", return_value=(TorsionStructure.cyclic(10), []))
        first = [(r.target, r.t) for r in kubert_suite(count=2, seed=11)]
        second = [(r.target, r.t) for r in kubert_suite(count=2, seed=11)]
        assert first == second
        assert len(first) == 4

    def test_suite_parameters_in_range(self, mocker):
        """Test that each family gets count distinct admissible t in [-5, 5]."""
        mocker.patch("families.torsion_over_Q", return_value=(TorsionStructure.cyclic(10), []))
        results = kubert_suite(count=20, seed=5)
        for target in ("C10", "C12"):
            ts = [r.t for r in results if r.target == target]
            assert len(ts) == 20
            assert len(set(ts)) == 20
            assert all(-5 <= t <= 5 for t in ts)
        assert all(r.status != "degenerate" for r in results)

    def test_suite_redraws_degenerate_members(self, mocker):
        """Test that parameters rejected by the family are replaced."""
        real_curve = kubert_curve

        def positive_only(target, t):
            if t <= 0:
                raise ValueError("rejected")
            return real_curve(target, t)

        mocker.patch("families.kubert_curve", side_effect=positive_only)
        mocker.patch("families.torsion_over_Q", return_value=(TorsionStructure.cyclic(10), []))
        results = kubert_suite(count=5, seed=1)
        assert len(results) == 10
        assert all(r.t > 0 for r in results)

    def test_suite_without_enough_members(self, mocker):
        """Test that a family with too few admissible parameters raises."""
        mocker.patch("families.kubert_curve", side_effect=ValueError("pole"))
        with pytest.raises(ValueError, match="admissible"):
            kubert_suite(count=2, seed=1)

    @pytest.mark.slow
    def test_suite_passes(self):
        """Test torsion over Q of a few random members."""
        results = kubert_suite(count=2, seed=3)
        assert [r.status for r in results] == ["pass"] * 4

    @pytest.mark.slow
    def test_halving_gives_c20_and_c24(self):
        """Test that halving the marked point grows C10 to C20 and C12 to C24 over a quartic field."""
        results = kubert_suite(count=3, seed=3, halve=3)
        assert len(results) == 6
        for r in results:
            assert r.status == "pass", r.detail
            assert r.halving_degree == 4
            assert ("C20" if r.target == "C10" else "C24") in r.detail



class TestHalving:
    """Tests for halving rational points."""

    def test_halving_polynomial(self, curve_y2_x3_1):
        """Test x^4 - 8x for the point (0, 1) of y^2 = x^3 + 1."""
        E = curve_y2_x3_1
        assert halving_polynomial(E, E.point(0, 1)) == Poly((0, -8, 0, 0, 1))

    def test_halve_over_rationals(self, curve_y2_x3_1):
        """Test that (2, 3) halves (0, 1) when no quartic field works."""
        E = curve_y2_x3_1
        L, Q = halve_point(E, E.point(0, 1))
        assert L.degree == 1
        assert Q == E.point(2, 3)
        assert 2 * Q == E.point(0, 1)

    def test_point_of_infinite_order(self):
        """Test that a point of infinite order cannot be halved."""
        E = EllipticCurve([0, 0, 1, -1, 0])
        with pytest.raises(HalvingError):
            halve_point(E, E.point(0, 0))

    @pytest.mark.slow
    def test_halve_kubert_point(self):
        """Test that the order 10 point of a C10 curve halves over a quartic field."""
        curve, P = kubert_curve("C10", 2)
        L, Q = halve_point(curve, P)
        assert L.degree == 4
        assert exact_order(curve, Q, 20) == 20


class TestJMaps:
    """Tests for the j-invariant parametrizations."""

    def test_values(self):
        """Test small values of j5 and J2."""
        assert j_eval("j5", 1) == 4096
        assert j_eval("J2", 1) == -1728
        assert j_eval("j7", 7) == 3 ** 3 * 5 ** 3 * 17 ** 3

    def test_pole(self):
        """Test that t = 0 is a pole of j5."""
        with pytest.raises(ZeroDivisionError):
            j_eval("j5", 0)

    def test_unknown_map(self):
        """Test that an unknown name raises."""
        with pytest.raises(ValueError):
            j_eval("j11", 1)


class TestWitnesses:
    """Tests for the plane curve witnesses."""

    def test_all_witnesses_hold(self):
        """Test every stored point and j-invariant set."""
        report = verify_witnesses()
        assert report.passed
        assert report.failures() == []

    def test_wrong_point_fails(self):
        """Test that a point off its curve is reported."""
        witness = PlaneCurveWitness("y^2 = x^6 + 1", lambda x, y: y * y - (x ** 6 + 1), [(1, 1)])
        report = verify_witnesses([witness])
        assert not report.passed
        assert report.failures()[0].detail == "residual -1"

    def test_wrong_j_invariants_fail(self):
        """Test that an unexpected j-invariant set is reported."""
        witness = PlaneCurveWitness(
            "h*s^3 = h^2 + 13*h + 49",
            lambda h, s: h * s ** 3 - (h * h + 13 * h + 49),
            [(7, 3)],
            j_map=lambda point: j_eval("j7", point[0]),
            expected_j={0},
        )
        report = verify_witnesses([witness])
        assert [c.name for c in report.failures()] == ["j-invariants on h*s^3 = h^2 + 13*h + 49"]


class TestC15:
    """Tests for the curves with C15 over a quartic field."""

    def test_j_invariants(self, fixture_records):
        """Test j-invariants of the fixture curves; 450b2 is not in the fixture."""
        report = c15_check(fixture_records, with_torsion=False)
        statuses = {c.name: c.status for c in report.checks}
        assert statuses == {
            "j(50a1)": "pass",
            "j(450b2)": "skip",
            "j(50a3)": "pass",
            "j(50a4)": "pass",
        }
        assert report.passed

    def test_missing_records(self):
        """Test that an empty record set only skips."""
        report = c15_check({}, with_torsion=True)
        assert len(report.checks) == len(C15_LABELS) + 1
        assert all(c.status == "skip" for c in report.checks)

    @pytest.mark.slow
    def test_torsion_of_50a4(self, fixture_records):
        """Test that 50a4 has C15 over the quartic field."""
        report = c15_check(fixture_records)
        torsion = report.checks[-1]
        assert torsion.status == "pass"
        assert torsion.detail == f"computed {TorsionStructure.cyclic(15)}"
