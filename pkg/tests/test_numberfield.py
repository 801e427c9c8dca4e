"""
Tests for numberfield module.
"""
from fractions import Fraction

import pytest

from exactmath import Poly
from numberfield import (
    NumberField,
    adjoin_sqrt,
    canonical_field,
    compositum,
    describe_field,
    field_with_root,
    is_isomorphic,
    nf_arith,
    quadratic_subfields,
    roots_in_field,
    sqrt_in_field,
)


@pytest.fixture
def gaussian():
    """Q(i)."""
    return NumberField(Poly((1, 0, 1)))


@pytest.fixture
def cyclotomic8():
    """Q(zeta_8) = Q(i, sqrt(2))."""
    return NumberField(Poly((1, 0, 0, 0, 1)))


class TestNumberField:
    """Tests for NumberField construction."""

    def test_reducible_polynomial_rejected(self):
        """Test that x^2 - 1 does not define a field."""
        with pytest.raises(ValueError):
            NumberField(Poly((-1, 0, 1)))

    def test_unsupported_degree_rejected(self):
        """Test that cubic fields are refused."""
        with pytest.raises(ValueError):
            NumberField(Poly((-2, 0, 0, 1)))

    def test_reducible_quartic_rejected(self):
        """Test that a product of two quadratics is refused."""
        with pytest.raises(ValueError):
            NumberField(Poly((1, 0, 1)) * Poly((-2, 0, 1)))

    def test_from_polynomial_makes_monic_integral_model(self):
        """Test the model a^(n-1) f(x / a) for a non-monic polynomial."""
        field, root = field_with_root(Poly((1, 0, 2)))
        assert field.min_poly == Poly((2, 0, 1))
        assert 2 * root * root + 1 == 0

    def test_equality_by_minimal_polynomial(self, gaussian):
        """Test that fields compare by their minimal polynomial."""
        assert gaussian == NumberField(Poly((1, 0, 1)))
        assert gaussian != NumberField.quadratic(-2)


class TestElements:
    """Tests for NFElement arithmetic."""

    def test_gaussian_arithmetic(self, gaussian):
        """Test i^2 = -1 and inverses."""
        i = gaussian.gen()
        assert i * i == -1
        z = 1 + i
        assert z * z.inverse() == 1
        assert z / z == gaussian.one()
        assert z ** -2 * z ** 2 == 1

    def test_norm(self, gaussian):
        """Test the norm of 1 + i."""
        assert (1 + gaussian.gen()).norm() == 2

    def test_inverse_of_zero(self, gaussian):
        """Test that zero has no inverse."""
        with pytest.raises(ZeroDivisionError):
            gaussian.zero().inverse()

    def test_mixed_fields_rejected(self, gaussian):
        """Test that elements of different fields do not mix."""
        other = NumberField.quadratic(2)
        with pytest.raises(TypeError):
            gaussian.gen() + other.gen()

    def test_minimal_polynomial(self, cyclotomic8):
        """Test that zeta_8^2 has minimal polynomial x^2 + 1."""
        a = cyclotomic8.gen()
        assert (a * a).minimal_polynomial() == Poly((1, 0, 1))
        assert a.minimal_polynomial() == cyclotomic8.min_poly

    def test_rational_elements_hash_like_rationals(self, gaussian):
        """Test that rational elements are interchangeable with Fractions in sets."""
        assert gaussian(Fraction(1, 2)) == Fraction(1, 2)
        assert hash(gaussian(Fraction(1, 2))) == hash(Fraction(1, 2))

    def test_nf_arith(self, gaussian):
        """Test the operation dispatcher."""
        i = gaussian.gen()
        assert nf_arith(i, i, "mul") == -1
        assert nf_arith(i, None, "inv") == -i
        with pytest.raises(ValueError):
            nf_arith(i, i, "pow")


class TestRoots:
    """Tests for root finding."""

    def test_sqrt2_in_cyclotomic8(self, cyclotomic8):
        """Test the two square roots of 2 in Q(zeta_8)."""
        roots = roots_in_field(Poly((-2, 0, 1)), cyclotomic8)
        assert len(roots) == 2
        assert all(r * r == 2 for r in roots)
        assert roots[0] == -roots[1]

    def test_methods_agree(self, cyclotomic8):
        """Test that the norm and embedding methods find the same roots."""
        f = Poly((-2, 0, 1)) * Poly((1, 0, 1)) * Poly((3, 0, 1))
        assert roots_in_field(f, cyclotomic8, "norm") == roots_in_field(f, cyclotomic8, "linear")

    def test_rational_roots_found(self, gaussian):
        """Test that linear factors give rational roots."""
        roots = roots_in_field(Poly((57, 9)), gaussian)
        assert roots == [gaussian(Fraction(-19, 3))]

    def test_unknown_method(self, gaussian):
        """Test that an unknown method name raises."""
        with pytest.raises(ValueError):
            roots_in_field(Poly((1, 0, 1)), gaussian, "bisection")

    def test_sqrt_in_field(self, gaussian):
        """Test square roots in Q(i)."""
        assert sqrt_in_field(2, gaussian) == []
        assert sqrt_in_field(0, gaussian) == [gaussian.zero()]
        assert sqrt_in_field(4, gaussian) == [gaussian(-2), gaussian(2)]
        assert sorted(r.coords for r in sqrt_in_field(-1, gaussian)) == [(0, -1), (0, 1)]

    def test_sqrt_of_irrational_element(self, cyclotomic8):
        """Test that zeta_8^2 = i has the square roots +-zeta_8."""
        a = cyclotomic8.gen()
        roots = sqrt_in_field(a * a, cyclotomic8)
        assert set(r.coords for r in roots) == {a.coords, (-a).coords}


class TestFieldOperations:
    """Tests for field constructions and comparisons."""

    def test_adjoin_sqrt_over_rationals(self):
        """Test Q(sqrt(-3))."""
        field = adjoin_sqrt(NumberField.rationals(), -3)
        assert field.min_poly == Poly((3, 0, 1))

    def test_adjoin_sqrt_over_quadratic(self, gaussian, cyclotomic8):
        """Test that Q(i)(sqrt(2)) is Q(zeta_8)."""
        field = adjoin_sqrt(gaussian, 2)
        assert field.degree == 4
        assert is_isomorphic(field, cyclotomic8)

    def test_canonical_field(self):
        """Test that x^2 + x + 1 becomes x^2 + 3."""
        assert canonical_field(NumberField(Poly((1, 1, 1)))) == NumberField.quadratic(-3)

    def test_isomorphic_models_of_zeta12(self):
        """Test two models of Q(zeta_12)."""
        first = NumberField(Poly((16, 0, -4, 0, 1)))
        second = NumberField(Poly((1, 0, -1, 0, 1)))
        assert is_isomorphic(first, second)
        assert not is_isomorphic(first, NumberField(Poly((1, 0, 0, 0, 1))))

    def test_quadratic_subfields_biquadratic(self):
        """Test the three quadratic subfields of Q(i, sqrt(6))."""
        field = NumberField(Poly((49, 0, -10, 0, 1)))
        subfields = quadratic_subfields(field)
        assert [F.min_poly for F in subfields] == [Poly((1, 0, 1)), Poly((6, 0, 1)), Poly((-6, 0, 1))]

    def test_quadratic_subfield_of_pure_quartic(self):
        """Test that Q(6^(1/4)) contains only Q(sqrt(6))."""
        subfields = quadratic_subfields(NumberField(Poly((-6, 0, 0, 0, 1))))
        assert [F.min_poly for F in subfields] == [Poly((-6, 0, 1))]

    def test_quadratic_subfield_of_cyclotomic5(self):
        """Test that Q(zeta_5) contains Q(sqrt(5))."""
        subfields = quadratic_subfields(NumberField(Poly((1, 1, 1, 1, 1))))
        assert [F.min_poly for F in subfields] == [Poly((-5, 0, 1))]

    def test_quadratic_subfields_needs_quartic(self, gaussian):
        """Test that quadratic fields are refused."""
        with pytest.raises(ValueError):
            quadratic_subfields(gaussian)

    def test_compositum_of_two_quadratics(self):
        """Test that Q(sqrt(-6)) Q(sqrt(-3)) is Q(sqrt(2), sqrt(-3))."""
        fields = compositum(NumberField.quadratic(-6), NumberField.quadratic(-3))
        assert len(fields) == 1
        assert fields[0].degree == 4
        assert is_isomorphic(fields[0], NumberField(Poly((25, 0, 2, 0, 1))))

    def test_compositum_too_large(self):
        """Test that Q(zeta_5) Q(sqrt(-3)) has degree 8 and is discarded."""
        assert compositum(NumberField(Poly((1, 1, 1, 1, 1))), NumberField.quadratic(-3), 4) == []

    def test_compositum_with_subfield(self, cyclotomic8):
        """Test that Q(zeta_8) Q(i) is Q(zeta_8)."""
        fields = compositum(NumberField.quadratic(-1), cyclotomic8)
        assert len(fields) == 1
        assert is_isomorphic(fields[0], cyclotomic8)

    def test_describe_field(self, gaussian):
        """Test the short labels."""
        assert describe_field(NumberField.rationals()) == "Q"
        assert describe_field(gaussian) == "Q(sqrt(-1))"
        assert describe_field(NumberField(Poly((49, 0, -10, 0, 1)))) == "Q(sqrt(-1), sqrt(-6))"
        assert describe_field(NumberField(Poly((-6, 0, 0, 0, 1)))) == "quartic over Q(sqrt(6))"
