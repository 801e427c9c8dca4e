"""
Tests for exactmath module.
"""
import random
from fractions import Fraction

import pytest
import sympy

from exactmath import (
    Poly,
    bounded_factors,
    discriminant,
    exact_div,
    factor_mod_p,
    normalize_rational,
    parse_poly,
    poly_arith,
    poly_gcd,
    poly_xgcd,
    rational_roots,
    rational_square_root,
    resultant,
    squarefree_kernel,
    squarefree_part,
)

X = Poly.x()


def sympy_bounded_factors(f, max_degree):
    """Factors of degree <= max_degree according to sympy, as primitive Polys."""
    x = sympy.Symbol("x")
    expr = sum(sympy.Rational(c.numerator, c.denominator) * x**i for i, c in enumerate(map(Fraction, f.coeffs)))
    _, factors = sympy.factor_list(expr, x)
    found = []
    for factor, _ in factors:
        coeffs = [int(c) for c in reversed(sympy.Poly(factor, x).all_coeffs())]
        if coeffs[-1] < 0:
            coeffs = [-c for c in coeffs]
        if 1 <= len(coeffs) - 1 <= max_degree:
            found.append(Poly(coeffs))
    return sorted(found, key=lambda g: (g.degree, g.coeffs))


class TestRationals:
    """Tests for rational helpers."""

    def test_normalize_rational(self):
        """Test that integral Fractions collapse to ints."""
        assert normalize_rational(Fraction(6, 3)) == 2
        assert isinstance(normalize_rational(Fraction(6, 3)), int)
        assert normalize_rational(Fraction(1, 2)) == Fraction(1, 2)

    def test_exact_div_stays_integral(self):
        """Test that exact_div keeps int results as ints."""
        assert exact_div(12, 4) == 3
        assert isinstance(exact_div(12, 4), int)
        assert exact_div(1, 3) == Fraction(1, 3)
        assert exact_div(Fraction(3, 2), Fraction(3, 4)) == 2

    def test_exact_div_by_zero(self):
        """Test that dividing by zero raises ZeroDivisionError."""
        with pytest.raises(ZeroDivisionError):
            exact_div(1, 0)

    def test_squarefree_kernel(self):
        """Test squarefree kernels of rationals."""
        assert squarefree_kernel(-12) == -3
        assert squarefree_kernel(Fraction(2, 9)) == 2
        assert squarefree_kernel(Fraction(1, 2)) == 2
        assert squarefree_kernel(-243) == -3

    def test_squarefree_kernel_of_zero(self):
        """Test that zero has no kernel."""
        with pytest.raises(ValueError):
            squarefree_kernel(0)

    def test_rational_square_root(self):
        """Test square roots of rational squares."""
        assert rational_square_root(Fraction(9, 4)) == Fraction(3, 2)
        assert rational_square_root(16) == 4
        assert rational_square_root(2) is None
        assert rational_square_root(-4) is None


class TestPolyArithmetic:
    """Tests for the Poly class."""

    def test_coefficients_are_trimmed(self):
        """Test that trailing zeros are dropped."""
        assert Poly((1, 2, 0, 0)).degree == 1
        assert Poly().is_zero()
        assert Poly().degree == -1

    def test_multiplication(self):
        """Test a small product."""
        assert (X + 1) * (X - 1) == Poly((-1, 0, 1))
        assert 2 * (X + 1) == Poly((2, 2))

    @pytest.mark.parametrize("a_range, b_range", [
        ((-10**6, 10**6), (-10**6, 10**6)),
        ((1, 10**6), (1, 10**6)),
        ((-10**6, -1), (-10**6, -1)),
        ((1, 10**6), (-10**6, -1)),
        ((-10**6, 10**6), (1, 10**6)),
    ])
    def test_large_multiplication_matches_sympy(self, a_range, b_range):
        """Test that the packed integer product agrees with sympy for every sign pattern."""
        rng = random.Random(7)
        a = Poly([rng.randint(*a_range) for _ in range(30)])
        b = Poly([rng.randint(*b_range) for _ in range(25)])
        x = sympy.Symbol("x")
        expected = sympy.Poly(list(reversed(a.coeffs)), x) * sympy.Poly(list(reversed(b.coeffs)), x)
        assert list((a * b).coeffs) == [int(c) for c in reversed(expected.all_coeffs())]

    def test_packed_product_of_positive_operands(self):
        """Test a product above the packing threshold with no negative coefficients."""
        a = Poly([300] * 12)
        b = Poly([1] * 12)
        expected = [300 * min(k + 1, 23 - k) for k in range(23)]
        assert list((a * b).coeffs) == expected
        assert list(poly_arith(a, b, "mul").coeffs) == expected

    def test_divrem(self):
        """Test Euclidean division with rational quotient."""
        q, r = Poly((1, 0, 1)).divrem(Poly((0, 2)))
        assert q == Poly((0, Fraction(1, 2)))
        assert r == Poly((1,))

    def test_divrem_by_zero(self):
        """Test that division by the zero polynomial raises."""
        with pytest.raises(ZeroDivisionError):
            Poly((1, 1)).divrem(Poly())

    def test_evaluate_and_compose(self):
        """Test Horner evaluation and composition."""
        f = Poly((1, 0, 1))
        assert f.evaluate(Fraction(1, 2)) == Fraction(5, 4)
        assert f(3) == 10
        assert f.compose(X + 1) == Poly((2, 2, 1))

    def test_content_and_primitive(self):
        """Test the split into content and primitive part."""
        content, primitive = Poly((Fraction(1, 2), Fraction(3, 2))).content_and_primitive()
        assert content == Fraction(1, 2)
        assert primitive == Poly((1, 3))

    def test_to_string(self):
        """Test the printed form."""
        assert Poly((19, -4, 5, -2, 1)).to_string() == "x^4 - 2*x^3 + 5*x^2 - 4*x + 19"
        assert Poly((Fraction(1, 2), 1)).to_string() == "x + 1/2"
        assert Poly((0, -1)).to_string("t") == "-t"

    def test_power_rejects_negative_exponent(self):
        """Test that negative powers are refused."""
        with pytest.raises(ValueError):
            X ** -1

    def test_poly_arith_dispatch(self):
        """Test the operation dispatcher."""
        assert poly_arith(X, 1, "add") == X + 1
        assert poly_arith(X * X, None, "derivative") == 2 * X
        with pytest.raises(ValueError):
            poly_arith(X, X, "pow")


class TestParsing:
    """Tests for parse_poly."""

    def test_parse_quartic(self):
        """Test parsing with implicit multiplication."""
        assert parse_poly("x^4 - 2*x^3 + 5x^2 - 4x + 19") == Poly((19, -4, 5, -2, 1))

    def test_parse_other_variable(self):
        """Test parsing a polynomial in t."""
        assert parse_poly("t^2 - 1/4", var="t") == Poly((Fraction(-1, 4), 0, 1))

    def test_parse_rejects_irrational_coefficients(self):
        """Test that non-rational coefficients raise ValueError."""
        with pytest.raises(ValueError):
            parse_poly("x^2 + sqrt(2)")

    def test_parse_rejects_non_polynomials(self):
        """Test that rational functions raise ValueError."""
        with pytest.raises(ValueError):
            parse_poly("1/x")


class TestGcdAndResultants:
    """Tests for gcds, resultants and discriminants."""

    def test_gcd(self):
        """Test a gcd over Q."""
        f = (X - 1) * (X + 2)
        g = (X - 1) * (X + 3)
        assert poly_gcd(f, g) == X - 1

    def test_gcd_coprime(self):
        """Test that coprime polynomials have gcd 1."""
        assert poly_gcd(X**2 + 1, X**2 - 2) == Poly((1,))

    def test_xgcd_identity(self):
        """Test the Bezout identity."""
        f = X**3 - 2
        g = X**2 + X + 1
        d, s, t = poly_xgcd(f, g)
        assert d == Poly((1,))
        assert s * f + t * g == d

    def test_squarefree_part(self):
        """Test removal of repeated factors."""
        assert squarefree_part((X - 1) ** 2 * (X + 1)) == Poly((-1, 0, 1))

    def test_resultant(self):
        """Test a resultant of two quadratics."""
        assert resultant(X**2 + 1, X**2 - 2) == 9

    def test_discriminant(self):
        """Test discriminants of small polynomials."""
        assert discriminant(X**2 + 1) == -4
        assert discriminant(X**2 - 2) == 8


class TestFactorization:
    """Tests for modular and bounded-degree factorization."""

    def test_factor_mod_p_split(self):
        """Test that x^2 + 1 splits modulo 5."""
        assert factor_mod_p(X**2 + 1, 5) == [(Poly((2, 1)), 1), (Poly((3, 1)), 1)]

    def test_factor_mod_p_irreducible(self):
        """Test that x^2 + 1 stays irreducible modulo 3."""
        assert factor_mod_p(X**2 + 1, 3) == [(Poly((1, 0, 1)), 1)]

    def test_factor_mod_p_multiplicity(self):
        """Test repeated factors modulo p."""
        assert factor_mod_p((X + 1) ** 2, 5) == [(Poly((1, 1)), 2)]

    def test_factor_mod_p_rejects_two(self):
        """Test that p = 2 is refused."""
        with pytest.raises(ValueError):
            factor_mod_p(X**2 + 1, 2)

    def test_two_torsion_cubic_of_90c4(self):
        """Test the factors of 4x^3 - 3x^2 - 10386x - 201123."""
        f = Poly((-201123, -10386, -3, 4))
        assert bounded_factors(f, 2) == [Poly((117, 4)), Poly((-1719, -30, 1))]

    def test_irreducible_quartic(self):
        """Test that x^4 + 1 has no factor of degree <= 2."""
        assert bounded_factors(X**4 + 1, 2) == []
        assert bounded_factors(X**4 + 1, 4) == [X**4 + 1]

    def test_factor_x_is_split_off(self):
        """Test that a root at zero gives the factor x."""
        assert bounded_factors(X * (X**2 + 3), 2) == [X, X**2 + 3]

    def test_repeated_factors_reported_once(self):
        """Test that multiplicities are dropped."""
        assert bounded_factors((X - 1) ** 3 * (X + 2), 1) == [X - 1, X + 2]

    def test_rational_input(self):
        """Test that rational coefficients are cleared."""
        f = (X - Fraction(1, 2)) * (X**2 + 1)
        assert bounded_factors(f, 2) == [2 * X - 1, X**2 + 1]

    @pytest.mark.parametrize("seed", range(1, 51))
    def test_matches_sympy(self, seed):
        """Test bounded factors of random products against sympy."""
        rng = random.Random(seed)
        f = Poly((1,))
        for degree in (1, 2, 2, 3, 4, 5):
            coeffs = [rng.randint(-9, 9) for _ in range(degree)] + [rng.randint(1, 5)]
            f = f * Poly(coeffs)
        for max_degree in (1, 2, 4):
            assert bounded_factors(f, max_degree) == sympy_bounded_factors(f, max_degree)

    def test_rational_roots(self):
        """Test rational roots in ascending order."""
        assert rational_roots(Poly((57, 9))) == [Fraction(-19, 3)]
        assert rational_roots((X - 1) * (X + 2) * (X**2 + 1)) == [-2, 1]
        assert rational_roots(X**2 + 1) == []
