"""
Exact arithmetic kernel.

Dense univariate polynomials over Q (the same class also carries
number-field coefficients), arithmetic modulo a prime, and the
bounded-degree integer factorization used by the torsion pipeline.
"""
import logging
import math
import random
from fractions import Fraction
from functools import reduce
from itertools import combinations

from sympy import Poly as SympyPoly
from sympy import Symbol, factorint, isprime, nextprime
from sympy.parsing.sympy_parser import (
    convert_xor,
    implicit_multiplication_application,
    parse_expr,
    standard_transformations,
)

import config

logger = logging.getLogger(__name__)

_PARSE_TRANSFORMATIONS = standard_transformations + (convert_xor, implicit_multiplication_application)

# Below this length schoolbook multiplication beats packing into big integers
_KRONECKER_THRESHOLD = 12


def normalize_rational(value):
    """Collapse a Fraction with denominator 1 to an int."""
    if isinstance(value, Fraction) and value.denominator == 1:
        return value.numerator
    return value


def _is_rational(value):
    return isinstance(value, (int, Fraction))


def _is_scalar(value):
    return _is_rational(value) or hasattr(value, "coords")


def exact_div(a, b):
    """
    Exact quotient a / b that stays in the integers when it can.

    Args:
        a: int, Fraction or number field element
        b: int, Fraction or number field element

    Returns:
        The quotient, as an int when both operands are ints and b divides a
    """
    if isinstance(a, int) and isinstance(b, int):
        if b == 0:
            raise ZeroDivisionError("division by zero")
        q, r = divmod(a, b)
        return q if r == 0 else Fraction(a, b)
    return normalize_rational(a / b)


# ---------------------------------------------------------------------------
# Coefficient-list helpers
# ---------------------------------------------------------------------------

def _trim(coeffs):
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _pack(coeffs, width):
    return int.from_bytes(b"".join(c.to_bytes(width, "little") for c in coeffs), "little")


def _unpack(value, width, count):
    raw = value.to_bytes(width * count, "little")
    return [int.from_bytes(raw[i * width:(i + 1) * width], "little") for i in range(count)]


def _kronecker_mul(a, b):
    """Product of two non-empty lists of non-negative ints via one big-integer product."""
    if not any(a) or not any(b):
        return [0] * (len(a) + len(b) - 1)
    bound = min(len(a), len(b)) * max(a) * max(b)
    width = bound.bit_length() // 8 + 1
    return _unpack(_pack(a, width) * _pack(b, width), width, len(a) + len(b) - 1)


def _schoolbook_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return out


def _int_mul(a, b):
    """Product of two integer coefficient lists (any sign)."""
    if len(a) < _KRONECKER_THRESHOLD or len(b) < _KRONECKER_THRESHOLD:
        return _schoolbook_mul(a, b)
    a_pos = [c if c > 0 else 0 for c in a]
    a_neg = [-c if c < 0 else 0 for c in a]
    b_pos = [c if c > 0 else 0 for c in b]
    b_neg = [-c if c < 0 else 0 for c in b]
    pp = _kronecker_mul(a_pos, b_pos)
    nn = _kronecker_mul(a_neg, b_neg)
    pn = _kronecker_mul(a_pos, b_neg)
    np_ = _kronecker_mul(a_neg, b_pos)
    return [w + x - y - z for w, x, y, z in zip(pp, nn, pn, np_)]


def _primitive_list(coeffs):
    """Primitive part of an integer coefficient list, leading coefficient positive."""
    g = reduce(math.gcd, coeffs, 0)
    if coeffs[-1] < 0:
        g = -g
    return [c // g for c in coeffs]


def _int_quotient(f, g):
    """
    Exact quotient f / g over Z.

    Returns:
        list or None: quotient coefficients, or None when g does not divide f
    """
    dg = len(g) - 1
    if len(f) - 1 < dg or f[-1] % g[-1]:
        return None
    if g[0] != 0 and f[0] % g[0]:
        return None
    r = list(f)
    lg = g[-1]
    q = [0] * (len(f) - dg)
    for i in range(len(r) - 1, dg - 1, -1):
        c = r[i]
        if c == 0:
            continue
        qc, rem = divmod(c, lg)
        if rem:
            return None
        q[i - dg] = qc
        for j in range(dg + 1):
            r[i - dg + j] -= qc * g[j]
    if any(r[:dg]):
        return None
    return q


def _pseudo_remainder(a, b):
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    while r and len(r) - 1 >= db:
        c = r[-1]
        shift = len(r) - 1 - db
        r = [x * lb for x in r]
        for j, y in enumerate(b):
            r[shift + j] -= c * y
        _trim(r)
    return r


# ---------------------------------------------------------------------------
# Polynomials
# ---------------------------------------------------------------------------

class Poly:
    """
    Immutable dense univariate polynomial, coefficients lowest degree first.

    Coefficients are ints and Fractions for polynomials over Q. Number field
    elements are accepted as coefficients too, which is how gcds over a
    field K are computed.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        coeffs = [normalize_rational(c) for c in coeffs]
        _trim(coeffs)
        self.coeffs = tuple(coeffs)

    @classmethod
    def x(cls):
        return cls((0, 1))

    @classmethod
    def constant(cls, value):
        return cls((value,))

    @classmethod
    def monomial(cls, value, degree):
        return cls([0] * degree + [value])

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, index):
        if 0 <= index < len(self.coeffs):
            return self.coeffs[index]
        return 0

    def __bool__(self):
        return bool(self.coeffs)

    def is_zero(self):
        return not self.coeffs

    def is_rational(self):
        return all(_is_rational(c) for c in self.coeffs)

    def is_integral(self):
        return all(isinstance(c, int) for c in self.coeffs)

    @staticmethod
    def _coerce(other):
        if isinstance(other, Poly):
            return other
        if _is_scalar(other):
            return Poly((other,))
        return NotImplemented

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(out)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return Poly()
        if self.is_integral() and other.is_integral():
            return Poly(_int_mul(list(self.coeffs), list(other.coeffs)))
        return Poly(_schoolbook_mul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"exponent must be a non-negative int, got {exponent!r}")
        result = Poly((1,))
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def divrem(self, other):
        """
        Euclidean division.

        Args:
            other (Poly): divisor

        Returns:
            tuple: (quotient, remainder) with deg remainder < deg other

        Raises:
            ZeroDivisionError: if other is the zero polynomial
        """
        other = self._coerce(other)
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        dg = other.degree
        if self.degree < dg:
            return Poly(), self
        r = list(self.coeffs)
        g = other.coeffs
        lcg = g[-1]
        q = [0] * (len(r) - dg)
        for i in range(len(r) - 1, dg - 1, -1):
            c = r[i]
            if c == 0:
                continue
            c = exact_div(c, lcg)
            q[i - dg] = c
            for j in range(dg + 1):
                r[i - dg + j] = r[i - dg + j] - c * g[j]
        return Poly(q), Poly(r[:dg])

    def __floordiv__(self, other):
        return self.divrem(other)[0]

    def __mod__(self, other):
        return self.divrem(other)[1]

    def __divmod__(self, other):
        return self.divrem(other)

    def derivative(self):
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:])

    def evaluate(self, value):
        """Horner evaluation at any ring element that mixes with the coefficients."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return normalize_rational(acc)

    __call__ = evaluate

    def compose(self, other):
        """Return self(other(x))."""
        other = self._coerce(other)
        acc = Poly()
        for c in reversed(self.coeffs):
            acc = acc * other + c
        return acc

    def monic(self):
        if not self.coeffs:
            return self
        lead = self.coeffs[-1]
        return Poly([exact_div(c, lead) for c in self.coeffs])

    def scale(self, value):
        return Poly([c * value for c in self.coeffs])

    def content_and_primitive(self):
        """
        Split a rational polynomial into content and primitive part.

        Returns:
            tuple: (content, primitive integer Poly with positive leading coefficient)
        """
        if not self.is_rational():
            raise TypeError("content is only defined for polynomials over Q")
        if not self.coeffs:
            return 0, Poly()
        den = math.lcm(*(Fraction(c).denominator for c in self.coeffs))
        nums = [int(c * den) for c in self.coeffs]
        g = reduce(math.gcd, nums, 0)
        if nums[-1] < 0:
            g = -g
        return normalize_rational(Fraction(g, den)), Poly([n // g for n in nums])

    def primitive(self):
        return self.content_and_primitive()[1]

    def is_squarefree(self):
        if self.degree < 1:
            return True
        return poly_gcd(self, self.derivative()).degree == 0

    def to_string(self, var="x"):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
            if _is_rational(c):
                sign = "-" if c < 0 else "+"
                mag = abs(c)
                if not mono:
                    body = str(mag)
                else:
                    body = mono if mag == 1 else f"{mag}*{mono}"
            else:
                sign = "+"
                body = f"({c})" + (f"*{mono}" if mono else "")
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"Poly({list(self.coeffs)!r})"


def as_poly(value):
    """Accept a Poly, a coefficient sequence (lowest degree first) or a polynomial string."""
    if isinstance(value, Poly):
        return value
    if isinstance(value, str):
        return parse_poly(value)
    if _is_scalar(value):
        return Poly((value,))
    return Poly(value)


def parse_poly(text, var="x"):
    """
    Parse a univariate polynomial with rational coefficients.

    Args:
        text (str): expression such as "x^4 - 2*x^3 + 5x^2 - 4x + 19"
        var (str): name of the variable

    Returns:
        Poly: parsed polynomial

    Raises:
        ValueError: if the text is not a polynomial over Q in var
    """
    symbol = Symbol(var)
    try:
        expr = parse_expr(text, local_dict={var: symbol}, transformations=_PARSE_TRANSFORMATIONS)
        parsed = SympyPoly(expr, symbol)
    except Exception as e:
        raise ValueError(f"Cannot parse polynomial {text!r}: {e}") from e
    coeffs = []
    for c in reversed(parsed.all_coeffs()):
        if not c.is_Rational:
            raise ValueError(f"Polynomial {text!r} has a non-rational coefficient {c}")
        coeffs.append(Fraction(int(c.p), int(c.q)))
    return Poly(coeffs)


def poly_gcd(f, g):
    """Monic gcd over Q, or over a number field when the coefficients live there."""
    f, g = as_poly(f), as_poly(g)
    if f.is_zero():
        return g.monic()
    if g.is_zero():
        return f.monic()
    if f.is_rational() and g.is_rational():
        return _rational_gcd(f, g)
    while g:
        f, g = g, f % g
    return f.monic()


def _rational_gcd(f, g):
    a = list(f.primitive().coeffs)
    b = list(g.primitive().coeffs)
    if _coprime_modulo_some_prime(a, b):
        return Poly((1,))
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _pseudo_remainder(a, b)
        a, b = b, (_primitive_list(r) if r else r)
    return Poly(a).monic()


def _coprime_modulo_some_prime(a, b, attempts=3):
    """A unit gcd modulo a prime not dividing either leading coefficient proves coprimality over Q."""
    p = max(config.FACTOR_START_PRIME, 3)
    tried = 0
    while tried < attempts:
        if a[-1] % p and b[-1] % p:
            tried += 1
            if len(_mod_gcd(_mod_reduce(a, p), _mod_reduce(b, p), p)) == 1:
                return True
        p = nextprime(p)
    return False


def poly_xgcd(f, g):
    """
    Extended Euclid over a field.

    Returns:
        tuple: (d, s, t) with d monic and s*f + t*g = d
    """
    r0, r1 = as_poly(f), as_poly(g)
    s0, s1 = Poly((1,)), Poly()
    t0, t1 = Poly(), Poly((1,))
    while r1:
        q, r = r0.divrem(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    lead = r0.lc
    inverse = exact_div(1, lead)
    return r0.scale(inverse), s0.scale(inverse), t0.scale(inverse)


def poly_arith(f, g, op):
    """
    Dispatch one exact polynomial operation by name.

    Args:
        f (Poly): first operand
        g (Poly or None): second operand, ignored by unary operations
        op (str): add, sub, mul, divrem, gcd, derivative or content_and_primitive
    """
    f = as_poly(f)
    if op == "derivative":
        return f.derivative()
    if op == "content_and_primitive":
        return f.content_and_primitive()
    g = as_poly(g)
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    if op == "divrem":
        return f.divrem(g)
    if op == "gcd":
        return poly_gcd(f, g)
    raise ValueError(f"Unknown polynomial operation: {op}")


def squarefree_part(f):
    """
    Monic squarefree part f / gcd(f, f').

    Raises:
        ValueError: if f is zero
    """
    f = as_poly(f)
    if f.is_zero():
        raise ValueError("squarefree part of the zero polynomial is undefined")
    return _squarefree_primitive(f).monic()


def _squarefree_primitive(f):
    if f.degree < 1:
        return Poly((1,))
    g = poly_gcd(f, f.derivative())
    if g.degree == 0:
        return f.primitive()
    return (f // g).primitive()


def resultant(f, g):
    """Resultant of two polynomials over Q by the Euclidean recursion."""
    f, g = as_poly(f), as_poly(g)
    if f.is_zero() or g.is_zero():
        return 0
    if f.degree < g.degree:
        sign = -1 if (f.degree * g.degree) % 2 else 1
        return sign * resultant(g, f)
    res = 1
    while g.degree > 0:
        r = f % g
        if r.is_zero():
            return 0
        if (f.degree * g.degree) % 2:
            res = -res
        res = res * g.lc ** (f.degree - r.degree)
        f, g = g, r
    return normalize_rational(res * g.lc ** f.degree)


def discriminant(f):
    f = as_poly(f)
    n = f.degree
    if n < 1:
        raise ValueError("discriminant needs a non-constant polynomial")
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return exact_div(sign * resultant(f, f.derivative()), f.lc)


def squarefree_kernel(value):
    """
    Squarefree integer d with value = d * (rational square).

    Args:
        value (int or Fraction): non-zero rational

    Returns:
        int: signed squarefree kernel
    """
    value = Fraction(value)
    if value == 0:
        raise ValueError("zero has no squarefree kernel")
    n = value.numerator * value.denominator
    kernel = 1
    for prime, exponent in factorint(abs(n)).items():
        if exponent % 2:
            kernel *= prime
    return -kernel if n < 0 else kernel


def rational_square_root(value):
    """Non-negative rational square root, or None when value is not a square in Q."""
    value = Fraction(value)
    if value < 0:
        return None
    num = math.isqrt(value.numerator)
    den = math.isqrt(value.denominator)
    if num * num != value.numerator or den * den != value.denominator:
        return None
    return normalize_rational(Fraction(num, den))


# ---------------------------------------------------------------------------
# Arithmetic modulo m (lists of residues, lowest degree first)
# ---------------------------------------------------------------------------

def _mod_reduce(coeffs, m):
    return _trim([c % m for c in coeffs])


def _mod_add(a, b, m):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % m
    return _trim(out)


def _mod_sub(a, b, m):
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % m
    return _trim(out)


def _mod_mul(a, b, m):
    if not a or not b:
        return []
    if len(a) < _KRONECKER_THRESHOLD or len(b) < _KRONECKER_THRESHOLD:
        product = _schoolbook_mul(a, b)
    else:
        product = _kronecker_mul(a, b)
    return _trim([c % m for c in product])


def _mod_scale(a, value, m):
    return _trim([(c * value) % m for c in a])


def _mod_monic(a, m):
    return _mod_scale(a, pow(a[-1], -1, m), m)


def _mod_divmod(a, b, m):
    """Division by b whose leading coefficient is invertible modulo m."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    db = len(b) - 1
    r = list(a)
    if len(r) - 1 < db:
        return [], _trim(r)
    inverse = pow(b[-1], -1, m)
    q = [0] * (len(r) - db)
    for i in range(len(r) - 1, db - 1, -1):
        c = (r[i] * inverse) % m
        if c:
            q[i - db] = c
            for j in range(db + 1):
                r[i - db + j] = (r[i - db + j] - c * b[j]) % m
    return _trim(q), _trim(r[:db])


def _mod_rem(a, b, m):
    return _mod_divmod(a, b, m)[1]


def _mod_gcd(a, b, p):
    while b:
        a, b = b, _mod_rem(a, b, p)
    return _mod_monic(a, p) if a else a


def _mod_xgcd(a, b, p):
    r0, r1 = a, b
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = _mod_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _mod_sub(s0, _mod_mul(q, s1, p), p)
        t0, t1 = t1, _mod_sub(t0, _mod_mul(q, t1, p), p)
    inverse = pow(r0[-1], -1, p)
    return _mod_scale(r0, inverse, p), _mod_scale(s0, inverse, p), _mod_scale(t0, inverse, p)


def _mod_powmod(base, exponent, modulus, m):
    result = [1]
    base = _mod_rem(base, modulus, m)
    while exponent:
        if exponent & 1:
            result = _mod_rem(_mod_mul(result, base, m), modulus, m)
        exponent >>= 1
        if exponent:
            base = _mod_rem(_mod_mul(base, base, m), modulus, m)
    return result


def _mod_derivative(a, m):
    return _trim([(i * c) % m for i, c in enumerate(a)][1:])


def _mod_squarefree_decomposition(a, p):
    """Squarefree decomposition of a monic polynomial over F_p as (factor, multiplicity) pairs."""
    da = _mod_derivative(a, p)
    if not da:
        return [(g, k * p) for g, k in _mod_squarefree_decomposition(a[::p], p)]
    out = []
    c = _mod_gcd(a, da, p)
    w = _mod_divmod(a, c, p)[0]
    i = 1
    while len(w) > 1:
        y = _mod_gcd(w, c, p)
        factor = _mod_divmod(w, y, p)[0]
        if len(factor) > 1:
            out.append((factor, i))
        w = y
        c = _mod_divmod(c, y, p)[0]
        i += 1
    if len(c) > 1:
        out.extend((g, k * p) for g, k in _mod_squarefree_decomposition(c[::p], p))
    return out


def _mod_distinct_degree(a, p, max_degree=None):
    """
    Distinct-degree factorization of a monic squarefree polynomial over F_p.

    Returns:
        tuple: (list of (d, product of all degree-d irreducible factors),
                cofactor holding the factors of degree > max_degree)
    """
    x = [0, 1]
    h = x
    rest = a
    d = 0
    parts = []
    while True:
        n = len(rest) - 1
        if n < 2 * (d + 1):
            if n > 0 and (max_degree is None or n <= max_degree):
                parts.append((n, rest))
                rest = [1]
            break
        d += 1
        if max_degree is not None and d > max_degree:
            break
        h = _mod_powmod(h, p, rest, p)
        g = _mod_gcd(rest, _mod_sub(h, x, p), p)
        if len(g) > 1:
            parts.append((d, g))
            rest = _mod_divmod(rest, g, p)[0]
            h = _mod_rem(h, rest, p)
    return parts, rest


def _mod_equal_degree(a, d, p, rng):
    """Cantor-Zassenhaus splitting of a product of degree-d irreducibles over F_p, p odd."""
    n = len(a) - 1
    if n == d:
        return [a]
    exponent = (p ** d - 1) // 2
    factors = [a]
    while len(factors) < n // d:
        sample = _trim([rng.randrange(p) for _ in range(n)])
        if len(sample) < 2:
            continue
        split = []
        for u in factors:
            if len(u) - 1 == d:
                split.append(u)
                continue
            b = _mod_powmod(sample, exponent, u, p)
            g = _mod_gcd(u, _mod_sub(b, [1], p), p)
            if 1 < len(g) < len(u):
                split.append(g)
                split.append(_mod_divmod(u, g, p)[0])
            else:
                split.append(u)
        factors = split
    return factors


def _factor_key(f):
    return (f.degree, f.coeffs)


def factor_mod_p(f, p):
    """
    Factor an integer polynomial over F_p.

    Args:
        f (Poly): polynomial with integer coefficients
        p (int): odd prime

    Returns:
        list: (monic irreducible factor as Poly over [0, p), multiplicity) pairs;
            their product is f mod p up to a unit
    """
    f = as_poly(f)
    if p == 2 or not isprime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    if not f.is_integral():
        raise ValueError("factor_mod_p needs integer coefficients")
    a = _mod_reduce(list(f.coeffs), p)
    if not a:
        raise ValueError(f"polynomial vanishes modulo {p}")
    if len(a) == 1:
        return []
    rng = random.Random(config.RANDOM_SEED)
    factors = []
    for part, multiplicity in _mod_squarefree_decomposition(_mod_monic(a, p), p):
        low, _ = _mod_distinct_degree(part, p)
        for degree, product in low:
            for factor in _mod_equal_degree(product, degree, p, rng):
                factors.append((Poly(factor), multiplicity))
    factors.sort(key=lambda item: (_factor_key(item[0]), item[1]))
    return factors


# ---------------------------------------------------------------------------
# Bounded-degree factorization over Z
# ---------------------------------------------------------------------------

def _choose_prime(f):
    """First prime keeping the degree of f and its squarefreeness."""
    p = max(config.FACTOR_START_PRIME, 3)
    while True:
        if f[-1] % p:
            a = _mod_reduce(f, p)
            if len(_mod_gcd(a, _mod_derivative(a, p), p)) == 1:
                return p
        p = nextprime(p)


def _hensel_lift(f, g, h, p, bound):
    """
    Quadratic Hensel lifting of f = g*h mod p with h monic.

    Returns:
        tuple: (g, h, modulus) with f = g*h modulo the returned modulus > bound
    """
    _, s, t = _mod_xgcd(g, h, p)
    m = p
    while m <= bound:
        m2 = m * m
        e = _mod_sub(_mod_reduce(f, m2), _mod_mul(g, h, m2), m2)
        q, r = _mod_divmod(_mod_mul(s, e, m2), h, m2)
        g = _mod_add(g, _mod_add(_mod_mul(t, e, m2), _mod_mul(q, g, m2), m2), m2)
        h = _mod_add(h, r, m2)
        b = _mod_sub(_mod_add(_mod_mul(s, g, m2), _mod_mul(t, h, m2), m2), [1], m2)
        c, d = _mod_divmod(_mod_mul(s, b, m2), h, m2)
        s = _mod_sub(s, d, m2)
        t = _mod_sub(t, _mod_add(_mod_mul(t, b, m2), _mod_mul(c, g, m2), m2), m2)
        m = m2
    return g, h, m


def _lift_all(f, modular, p, bound):
    """Lift each small modular factor in turn, peeling it off the running cofactor."""
    lifted = []
    cofactor = list(f)
    modulus = p
    for factor in modular:
        g = _mod_divmod(_mod_reduce(cofactor, p), factor, p)[0]
        g, h, modulus = _hensel_lift(cofactor, g, factor, p, bound)
        lifted.append(h)
        cofactor = g
    return lifted, modulus


def _recombine(f, lifted, modulus, max_degree):
    lead = f[-1]
    half = modulus // 2
    pool = list(range(len(lifted)))
    found = []
    size = 1
    while size <= len(pool):
        hit = None
        for subset in combinations(pool, size):
            if sum(len(lifted[i]) - 1 for i in subset) > max_degree:
                continue
            candidate = [lead % modulus]
            for i in subset:
                candidate = _mod_mul(candidate, lifted[i], modulus)
            candidate = _primitive_list([c - modulus if c > half else c for c in candidate])
            if _int_quotient(f, candidate) is not None:
                hit = subset
                found.append(Poly(candidate))
                break
        if hit is None:
            size += 1
        else:
            pool = [i for i in pool if i not in hit]
    return found


def _bounded_factors_primitive(f, max_degree):
    if len(f) == 2:
        return [Poly(f)]
    p = _choose_prime(f)
    a = _mod_monic(_mod_reduce(f, p), p)
    low, cofactor = _mod_distinct_degree(a, p, max_degree)
    rng = random.Random(config.RANDOM_SEED)
    modular = []
    for degree, product in low:
        modular.extend(_mod_equal_degree(product, degree, p, rng))
    logger.debug(
        f"Degree {len(f) - 1}: prime {p}, {len(modular)} modular factors of degree <= {max_degree}, "
        f"cofactor degree {len(cofactor) - 1}"
    )
    if not modular:
        return []
    norm = math.isqrt(sum(c * c for c in f)) + 1
    bound = 2 * abs(f[-1]) * (1 << max_degree) * norm
    lifted, modulus = _lift_all(f, modular, p, bound)
    logger.debug(f"Lifted to modulus {p}^{round(math.log(modulus, p))}")
    return _recombine(f, lifted, modulus, max_degree)


def bounded_factors(f, max_degree):
    """
    Irreducible factors of degree at most max_degree.

    Args:
        f (Poly): non-zero polynomial over Q
        max_degree (int): degree bound D

    Returns:
        list: distinct primitive integer irreducible factors of degree <= D,
            sorted by (degree, coefficients)
    """
    f = as_poly(f)
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    if max_degree < 1 or f.degree < 1:
        return []
    coeffs = list(_squarefree_primitive(f).coeffs)
    factors = []
    if coeffs[0] == 0:
        factors.append(Poly.x())
        coeffs = coeffs[1:]
    if len(coeffs) > 1:
        factors.extend(_bounded_factors_primitive(coeffs, max_degree))
    factors.sort(key=_factor_key)
    return factors


def rational_roots(f):
    """Distinct rational roots of a non-zero polynomial, ascending."""
    return sorted(normalize_rational(Fraction(-g[0], g[1])) for g in bounded_factors(f, 1))
