"""
Number fields of degree 1, 2 and 4 given by a monic minimal polynomial.

Elements are coordinate vectors in the power basis. Root finding in a
field has two independent implementations (norm factoring and numeric
embeddings) that are expected to agree.
"""
import logging
import math
from fractions import Fraction
from itertools import count, permutations, product

import mpmath as mp

import config
from exactmath import (
    Poly,
    as_poly,
    bounded_factors,
    discriminant,
    normalize_rational,
    poly_gcd,
    poly_xgcd,
    rational_roots,
    rational_square_root,
    resultant,
    squarefree_kernel,
)

logger = logging.getLogger(__name__)

SUPPORTED_DEGREES = (1, 2, 4)
ROOT_METHODS = ("norm", "linear")

# Shift limit for the norm method; a squarefree norm appears long before this
_MAX_SHIFT = 64


class NumberField:
    """Q(alpha) with alpha a root of a monic irreducible polynomial over Q."""

    def __init__(self, min_poly, label=None, check=True):
        min_poly = as_poly(min_poly)
        if not min_poly.is_rational():
            raise TypeError("minimal polynomial must have rational coefficients")
        min_poly = min_poly.monic()
        degree = min_poly.degree
        if degree not in SUPPORTED_DEGREES:
            raise ValueError(f"Unsupported field degree {degree}; only 1, 2 and 4 are handled")
        if check and degree > 1 and bounded_factors(min_poly, degree // 2):
            raise ValueError(f"{min_poly} is reducible over Q")
        self.min_poly = min_poly
        self.degree = degree
        self.label = label
        self._reduction = [self._power_coords(k) for k in range(degree, 2 * degree - 1)]

    @classmethod
    def from_polynomial(cls, f, label=None, check=True):
        """
        Field generated by a root of an irreducible polynomial.

        The monic integral model a^(n-1) * f(x / a) is used, a the leading
        coefficient of the primitive part of f.

        Args:
            f (Poly): irreducible polynomial over Q
            label (str, optional): display label
            check (bool): verify irreducibility

        Returns:
            NumberField: the field, generated by a * theta for a root theta of f
        """
        prim = as_poly(f).primitive()
        n = prim.degree
        lead = prim.lc
        coeffs = [c * lead ** (n - 1 - i) for i, c in enumerate(prim.coeffs[:-1])] + [1]
        return cls(Poly(coeffs), label=label, check=check)

    @classmethod
    def quadratic(cls, d):
        """Q(sqrt(d)) in the canonical form x^2 - d, d a squarefree integer."""
        return cls(Poly((-d, 0, 1)), label=f"Q(sqrt({d}))", check=False)

    @classmethod
    def rationals(cls):
        return cls(Poly.x(), label="Q", check=False)

    def _power_coords(self, k):
        return _pad((Poly.monomial(1, k) % self.min_poly).coeffs, self.degree)

    def __call__(self, value):
        if isinstance(value, NFElement):
            if value.field != self:
                raise TypeError("element belongs to a different number field")
            return value
        return NFElement(self, (value,))

    def zero(self):
        return NFElement(self, ())

    def one(self):
        return NFElement(self, (1,))

    def gen(self):
        return NFElement(self, _pad((Poly.x() % self.min_poly).coeffs, self.degree))

    def __eq__(self, other):
        if not isinstance(other, NumberField):
            return NotImplemented
        return self.min_poly == other.min_poly

    def __hash__(self):
        return hash(("NumberField", self.min_poly.coeffs))

    def __repr__(self):
        return f"NumberField({self.min_poly})"

    def __str__(self):
        return self.label or f"Q[x]/({self.min_poly})"


def _pad(coeffs, length):
    coeffs = list(coeffs)
    if len(coeffs) > length:
        raise ValueError(f"{len(coeffs)} coordinates do not fit a field of degree {length}")
    return coeffs + [0] * (length - len(coeffs))


class NFElement:
    """Immutable element of a NumberField, stored by power-basis coordinates."""

    __slots__ = ("field", "coords")

    def __init__(self, field, coords):
        self.field = field
        self.coords = tuple(normalize_rational(Fraction(c)) for c in _pad(coords, field.degree))

    def _coerce(self, other):
        if isinstance(other, NFElement):
            if other.field is not self.field and other.field != self.field:
                raise TypeError("operands belong to different number fields")
            return other
        if isinstance(other, (int, Fraction)):
            return NFElement(self.field, (other,))
        return NotImplemented

    def is_zero(self):
        return not any(self.coords)

    def is_rational(self):
        return not any(self.coords[1:])

    def to_rational(self):
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coords[0]

    def to_poly(self):
        return Poly(self.coords)

    def __eq__(self, other):
        if isinstance(other, NFElement):
            return self.field == other.field and self.coords == other.coords
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coords[0] == other
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self.coords[0])
        return hash(self.coords)

    def __neg__(self):
        return NFElement(self.field, [-c for c in self.coords])

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return NFElement(self.field, [a + b for a, b in zip(self.coords, other.coords)])

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return NFElement(self.field, [a - b for a, b in zip(self.coords, other.coords)])

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return NFElement(self.field, [c * other for c in self.coords])
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        d = self.field.degree
        prod = [0] * (2 * d - 1)
        for i, a in enumerate(self.coords):
            if a == 0:
                continue
            for j, b in enumerate(other.coords):
                if b != 0:
                    prod[i + j] += a * b
        out = prod[:d]
        for k, c in enumerate(prod[d:]):
            if c != 0:
                row = self.field._reduction[k]
                for i in range(d):
                    out[i] += c * row[i]
        return NFElement(self.field, out)

    __rmul__ = __mul__

    def inverse(self):
        """
        Multiplicative inverse by the extended gcd with the minimal polynomial.

        Raises:
            ZeroDivisionError: if the element is zero
        """
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a number field")
        if self.field.degree == 1 or self.is_rational():
            return NFElement(self.field, (1 / Fraction(self.coords[0]),))
        _, s, _ = poly_xgcd(self.to_poly(), self.field.min_poly)
        return NFElement(self.field, s.coeffs)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return NFElement(self.field, [Fraction(c) / other for c in self.coords])
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, exponent):
        if not isinstance(exponent, int):
            raise TypeError("exponent must be an int")
        base = self if exponent >= 0 else self.inverse()
        exponent = abs(exponent)
        result = self.field.one()
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def norm(self):
        if self.field.degree == 1:
            return self.coords[0]
        return resultant(self.field.min_poly, self.to_poly())

    def minimal_polynomial(self):
        """Monic minimal polynomial over Q, from the first linear dependency among powers."""
        d = self.field.degree
        powers = [self.field.one().coords]
        current = self.field.one()
        for k in range(1, d + 1):
            current = current * self
            matrix = [[powers[i][row] for i in range(k)] for row in range(d)]
            solution = _solve_linear(matrix, list(current.coords))
            if solution is not None:
                return Poly([-c for c in solution] + [1])
            powers.append(current.coords)
        raise ArithmeticError(f"no dependency among the powers of {self}")

    def sqrt(self):
        return sqrt_in_field(self, self.field)

    def __str__(self):
        return Poly(self.coords).to_string("a")

    def __repr__(self):
        return f"NFElement({self.field.min_poly}, {list(self.coords)})"


def _solve_linear(matrix, rhs):
    """Exact Gauss-Jordan solve; one solution (free variables zero) or None if inconsistent."""
    rows = [[Fraction(v) for v in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    ncols = len(matrix[0]) if matrix else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        lead = rows[r][c]
        rows[r] = [v / lead for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                factor = rows[i][c]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    for row in rows[r:]:
        if row[-1] != 0:
            return None
    solution = [Fraction(0)] * ncols
    for i, c in enumerate(pivots):
        solution[c] = rows[i][-1]
    return [normalize_rational(v) for v in solution]


def _permutation_sign(perm):
    inversions = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])
    return -1 if inversions % 2 else 1


def norm_polynomial(h, field):
    """
    Norm down to Q of a polynomial with coefficients in a field.

    Computed as the determinant of multiplication by h on the power basis,
    equal to the resultant in y of the minimal polynomial and h(x, y).

    Args:
        h (Poly): polynomial with NFElement or rational coefficients
        field (NumberField): the coefficient field

    Returns:
        Poly: polynomial over Q of degree deg(h) * [field:Q]
    """
    d = field.degree
    basis = [field.gen() ** j for j in range(d)]
    coefficients = [field(c) for c in as_poly(h).coeffs]
    matrix = [
        [Poly([(c * basis[j]).coords[i] for c in coefficients]) for j in range(d)]
        for i in range(d)
    ]
    total = Poly()
    for perm in permutations(range(d)):
        term = Poly((_permutation_sign(perm),))
        for i, j in enumerate(perm):
            term = term * matrix[i][j]
            if term.is_zero():
                break
        total = total + term
    return total


def _shift_sequence():
    yield 0
    for k in range(1, _MAX_SHIFT):
        yield k
        yield -k


def _roots_by_norm(g, field):
    alpha = field.gen()
    for k in _shift_sequence():
        shifted = g.compose(Poly((-k * alpha, 1)))
        norm = norm_polynomial(shifted, field)
        if norm.is_squarefree():
            break
    else:
        raise ArithmeticError(f"no squarefree norm found for {g} over {field!r}")
    logger.debug(f"Norm method for {g} over {field.min_poly}: shift {k}")
    roots = []
    for h in bounded_factors(norm, field.degree):
        if h.degree != field.degree:
            continue
        common = poly_gcd(shifted, h)
        if common.degree != 1:
            continue
        root = field(0) - common[0] - k * alpha
        if g.evaluate(root) == 0:
            roots.append(root)
    return roots


def _to_mpf(value):
    value = Fraction(value)
    return mp.mpf(value.numerator) / value.denominator


def _roots_by_embedding(g, field):
    d = field.degree
    m = field.min_poly
    scale = math.lcm(*(Fraction(c).denominator for c in m.coeffs))
    integral = Poly([c * scale ** (d - i) for i, c in enumerate(m.coeffs)])
    denominator = abs(g.lc * discriminant(integral))
    digits = max(len(str(abs(c))) for c in g.coeffs + integral.coeffs)
    dps = config.NUMERIC_ROOT_DPS + 2 * len(str(denominator)) + 2 * digits
    tolerance_exp = config.NUMERIC_ROOT_DPS // 3
    roots = []
    with mp.workdps(dps):
        tolerance = mp.mpf(10) ** (-tolerance_exp)
        alphas = mp.polyroots([_to_mpf(c) for c in reversed(m.coeffs)], maxsteps=500, extraprec=dps)
        betas = mp.polyroots([_to_mpf(c) for c in reversed(g.coeffs)], maxsteps=500, extraprec=dps)
        vandermonde = mp.matrix(d, d)
        for i in range(d):
            for j in range(d):
                vandermonde[i, j] = alphas[i] ** j
        for assignment in product(range(len(betas)), repeat=d):
            rhs = mp.matrix([betas[a] for a in assignment])
            solution = mp.lu_solve(vandermonde, rhs)
            coords = []
            for value in solution:
                if abs(mp.im(value)) > tolerance:
                    break
                scaled = mp.re(value) * denominator
                nearest = mp.nint(scaled)
                if abs(scaled - nearest) > tolerance:
                    break
                coords.append(Fraction(int(nearest), denominator))
            else:
                candidate = NFElement(field, coords)
                if candidate not in roots and g.evaluate(candidate) == 0:
                    roots.append(candidate)
    logger.debug(f"Embedding method for {g} over {field.min_poly}: {len(roots)} roots at {dps} digits")
    return roots


def roots_of_irreducible(g, field, method="norm"):
    """Roots in field of an irreducible polynomial over Q."""
    if method not in ROOT_METHODS:
        raise ValueError(f"Unknown root-finding method: {method}")
    g = as_poly(g).primitive()
    if g.degree == 1:
        return [field(Fraction(-g[0], g[1]))]
    if g.degree < 1 or field.degree % g.degree:
        return []
    if method == "norm":
        return _roots_by_norm(g, field)
    return _roots_by_embedding(g, field)


def roots_in_field(f, field, method="norm"):
    """
    All roots of f lying in field.

    Args:
        f (Poly): non-zero polynomial over Q
        field (NumberField): target field
        method (str): "norm" (factor a norm) or "linear" (numeric embeddings)

    Returns:
        list: distinct roots as NFElements, sorted by coordinates
    """
    f = as_poly(f)
    if f.is_zero():
        raise ValueError("roots of the zero polynomial are undefined")
    if method not in ROOT_METHODS:
        raise ValueError(f"Unknown root-finding method: {method}")
    roots = []
    for g in bounded_factors(f, field.degree):
        if field.degree % g.degree == 0:
            roots.extend(roots_of_irreducible(g, field, method))
    return sorted(roots, key=lambda r: r.coords)


def field_with_root(f):
    """Return (field, root of f in it) for an irreducible f."""
    prim = as_poly(f).primitive()
    field = NumberField.from_polynomial(prim, check=False)
    return field, field.gen() / prim.lc


def sqrt_in_field(delta, field):
    """Square roots of delta in field: an empty list, [0], or a pair of opposite roots."""
    delta = field(delta)
    if delta.is_zero():
        return [field.zero()]
    if delta.is_rational():
        root = rational_square_root(delta.coords[0])
        if root is not None:
            return sorted([field(root), field(-root)], key=lambda r: r.coords)
        square = Poly((-delta.coords[0], 0, 1))
    else:
        square = delta.minimal_polynomial().compose(Poly((0, 0, 1)))
    candidates = roots_in_field(square, field)
    return [r for r in candidates if r * r == delta]


def adjoin_sqrt(field, delta):
    """
    Absolute field K(sqrt(delta)) for delta not a square in K.

    Returns:
        NumberField: of degree 2 * [K:Q]
    """
    delta = field(delta)
    if field.degree == 1:
        return NumberField.from_polynomial(Poly((-delta.coords[0], 0, 1)))
    alpha = field.gen()
    for k in range(_MAX_SHIFT):
        shifted = Poly((k * k * alpha * alpha - delta, -2 * k * alpha, 1))
        norm = norm_polynomial(shifted, field)
        if norm.is_squarefree():
            return NumberField.from_polynomial(norm)
    raise ArithmeticError(f"no squarefree norm found adjoining sqrt({delta})")


def canonical_field(field):
    """Quadratic fields become x^2 - d with d squarefree; others are returned unchanged."""
    if field.degree != 2:
        return field
    return NumberField.quadratic(squarefree_kernel(discriminant(field.min_poly)))


def embedding(source, target):
    """
    Image of the generator of source inside target, or None.

    Args:
        source (NumberField): field to embed
        target (NumberField): field of the same degree

    Returns:
        NFElement or None: a root of source's minimal polynomial in target
    """
    if source.degree != target.degree:
        return None
    if source == target:
        return target.gen()
    if source.degree > 1:
        ratio = Fraction(discriminant(source.min_poly)) / Fraction(discriminant(target.min_poly))
        if ratio < 0 or rational_square_root(ratio) is None:
            return None
    roots = roots_of_irreducible(source.min_poly, target)
    return roots[0] if roots else None


def is_isomorphic(first, second):
    return embedding(first, second) is not None


def quadratic_subfields(field):
    """
    Quadratic subfields of a quartic field, as x^2 - d with d squarefree.

    Uses the resolvent cubic u^3 + 2p u^2 + (p^2 - 4r) u - q^2 of the
    depressed quartic z^4 + p z^2 + q z + r.
    """
    if field.degree != 4:
        raise ValueError("quadratic subfields are only computed for quartic fields")
    m = field.min_poly
    depressed = m.compose(Poly((Fraction(-m[3]) / 4, 1)))
    p, q, r = depressed[2], depressed[1], depressed[0]
    resolvent = Poly((-q * q, p * p - 4 * r, 2 * p, 1))
    kernels = set()
    for u in rational_roots(resolvent):
        if u != 0:
            kernels.add(squarefree_kernel(u))
    if q == 0 and p * p - 4 * r != 0:
        kernels.add(squarefree_kernel(p * p - 4 * r))
    kernels.discard(1)
    return [NumberField.quadratic(d) for d in sorted(kernels, key=lambda d: (abs(d), d))]


def compositum(first, second, max_degree=4):
    """
    Composita of two fields with degree at most max_degree, up to isomorphism.

    Returns:
        list: NumberFields, one per irreducible factor of a squarefree norm
    """
    if first.degree == 1:
        return [second] if second.degree <= max_degree else []
    if second.degree == 1:
        return [first] if first.degree <= max_degree else []
    alpha = first.gen()
    for k in count(1):
        shifted = second.min_poly.compose(Poly((-k * alpha, 1)))
        norm = norm_polynomial(shifted, first)
        if norm.is_squarefree():
            break
        if k >= _MAX_SHIFT:
            raise ArithmeticError("no squarefree norm found for the compositum")
    fields = []
    for h in bounded_factors(norm, max_degree):
        candidate = canonical_field(NumberField.from_polynomial(h, check=False))
        if not any(is_isomorphic(candidate, known) for known in fields):
            fields.append(candidate)
    return fields


def describe_field(field):
    """Short human label: Q, Q(sqrt(d)), Q(sqrt(a), sqrt(b)) or the quadratic subfield of a quartic."""
    if field.degree == 1:
        return "Q"
    if field.degree == 2:
        return f"Q(sqrt({squarefree_kernel(discriminant(field.min_poly))}))"
    kernels = [-F.min_poly[0] for F in quadratic_subfields(field)]
    if len(kernels) == 3:
        return f"Q(sqrt({kernels[0]}), sqrt({kernels[1]}))"
    if kernels:
        return f"quartic over Q(sqrt({kernels[0]}))"
    return "quartic without quadratic subfield"


def nf_arith(a, b, op):
    """Dispatch one field operation by name: add, sub, mul or inv (b ignored)."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "inv":
        return a.inverse()
    raise ValueError(f"Unknown field operation: {op}")
