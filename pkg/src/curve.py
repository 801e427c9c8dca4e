"""
Elliptic curves in long Weierstrass form, exact group law, division
polynomials and torsion over Q and over quadratic and quartic fields.
"""
import logging
import math
from fractions import Fraction

from classification import (
    PHI_1,
    PHI_STAR_4_G,
    SporadicTorsionError,
    TorsionComputationError,
    TorsionStructure,
    candidate_orders,
    element_orders,
    maximal_prime_powers,
    subgroup_of,
)
from exactmath import Poly, bounded_factors, exact_div, normalize_rational, parse_poly, rational_square_root
from numberfield import (
    NFElement,
    NumberField,
    adjoin_sqrt,
    canonical_field,
    compositum,
    describe_field,
    field_with_root,
    is_isomorphic,
    quadratic_subfields,
    roots_of_irreducible,
    sqrt_in_field,
)

logger = logging.getLogger(__name__)

MAX_DIVISION_INDEX = 24

# Maximal prime powers among element orders of the groups in PHI_1: 8, 9, 5, 7
RATIONAL_CANDIDATE_ORDERS = maximal_prime_powers(set().union(*(element_orders(G) for G in PHI_1)))


def _scalar(value):
    if isinstance(value, NFElement):
        return value
    return normalize_rational(Fraction(value))


def _value_key(value):
    if isinstance(value, NFElement):
        return tuple(value.coords)
    return (Fraction(value),)


def _is_zero(value):
    if isinstance(value, NFElement):
        return value.is_zero()
    return value == 0


class CurvePoint:
    """A point of an EllipticCurve; x and y are None for the point at infinity."""

    __slots__ = ("curve", "x", "y")

    def __init__(self, curve, x=None, y=None):
        self.curve = curve
        self.x = x
        self.y = y

    def is_infinity(self):
        return self.x is None

    def __eq__(self, other):
        if not isinstance(other, CurvePoint):
            return NotImplemented
        if self.is_infinity() or other.is_infinity():
            return self.is_infinity() and other.is_infinity()
        return self.x == other.x and self.y == other.y

    def __hash__(self):
        if self.is_infinity():
            return hash("infinity")
        return hash((self.x, self.y))

    def __add__(self, other):
        return self.curve.add(self, other)

    def __neg__(self):
        return self.curve.neg(self)

    def __sub__(self, other):
        return self.curve.add(self, self.curve.neg(other))

    def __rmul__(self, k):
        return self.curve.mul(k, self)

    def sort_key(self):
        if self.is_infinity():
            return (0,)
        return (1, _value_key(self.x), _value_key(self.y))

    def __str__(self):
        if self.is_infinity():
            return "(0 : 1 : 0)"
        return f"({self.x} : {self.y} : 1)"

    def __repr__(self):
        return f"CurvePoint{self}"


class EllipticCurve:
    """
    y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over Q or over one NumberField.

    Args:
        ainvs (list): the five a-invariants [a1, a2, a3, a4, a6]
        field (NumberField, optional): base field; None means Q

    Raises:
        ValueError: wrong number of invariants or a singular model
    """

    def __init__(self, ainvs, field=None):
        ainvs = list(ainvs)
        if len(ainvs) != 5:
            raise ValueError(f"expected five a-invariants, got {len(ainvs)}")
        if field is not None and field.degree == 1:
            field = None
        if field is None:
            for value in ainvs:
                if isinstance(value, NFElement) and not value.is_rational():
                    raise ValueError("irrational a-invariant on a curve over Q")
            ainvs = [value.to_rational() if isinstance(value, NFElement) else value for value in ainvs]
            ainvs = [normalize_rational(Fraction(value)) for value in ainvs]
        else:
            ainvs = [field(value) for value in ainvs]
        self.field = field
        self.ainvs = tuple(ainvs)
        a1, a2, a3, a4, a6 = self.ainvs
        self.a1, self.a2, self.a3, self.a4, self.a6 = self.ainvs
        self.b2 = _scalar(a1 * a1 + 4 * a2)
        self.b4 = _scalar(2 * a4 + a1 * a3)
        self.b6 = _scalar(a3 * a3 + 4 * a6)
        self.b8 = _scalar(a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4)
        b2, b4, b6, b8 = self.b2, self.b4, self.b6, self.b8
        self.c4 = _scalar(b2 * b2 - 24 * b4)
        self.discriminant = _scalar(-b2 * b2 * b8 - 8 * b4 ** 3 - 27 * b6 * b6 + 9 * b2 * b4 * b6)
        if _is_zero(self.discriminant):
            raise ValueError(f"singular curve {self.ainvs_string()}: discriminant is zero")
        self.j_invariant = exact_div(self.c4 ** 3, self.discriminant)
        self._division = None

    @classmethod
    def from_string(cls, text):
        """Curve from a literal "[a1,a2,a3,a4,a6]" with integer or rational entries."""
        body = text.strip()
        if not (body.startswith("[") and body.endswith("]")):
            raise ValueError(f"not an a-invariant list: {text!r}")
        try:
            ainvs = [Fraction(item.strip()) for item in body[1:-1].split(",")]
        except ValueError as e:
            raise ValueError(f"not an a-invariant list: {text!r}") from e
        return cls(ainvs)

    def ainvs_string(self):
        return "[" + ",".join(str(a) for a in self.ainvs) + "]"

    def is_rational(self):
        return self.field is None

    def __eq__(self, other):
        if not isinstance(other, EllipticCurve):
            return NotImplemented
        return self.field == other.field and self.ainvs == other.ainvs

    def __hash__(self):
        return hash(self.ainvs)

    def __repr__(self):
        return f"EllipticCurve({self.ainvs_string()})"

    def base_change(self, field):
        """The same equation over a larger field."""
        if self.field is not None:
            raise ValueError("base change is only supported from Q")
        return EllipticCurve([field(a) for a in self.ainvs], field)

    def two_torsion_polynomial(self):
        """4x^3 + b2 x^2 + 2 b4 x + b6, the square of psi_2."""
        return Poly((self.b6, 2 * self.b4, self.b2, 4))

    # -----------------------------------------------------------------------
    # Points and the group law
    # -----------------------------------------------------------------------

    def infinity(self):
        return CurvePoint(self)

    def contains(self, x, y):
        a1, a2, a3, a4, a6 = self.ainvs
        lhs = y * y + a1 * x * y + a3 * y
        rhs = x * x * x + a2 * x * x + a4 * x + a6
        return _is_zero(lhs - rhs)

    def point(self, x, y):
        """
        Affine point (x, y), checked to lie on the curve.

        Raises:
            ValueError: if the point is not on the curve
        """
        x, y = _scalar(x), _scalar(y)
        if not self.contains(x, y):
            raise ValueError(f"({x}, {y}) is not on {self.ainvs_string()}")
        return CurvePoint(self, x, y)

    def lift_x(self, x, field=None):
        """
        Points with the given x-coordinate over field (Q when None).

        Returns:
            list: zero, one or two CurvePoints, sorted
        """
        h = self.a1 * x + self.a3
        delta = self.two_torsion_polynomial().evaluate(x)
        if field is None:
            root = rational_square_root(Fraction(delta))
            roots = [] if root is None else sorted({root, -root})
        else:
            roots = sqrt_in_field(delta, field)
        points = [self.point(x, exact_div(s - h, 2)) for s in roots]
        return sorted(points, key=CurvePoint.sort_key)

    def neg(self, P):
        if P.is_infinity():
            return P
        return CurvePoint(self, P.x, _scalar(-P.y - self.a1 * P.x - self.a3))

    def add(self, P, Q):
        """Chord and tangent addition."""
        if P.is_infinity():
            return Q
        if Q.is_infinity():
            return P
        a1, a2, a3, a4, a6 = self.ainvs
        x1, y1, x2, y2 = P.x, P.y, Q.x, Q.y
        if x1 == x2:
            if _is_zero(y1 + y2 + a1 * x2 + a3):
                return self.infinity()
            denominator = 2 * y1 + a1 * x1 + a3
            slope = exact_div(3 * x1 * x1 + 2 * a2 * x1 + a4 - a1 * y1, denominator)
            intercept = exact_div(-x1 * x1 * x1 + a4 * x1 + 2 * a6 - a3 * y1, denominator)
        else:
            denominator = x2 - x1
            slope = exact_div(y2 - y1, denominator)
            intercept = exact_div(y1 * x2 - y2 * x1, denominator)
        x3 = slope * slope + a1 * slope - a2 - x1 - x2
        y3 = -(slope + a1) * x3 - intercept - a3
        return CurvePoint(self, _scalar(x3), _scalar(y3))

    def mul(self, k, P):
        """k * P by double-and-add; negative k multiplies -P."""
        if k < 0:
            return self.mul(-k, self.neg(P))
        result = self.infinity()
        addend = P
        while k:
            if k & 1:
                result = self.add(result, addend)
            k >>= 1
            if k:
                addend = self.add(addend, addend)
        return result

    # -----------------------------------------------------------------------
    # Division polynomials
    # -----------------------------------------------------------------------

    def integral_model(self):
        """
        Return (curve with integral a-invariants, u) where a_i' = u^i a_i.

        Over a number field the curve itself is returned with u = 1.
        """
        if self.field is not None:
            return self, 1
        u = math.lcm(*(Fraction(a).denominator for a in self.ainvs))
        if u == 1:
            return self, 1
        scaled = [a * u ** i for a, i in zip(self.ainvs, (1, 2, 3, 4, 6))]
        return EllipticCurve(scaled), u

    def division_polynomial(self, n):
        return division_polynomial(self, n)


class DivisionPolynomials:
    """
    Memoized reduced division polynomials f_n of one curve.

    f_n is psi_n for odd n and psi_n / psi_2 for even n, so every f_n is a
    polynomial in x alone. The recurrence uses F = psi_2^2 where the odd
    formula needs psi_2^4.
    """

    def __init__(self, curve):
        self.curve = curve
        b2, b4, b6, b8 = curve.b2, curve.b4, curve.b6, curve.b8
        self.curvepoly = curve.two_torsion_polynomial()
        self.curvepoly_squared = self.curvepoly * self.curvepoly
        self.cache = {
            0: Poly(),
            1: Poly.constant(1),
            2: Poly.constant(1),
            3: Poly((b8, 3 * b6, 3 * b4, b2, 3)),
            4: Poly((
                b4 * b8 - b6 * b6,
                b2 * b8 - b4 * b6,
                10 * b8,
                10 * b6,
                5 * b4,
                b2,
                2,
            )),
        }

    def __getitem__(self, n):
        if n in self.cache:
            return self.cache[n]
        m = n // 2
        if n % 2 == 1:
            if m % 2 == 0:
                value = self.curvepoly_squared * self[m + 2] * self[m] ** 3 - self[m - 1] * self[m + 1] ** 3
            else:
                value = self[m + 2] * self[m] ** 3 - self.curvepoly_squared * self[m - 1] * self[m + 1] ** 3
        else:
            value = self[m] * (self[m + 2] * self[m - 1] ** 2 - self[m - 2] * self[m + 1] ** 2)
        self.cache[n] = value
        return value

    def full(self, n):
        """psi_n for odd n, psi_2^2 * f_n for even n."""
        if n % 2:
            return self[n]
        return self.curvepoly * self[n]


def division_polynomial(E, n):
    """
    Polynomial in x whose roots are the x-coordinates of the nonzero points of order dividing n.

    Args:
        E (EllipticCurve): the curve
        n (int): 2 <= n <= 24

    Returns:
        Poly: psi_n for odd n, (4x^3 + b2 x^2 + 2 b4 x + b6) * psi_n / psi_2 for even n

    Raises:
        ValueError: if n is out of range
    """
    if not isinstance(n, int) or n < 2 or n > MAX_DIVISION_INDEX:
        raise ValueError(f"division polynomial index must be in 2..{MAX_DIVISION_INDEX}, got {n}")
    model, u = E.integral_model()
    if model._division is None:
        model._division = DivisionPolynomials(model)
    poly = model._division.full(n)
    if u != 1:
        # psi'(u^2 x) is a constant multiple of psi(x)
        poly = poly.compose(Poly((0, u * u)))
    return poly


# ---------------------------------------------------------------------------
# Orders and torsion
# ---------------------------------------------------------------------------

def exact_order(E, P, bound):
    """Smallest k <= bound with k * P = infinity, or None when the order exceeds bound."""
    current = P
    for k in range(1, bound + 1):
        if current.is_infinity():
            return k
        current = E.add(current, P)
    return None


def _p_exponent(n, p):
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e if n == 1 else None


def _primary_part(E, p, k, points):
    """
    Structure (p^alpha, p^beta) of the p-primary subgroup spanned by points.

    Args:
        points (list): all nonzero points killed by p^k over the field

    Returns:
        tuple: (alpha, beta, group) with group the list of all points including infinity

    Raises:
        TorsionComputationError: if the counts do not fit C_p^alpha x C_p^beta
    """
    group = [E.infinity()] + points
    exponents = []
    for P in group:
        j, current = 0, P
        while not current.is_infinity():
            if j == k:
                raise TorsionComputationError(f"point {P} is not killed by {p}^{k}")
            current = E.mul(p, current)
            j += 1
        exponents.append(j)
    total = _p_exponent(len(group), p)
    if total is None:
        raise TorsionComputationError(f"{len(group)} points of {p}-power order is not a power of {p}")
    counts = [sum(1 for e in exponents if e <= j) for j in range(k + 1)]
    alpha = sum(1 for j in range(1, k + 1) if counts[j] == p * p * counts[j - 1])
    beta = total - alpha
    for j in range(k + 1):
        if counts[j] != p ** (min(j, alpha) + min(j, beta)):
            raise TorsionComputationError(
                f"{p}-primary counting test failed: {counts[j]} points killed by {p}^{j}, "
                f"expected C{p ** alpha} x C{p ** beta}"
            )
    return alpha, beta, group


def _generators(E, p, alpha, beta, group):
    """A point of order p^beta and, when alpha > 0, a complement of order p^alpha."""
    if beta == 0:
        return []
    orders = {P: exact_order(E, P, p ** beta) for P in group}
    ordered = sorted(group, key=CurvePoint.sort_key)
    first = next(P for P in ordered if orders[P] == p ** beta)
    if alpha == 0:
        return [first]
    span = set()
    current = E.infinity()
    for _ in range(p ** beta):
        span.add(current)
        current = E.add(current, first)
    for Q in ordered:
        if orders[Q] == p ** alpha and E.mul(p ** (alpha - 1), Q) not in span:
            return [first, Q]
    raise TorsionComputationError(f"no complement of order {p ** alpha} found")


def _combine(E, parts):
    """All sums of one point from each p-primary group."""
    points = [E.infinity()]
    for group in parts:
        points = [E.add(P, Q) for P in points for Q in group]
    return sorted(points, key=CurvePoint.sort_key)


def _field_key(field):
    return None if field is None else field.min_poly.coeffs


class TorsionSearch:
    """
    Torsion of one rational curve over Q and over fields of degree 2 and 4.

    Factorizations of division polynomials and torsion results are cached
    per field so growth enumeration can query many fields cheaply.

    Args:
        curve (EllipticCurve): curve over Q
        exhaustive (bool): use every prime power up to 24 and skip the
            sporadic check
    """

    def __init__(self, curve, exhaustive=False):
        if not curve.is_rational():
            raise ValueError("torsion search needs a curve over Q")
        self.curve = curve
        self.exhaustive = exhaustive
        self._factors = {}
        self._results = {}
        self._rational = None

    def factors(self, n, max_degree=4):
        """Irreducible factors of degree <= max_degree of the n-th division polynomial."""
        if (n, 4) in self._factors:
            return [g for g in self._factors[n, 4] if g.degree <= max_degree]
        if (n, max_degree) not in self._factors:
            found = bounded_factors(division_polynomial(self.curve, n), max_degree)
            self._factors[n, max_degree] = found
            logger.debug(f"psi_{n} of {self.curve.ainvs_string()}: factor degrees {[g.degree for g in found]}")
        return self._factors[n, max_degree]

    def _points(self, n, field):
        degree = 1 if field is None else field.degree
        points = []
        for g in self.factors(n, degree):
            if degree % g.degree:
                continue
            if field is None:
                xs = [normalize_rational(Fraction(-g[0], g[1]))]
            else:
                xs = roots_of_irreducible(g, field)
            for x in xs:
                points.extend(self.curve.lift_x(x, field))
        return points

    def _compute(self, field, orders):
        parts = []
        generators = []
        a = b = 1
        for n in orders:
            p = next(q for q in range(2, n + 1) if n % q == 0)
            k = _p_exponent(n, p)
            alpha, beta, group = _primary_part(self.curve, p, k, self._points(n, field))
            a *= p ** alpha
            b *= p ** beta
            parts.append(group)
            generators.append(_generators(self.curve, p, alpha, beta, group))
        structure = TorsionStructure(a, b)
        points = _combine(self.curve, parts)
        return structure, generators, points

    def rational(self):
        """
        Torsion over Q.

        Returns:
            tuple: (TorsionStructure, generators, all points)

        Raises:
            TorsionComputationError: if the group is not in PHI_1
        """
        if self._rational is None:
            structure, per_prime, points = self._compute(None, RATIONAL_CANDIDATE_ORDERS)
            if structure not in PHI_1:
                raise TorsionComputationError(f"torsion over Q computed as {structure}, which is not in PHI(1)")
            first = [gens[0] for gens in per_prime if gens]
            second = [gens[1] for gens in per_prime if len(gens) > 1]
            generators = []
            for chosen in (first, second):
                if chosen:
                    total = self.curve.infinity()
                    for P in chosen:
                        total = self.curve.add(total, P)
                    generators.append(total)
            self._rational = (structure, generators, points)
            self._results[None] = (structure, points)
        return self._rational

    def over(self, field):
        """
        Torsion over a number field of degree 1, 2 or 4.

        Returns:
            tuple: (TorsionStructure, all points over the field)

        Raises:
            SporadicTorsionError: if the group is outside PHI*_Q(4, G)
        """
        if field is None or field.degree == 1:
            structure, _, points = self.rational()
            return structure, points
        key = _field_key(field)
        if key in self._results:
            return self._results[key]
        G = self.rational()[0]
        structure, _, points = self._compute(field, candidate_orders(G, self.exhaustive))
        if not subgroup_of(G, structure):
            raise TorsionComputationError(f"torsion over {field} is {structure}, smaller than {G}")
        if not self.exhaustive and structure not in PHI_STAR_4_G[G]:
            raise SporadicTorsionError(
                f"torsion {structure} over {field.min_poly} is not in PHI*_Q(4, {G})",
                structure=structure,
                field=field,
            )
        logger.debug(f"Torsion over {field.min_poly}: {structure}")
        self._results[key] = (structure, points)
        return structure, points

    def growth(self, label=None, keep_factors=False):
        return growth_fields(self.curve, self.exhaustive, label=label, keep_factors=keep_factors, search=self)


def torsion_over_Q(E):
    """
    Torsion subgroup of E over Q.

    Returns:
        tuple: (TorsionStructure, list of generators)
    """
    structure, generators, _ = TorsionSearch(E).rational()
    return structure, generators


def torsion_over_K(E, K, exhaustive=False, search=None):
    """
    Torsion subgroup of a rational curve over a number field of degree 1, 2 or 4.

    Args:
        E (EllipticCurve): curve over Q
        K (NumberField): the field
        exhaustive (bool): try every prime power up to 24, no sporadic check
        search (TorsionSearch, optional): cache to reuse

    Returns:
        tuple: (TorsionStructure, sorted list of all torsion points over K)
    """
    if search is None:
        search = TorsionSearch(E, exhaustive)
    return search.over(K)


# ---------------------------------------------------------------------------
# Growth over quartic fields
# ---------------------------------------------------------------------------

class GrowthResult:
    """One field where the torsion grows."""

    def __init__(self, field, structure, minimal):
        self.field = field
        self.structure = structure
        self.minimal = minimal

    @property
    def degree(self):
        return self.field.degree

    def describe(self):
        return describe_field(self.field)

    def to_dict(self):
        return {
            "field": self.field.min_poly.to_string(),
            "degree": self.field.degree,
            "subfields": self.describe(),
            "torsion": str(self.structure),
            "minimal": self.minimal,
        }

    def __repr__(self):
        return f"GrowthResult({self.field.min_poly}, {self.structure}, minimal={self.minimal})"


class GrowthReport:
    """
    Torsion growth of one curve over quadratic and quartic fields.

    Attributes:
        curve (EllipticCurve): the curve
        label (str): its label, or the a-invariant string
        G (TorsionStructure): torsion over Q
        results (list): GrowthResult per field with growth
        factors (dict): n -> factors of psi_n of degree 1, 2, 4 (verbose mode only)
    """

    def __init__(self, curve, label, G, results, factors=None):
        self.curve = curve
        self.label = label
        self.G = G
        self.results = results
        self.factors = factors or {}

    def minimal_results(self):
        return [r for r in self.results if r.minimal]

    def configuration(self):
        """Sorted torsion structures over the minimal growth fields."""
        return tuple(sorted(r.structure for r in self.minimal_results()))

    def has_growth(self):
        return bool(self.results)

    def to_dict(self):
        data = {
            "label": self.label,
            "ainvs": [str(a) for a in self.curve.ainvs],
            "G": str(self.G),
            "fields": [r.to_dict() for r in self.results],
            "configuration": [H.short() for H in self.configuration()],
        }
        if self.factors:
            data["factors"] = {str(n): [g.to_string() for g in gs] for n, gs in self.factors.items()}
        return data


def _point_fields(search, n):
    """Fields of degree 2 or 4 generated by one point whose x-coordinate is a root of psi_n."""
    curve = search.curve
    F = curve.two_torsion_polynomial()
    fields = []
    for g in search.factors(n):
        if g.degree not in (1, 2, 4):
            continue
        if g.degree == 1:
            x = Fraction(-g[0], g[1])
            delta = F.evaluate(x)
            if delta == 0 or rational_square_root(delta) is not None:
                continue
            fields.append(canonical_field(NumberField.from_polynomial(Poly((-delta, 0, 1)))))
            continue
        x_field, x = field_with_root(g)
        delta = F.evaluate(x)
        if sqrt_in_field(delta, x_field):
            fields.append(canonical_field(x_field))
        elif x_field.degree == 2:
            fields.append(adjoin_sqrt(x_field, delta))
    return fields


def _dedupe(fields):
    unique = []
    for field in fields:
        if not any(field.degree == known.degree and is_isomorphic(field, known) for known in unique):
            unique.append(field)
    return unique


def candidate_fields(search):
    """
    Point fields of degree 2 and 4 for the candidate orders, closed under composita of degree <= 4.

    Returns:
        list: pairwise non-isomorphic NumberFields
    """
    G = search.rational()[0]
    fields = []
    for n in candidate_orders(G, search.exhaustive):
        fields.extend(_point_fields(search, n))
    fields = _dedupe(fields)
    quadratics = [K for K in fields if K.degree == 2]
    for i, first in enumerate(quadratics):
        for second in quadratics[i + 1:]:
            fields.extend(compositum(first, second, 4))
    fields = _dedupe(fields)
    logger.debug(f"{len(fields)} candidate fields: {[str(K.min_poly) for K in fields]}")
    return fields


def growth_fields(E, exhaustive=False, label=None, keep_factors=False, search=None):
    """
    Quadratic and quartic fields where the torsion of E grows.

    Args:
        E (EllipticCurve): curve over Q
        exhaustive (bool): exhaustive order mode
        label (str, optional): label stored in the report
        keep_factors (bool): keep the degree 1, 2, 4 factor lists per n
        search (TorsionSearch, optional): cache to reuse

    Returns:
        GrowthReport: results sorted by degree, structure and minimal polynomial
    """
    if search is None:
        search = TorsionSearch(E, exhaustive)
    G = search.rational()[0]
    results = []
    for field in candidate_fields(search):
        H = search.over(field)[0]
        if H == G:
            continue
        if field.degree == 2:
            minimal = True
        else:
            minimal = all(search.over(sub)[0] != H for sub in quadratic_subfields(field))
        results.append(GrowthResult(field, H, minimal))
    results.sort(key=lambda r: (r.degree, r.structure, r.field.min_poly.coeffs))
    factors = None
    if keep_factors:
        factors = {
            n: [g for g in search.factors(n) if g.degree in (1, 2, 4)]
            for n in candidate_orders(G, search.exhaustive)
        }
    logger.info(
        f"Growth of {label or E.ainvs_string()}: G = {G}, {len(results)} fields, "
        f"configuration {[H.short() for H in sorted(r.structure for r in results if r.minimal)]}"
    )
    return GrowthReport(E, label or E.ainvs_string(), G, results, factors)


def field_from_text(text):
    """Number field generated by a root of the irreducible polynomial given as text."""
    return NumberField.from_polynomial(parse_poly(text))


def point_arithmetic(E, P, Q, op):
    """Dispatch one group operation by name: add, neg (Q ignored) or mul (Q an int)."""
    if op == "add":
        return E.add(P, Q)
    if op == "neg":
        return E.neg(P)
    if op == "mul":
        return E.mul(Q, P)
    raise ValueError(f"Unknown point operation: {op}")
