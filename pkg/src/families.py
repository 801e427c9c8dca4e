"""
Parametrized families and checks of explicit algebraic data.

Kubert-Tate normal forms for C10 and C12, halving a rational torsion point
over a quartic field, the j-invariant parametrizations used to rule out
C21, C24 and C2xC12, and the rational points of the auxiliary plane curves.
"""
import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction

import config
from classification import C15_J, TorsionComputationError, TorsionStructure, subgroup_of
from curve import EllipticCurve, TorsionSearch, exact_order, torsion_over_Q
from exactmath import Poly, bounded_factors, exact_div, normalize_rational, parse_poly
from numberfield import NumberField, adjoin_sqrt, field_with_root, roots_of_irreducible, sqrt_in_field

logger = logging.getLogger(__name__)

KUBERT_TARGETS = {"C10": 10, "C12": 12}

C15_FIELD = "x^4 - 2*x^3 + 5*x^2 - 4*x + 19"
C15_LABELS = ("50a1", "450b2", "50a3", "50a4")


class HalvingError(Exception):
    """Raised when no point Q with 2Q = P is found over a field of degree at most 4."""


@dataclass
class CheckResult:
    """
    Outcome of one verification step.

    Attributes:
        name (str): what was checked
        status (str): "pass", "fail" or "skip"
        detail (str): values or reason
    """

    name: str
    status: str
    detail: str = ""

    @property
    def passed(self):
        return self.status == "pass"


@dataclass
class WitnessReport:
    checks: list = field(default_factory=list)

    def add(self, name, ok, detail=""):
        self.checks.append(CheckResult(name, "pass" if ok else "fail", detail))

    def skip(self, name, detail):
        self.checks.append(CheckResult(name, "skip", detail))

    @property
    def passed(self):
        return all(c.status != "fail" for c in self.checks)

    def failures(self):
        return [c for c in self.checks if c.status == "fail"]


# ---------------------------------------------------------------------------
# Kubert-Tate normal form
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class KubertParams:
    target: str
    t: Fraction
    b: Fraction
    c: Fraction


def kubert_params(target, t):
    """
    Parameters b, c of the Kubert-Tate family with a point of order 10 or 12.

    Raises:
        ValueError: unknown target or a pole of the parametrization
    """
    if target not in KUBERT_TARGETS:
        raise ValueError(f"Unknown Kubert family {target}; expected one of {sorted(KUBERT_TARGETS)}")
    t = Fraction(t)
    if target == "C10":
        d = t - (t - 1) ** 2
        if d == 0:
            raise ValueError(f"t = {t} is a pole of the C10 family")
        c = (2 * t ** 3 - 3 * t ** 2 + t) / d
        b = c * t ** 2 / d
    else:
        if t == 1:
            raise ValueError("t = 1 is a pole of the C12 family")
        c = (3 * t ** 2 - 3 * t + 1) * (t - 2 * t ** 2) / (t - 1) ** 3
        b = c * (2 * t - 2 * t ** 2 - 1) / (t - 1)
    return KubertParams(target, normalize_rational(t), normalize_rational(b), normalize_rational(c))


def kubert_curve(target, t):
    """
    Curve y^2 + (1 - c)xy - by = x^3 - bx^2 of the family and its marked point (0, 0).

    Returns:
        tuple: (EllipticCurve, CurvePoint) with the point of exact order 10 or 12

    Raises:
        ValueError: pole of the parametrization, singular curve, or wrong order
    """
    params = kubert_params(target, t)
    curve = EllipticCurve([1 - params.c, -params.b, -params.b, 0, 0])
    P = curve.point(0, 0)
    order = exact_order(curve, P, KUBERT_TARGETS[target])
    if order != KUBERT_TARGETS[target]:
        raise ValueError(f"(0,0) has order {order} instead of {KUBERT_TARGETS[target]} at t = {params.t}")
    return curve, P


# ---------------------------------------------------------------------------
# Halving
# ---------------------------------------------------------------------------

def halving_polynomial(E, P):
    """x^4 - b4 x^2 - 2 b6 x - b8 - x(P)(4x^3 + b2 x^2 + 2 b4 x + b6): its roots are x(Q) for 2Q = P."""
    numerator = Poly((-E.b8, -2 * E.b6, -E.b4, 0, 1))
    return numerator - E.two_torsion_polynomial().scale(P.x)


def _halving_fields(E, g):
    """Fields of degree <= 4 containing the points with x-coordinate a root of g."""
    F = E.two_torsion_polynomial()
    if g.degree == 1:
        x = Fraction(-g[0], g[1])
        delta = F.evaluate(x)
        if delta == 0 or sqrt_in_field(delta, NumberField.rationals()):
            return [NumberField.rationals()]
        return [NumberField.from_polynomial(Poly((-delta, 0, 1)))]
    x_field, x = field_with_root(g)
    delta = F.evaluate(x)
    if sqrt_in_field(delta, x_field):
        return [x_field]
    if x_field.degree * 2 <= config.HALVING_MAX_DEGREE:
        return [adjoin_sqrt(x_field, delta)]
    return []


def halve_point(E, P):
    """
    A point Q over a field L of degree at most 4 with 2Q = P.

    Factors of the halving polynomial are tried in ascending (degree,
    coefficients) order. A quartic L is preferred; a smaller verified field
    is returned only when no quartic candidate verifies.

    Args:
        E (EllipticCurve): curve over Q
        P (CurvePoint): rational point of finite order N

    Returns:
        tuple: (NumberField L, CurvePoint Q) with Q of exact order 2N

    Raises:
        HalvingError: if no candidate verifies
    """
    N = exact_order(E, P, 24)
    if N is None:
        raise HalvingError(f"{P} has no finite order up to 24")
    fallback = None
    for g in bounded_factors(halving_polynomial(E, P), config.HALVING_MAX_DEGREE):
        for L in _halving_fields(E, g):
            target = None if L.degree == 1 else L
            if target is None:
                xs = [Fraction(-g[0], g[1])] if g.degree == 1 else []
            else:
                xs = roots_of_irreducible(g, L)
            for x in xs:
                for Q in E.lift_x(x, target):
                    if E.add(Q, Q) != P or exact_order(E, Q, 2 * N) != 2 * N:
                        continue
                    if L.degree == config.HALVING_MAX_DEGREE:
                        logger.debug(f"Halved {P} over {L.min_poly}")
                        return L, Q
                    if fallback is None:
                        fallback = (L, Q)
    if fallback is not None:
        logger.info(f"No quartic halving of {P}; using a field of degree {fallback[0].degree}")
        return fallback
    raise HalvingError(f"no point Q with 2Q = {P} over a field of degree <= {config.HALVING_MAX_DEGREE}")


# ---------------------------------------------------------------------------
# j-invariant parametrizations
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class JParametrization:
    name: str
    numerator: Poly
    denominator: Poly

    def __call__(self, arg):
        arg = Fraction(arg)
        den = self.denominator.evaluate(arg)
        if den == 0:
            raise ZeroDivisionError(f"{self.name} has a pole at {arg}")
        return exact_div(self.numerator.evaluate(arg), den)


def _p(text):
    return parse_poly(text, var="t")


J_MAPS = {
    "J1": JParametrization(
        "J1",
        _p("27*(t+1)^3*(t+3)^3*(t^2+3)^3"),
        _p("t^3*(t^2+3*t+3)^3"),
    ),
    "J2": JParametrization("J2", _p("27*(t+1)^3*(t-3)^3"), _p("t^3")),
    "j5": JParametrization("j5", _p("(t^2+10*t+5)^3"), _p("t")),
    "j7": JParametrization("j7", _p("(t^2+13*t+49)*(t^2+5*t+1)^3"), _p("t")),
    "j8": JParametrization("j8", _p("(t^4-16*t^2+16)^3"), _p("(t^2-16)*t^2")),
}


def j_eval(name, arg):
    """
    Evaluate one of the j-maps J1, J2, j5, j7, j8 at a rational argument.

    Raises:
        ValueError: unknown name
        ZeroDivisionError: arg is a pole
    """
    if name not in J_MAPS:
        raise ValueError(f"Unknown j-map {name}; expected one of {sorted(J_MAPS)}")
    return J_MAPS[name](arg)


# ---------------------------------------------------------------------------
# Plane curve witnesses
# ---------------------------------------------------------------------------

@dataclass
class PlaneCurveWitness:
    """
    Rational points that must lie on a plane curve F(u, v) = 0.

    Attributes:
        name (str): the equation as text
        residual (callable): (u, v) -> F(u, v)
        points (list): affine rational points
        j_map (callable, optional): point -> j-invariant, raising ZeroDivisionError at cusps
        expected_j (set): j-invariants of the non-cuspidal points
    """

    name: str
    residual: object
    points: list
    j_map: object = None
    expected_j: set = field(default_factory=set)


def _c15_j(point):
    s, t = point
    j = j_eval("j5", s ** 3)
    if j != j_eval("J2", t):
        raise ArithmeticError(f"j5(s^3) != J2(t) at {point}")
    return j


WITNESSES = (
    PlaneCurveWitness(
        "h*s^3 = h^2 + 13*h + 49",
        lambda h, s: h * s ** 3 - (h * h + 13 * h + 49),
        [(7, 3), (-7, -1)],
        j_map=lambda point: j_eval("j7", point[0]),
        expected_j={3 ** 3 * 5 ** 3 * 17 ** 3, -(3 ** 3) * 5 ** 3},
    ),
    PlaneCurveWitness(
        "y^2 = x^6 - 26*x^3 - 27",
        lambda x, y: y * y - (x ** 6 - 26 * x ** 3 - 27),
        [(-1, 0), (3, 0)],
    ),
    PlaneCurveWitness(
        "y^2 = x^6 + 1",
        lambda x, y: y * y - (x ** 6 + 1),
        [(0, 1), (0, -1)],
    ),
    PlaneCurveWitness(
        "s^3 = (h^2 - 16)*h^2",
        lambda h, s: s ** 3 - (h * h - 16) * h * h,
        [(4, 0), (-4, 0), (0, 0)],
        j_map=lambda point: j_eval("j8", point[0]),
    ),
    PlaneCurveWitness(
        "3*t*(t^2 - 6*t - 3) = r^2",
        lambda t, r: 3 * t * (t * t - 6 * t - 3) - r * r,
        [(0, 0)],
    ),
    PlaneCurveWitness(
        "3*t*(t^2 + 3*t + 3) = r^2",
        lambda t, r: 3 * t * (t * t + 3 * t + 3) - r * r,
        [(0, 0)],
    ),
    PlaneCurveWitness(
        "(s^6 + 10*s^3 + 5)*t = 3*(t + 1)*(t - 3)*s",
        lambda s, t: (s ** 6 + 10 * s ** 3 + 5) * t - 3 * (t + 1) * (t - 3) * s,
        [
            (Fraction(-5, 2), Fraction(9, 32)),
            (Fraction(-5, 2), Fraction(-32, 3)),
            (-2, Fraction(-2, 3)),
            (0, 0),
            (-2, Fraction(9, 2)),
        ],
        j_map=_c15_j,
        expected_j={Fraction(11 ** 3, 2 ** 3), Fraction(-(29 ** 3) * 41 ** 3, 2 ** 15)},
    ),
)


def verify_witnesses(witnesses=WITNESSES):
    """
    Check every listed point against its equation and the j-invariants it induces.

    Returns:
        WitnessReport: one check per point, plus one per curve with a j-map
    """
    report = WitnessReport()
    for witness in witnesses:
        for point in witness.points:
            u, v = (Fraction(c) for c in point)
            value = witness.residual(u, v)
            report.add(f"{witness.name} at {point}", value == 0, f"residual {value}")
        if witness.j_map is None:
            continue
        values = set()
        cusps = []
        try:
            for point in witness.points:
                try:
                    values.add(witness.j_map(tuple(Fraction(c) for c in point)))
                except ZeroDivisionError:
                    cusps.append(point)
        except ArithmeticError as e:
            report.add(f"j-invariants on {witness.name}", False, str(e))
            continue
        ok = values == witness.expected_j
        report.add(
            f"j-invariants on {witness.name}",
            ok,
            f"values {sorted(values)}, cusps {cusps}",
        )
    logger.info(f"Witness checks: {sum(c.passed for c in report.checks)}/{len(report.checks)} passed")
    return report


# ---------------------------------------------------------------------------
# C15 curves and the Kubert suite
# ---------------------------------------------------------------------------

def _missing(report, name, required):
    if required:
        report.add(name, False, "missing data")
    else:
        report.skip(name, "missing data")


def c15_check(records, with_torsion=True, required=False):
    """
    j-invariants of the curves reaching C15 over a quartic field, and the torsion of 50a4 there.

    Args:
        records (dict): label -> record with an ``ainvs`` attribute
        with_torsion (bool): also compute the torsion over the quartic field
        required (bool): report missing labels as failures instead of skips

    Returns:
        WitnessReport
    """
    report = WitnessReport()
    for label in C15_LABELS:
        record = records.get(label)
        if record is None:
            _missing(report, f"j({label})", required)
            continue
        j = EllipticCurve(record.ainvs).j_invariant
        report.add(f"j({label})", j == C15_J[label], f"computed {j}, expected {C15_J[label]}")
    if not with_torsion:
        return report
    record = records.get("50a4")
    if record is None:
        _missing(report, f"torsion of 50a4 over {C15_FIELD}", required)
        return report
    K = NumberField.from_polynomial(parse_poly(C15_FIELD))
    H = TorsionSearch(EllipticCurve(record.ainvs)).over(K)[0]
    report.add(f"torsion of 50a4 over {C15_FIELD}", H == TorsionStructure.cyclic(15), f"computed {H}")
    return report


@dataclass
class KubertCheck:
    """Result of one family member: torsion over Q and, optionally, the halving step."""

    target: str
    t: Fraction
    status: str
    torsion: str = ""
    halving_degree: int = 0
    detail: str = ""


# Parameters t = k / 10 with |k| <= 50 cover [-5, 5]
_PARAMETER_STEPS = 50
_PARAMETER_DENOMINATOR = 10


def _admissible_members(target, count, rng):
    """Walk the parameters in random order until count non-degenerate members are found."""
    candidates = [Fraction(k, _PARAMETER_DENOMINATOR) for k in range(-_PARAMETER_STEPS, _PARAMETER_STEPS + 1)]
    rng.shuffle(candidates)
    members = []
    for t in candidates:
        if len(members) == count:
            break
        try:
            curve, P = kubert_curve(target, t)
        except ValueError as e:
            logger.debug(f"Kubert {target} at t = {t} is degenerate: {e}")
            continue
        members.append((t, curve, P))
    if len(members) < count:
        raise ValueError(f"only {len(members)} admissible {target} parameters found, {count} requested")
    return members


def kubert_suite(count=20, seed=None, halve=0):
    """
    Random admissible members of the C10 and C12 families.

    For each target, count distinct parameters t in [-5, 5] are kept; poles
    and singular members are redrawn. The first ``halve`` members of each
    family are also halved over a quartic field.

    Returns:
        list: KubertCheck per (target, t)

    Raises:
        ValueError: if fewer than count admissible parameters exist
    """
    rng = random.Random(config.RANDOM_SEED if seed is None else seed)
    results = []
    for target, n in KUBERT_TARGETS.items():
        for i, (t, curve, P) in enumerate(_admissible_members(target, count, rng)):

            try:
                structure, _ = torsion_over_Q(curve)
            except TorsionComputationError as e:
                results.append(KubertCheck(target, t, "fail", detail=str(e)))
                logger.warning(f"Kubert {target} at t = {t}: {e}")
                continue
            ok = structure == TorsionStructure.cyclic(n)
            check = KubertCheck(target, t, "pass" if ok else "fail", torsion=str(structure))
            if ok and i < halve:
                try:
                    L, Q = halve_point(curve, P)
                    check.halving_degree = L.degree
                    H = TorsionSearch(curve).over(L)[0]
                    if L.degree != 4:
                        check.status = "fail"
                        check.detail = f"halving field has degree {L.degree}"
                    elif not subgroup_of(TorsionStructure.cyclic(2 * n), H):
                        check.status = "fail"
                        check.detail = f"torsion over {L.min_poly} is {H}"
                    else:
                        check.detail = f"{H} over {L.min_poly}"
                except (HalvingError, TorsionComputationError) as e:
                    check.status = "fail"
                    check.detail = str(e)
            if check.status == "fail":
                logger.warning(f"Kubert {target} at t = {t}: {check.torsion} {check.detail}")
            results.append(check)
    return results
