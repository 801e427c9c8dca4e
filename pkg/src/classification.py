"""
Torsion structures and the classification tables for growth over quartic fields.

Holds the stored sets (Mazur's list, the quadratic, cubic and quartic sets,
the CM table, mod-p image data), the exclusion rules that decide which
pairs (G, H) can occur for a curve over Q, and the regeneration of the
G x H table from those rules.
"""
import logging
import math
import re
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

import config

logger = logging.getLogger(__name__)


class TorsionComputationError(Exception):
    """Raised when a computed torsion group is inconsistent or outside the known lists."""


class SporadicTorsionError(TorsionComputationError):
    """Raised when a torsion group over a quartic field falls outside the expected set for G."""

    def __init__(self, message, structure=None, field=None):
        super().__init__(message)
        self.structure = structure
        self.field = field


class TableMismatchError(Exception):
    """Raised when the rule engine does not reproduce a stored table."""


_STRUCTURE_PATTERNS = (
    re.compile(r"^C(\d+)\s*[xX×*]\s*C(\d+)$"),
    re.compile(r"^\(\s*(\d+)\s*,\s*(\d+)\s*\)$"),
)
_CYCLIC_PATTERNS = (
    re.compile(r"^C(\d+)$"),
    re.compile(r"^\(\s*(\d+)\s*\)$"),
)


@dataclass(frozen=True, order=True)
class TorsionStructure:
    """
    Finite abelian group C_a x C_b with a | b; cyclic groups have a = 1.

    Attributes:
        a (int): smaller invariant factor
        b (int): larger invariant factor
    """

    a: int
    b: int

    def __post_init__(self):
        if self.a < 1 or self.b < 1 or self.b % self.a:
            raise ValueError(f"invalid torsion structure C{self.a} x C{self.b}: need a | b")

    @classmethod
    def of(cls, a, b=None):
        """C_a (one argument) or C_a x C_b in either order, normalised to invariant factors."""
        if b is None:
            return cls(1, a)
        g = math.gcd(a, b)
        return cls(g, a * b // g)

    @classmethod
    def cyclic(cls, n):
        return cls(1, n)

    @classmethod
    def parse(cls, text):
        """
        Parse "C15", "C2xC4", "(15)" or "(2,4)".

        Raises:
            ValueError: on malformed text or when a does not divide b
        """
        text = text.strip()
        for pattern in _CYCLIC_PATTERNS:
            match = pattern.match(text)
            if match:
                return cls(1, int(match.group(1)))
        for pattern in _STRUCTURE_PATTERNS:
            match = pattern.match(text)
            if match:
                a, b = int(match.group(1)), int(match.group(2))
                return cls(a, b)
        raise ValueError(f"Cannot parse torsion structure {text!r}")

    @property
    def order(self):
        return self.a * self.b

    def is_cyclic(self):
        return self.a == 1

    def short(self):
        """Compact form used in configuration strings: (n) or (n,m)."""
        return f"({self.b})" if self.a == 1 else f"({self.a},{self.b})"

    def __str__(self):
        return f"C{self.b}" if self.a == 1 else f"C{self.a}xC{self.b}"


def _C(n, m=None):
    return TorsionStructure.of(n, m)


def _cyclic_set(orders):
    return {_C(n) for n in orders}


def _product_set(a, multipliers):
    return {_C(a, a * m) for m in multipliers}


# ---------------------------------------------------------------------------
# Stored sets
# ---------------------------------------------------------------------------

# Mazur's list, in the column order of the G x H table
PHI_1_ORDERED = (
    _C(1), _C(2), _C(3), _C(4), _C(5), _C(6), _C(7), _C(8), _C(9), _C(10), _C(12),
    _C(2, 2), _C(2, 4), _C(2, 6), _C(2, 8),
)
PHI_1 = frozenset(PHI_1_ORDERED)

PHI_2 = frozenset(
    _cyclic_set(list(range(1, 17)) + [18])
    | _product_set(2, range(1, 7))
    | _product_set(3, (1, 2))
    | {_C(4, 4)}
)

S_Q = {1: frozenset({2, 3, 5, 7}), 2: frozenset({2, 3, 5, 7}), 3: frozenset({2, 3, 5, 7, 13}), 4: frozenset({2, 3, 5, 7, 13})}

PHI_Q_2 = frozenset(
    _cyclic_set(list(range(1, 11)) + [12, 15, 16])
    | _product_set(2, range(1, 7))
    | _product_set(3, (1, 2))
    | {_C(4, 4)}
)

PHI_Q_3 = frozenset(
    _cyclic_set(list(range(1, 11)) + [12, 13, 14, 18, 21])
    | _product_set(2, (1, 2, 3, 4, 7))
)

# Galois quartic fields with group V4 and C4
PHI_Q_V4 = frozenset(
    _cyclic_set(list(range(1, 11)) + [12, 15, 16])
    | _product_set(2, (1, 2, 3, 4, 5, 6, 8))
    | _product_set(3, (1, 2))
    | _product_set(4, (1, 2))
    | {_C(6, 6)}
)

PHI_Q_C4 = frozenset(
    _cyclic_set(list(range(1, 11)) + [12, 13, 15, 16])
    | _product_set(2, (1, 2, 3, 4, 5, 6, 8))
    | {_C(5, 5)}
)

PHI_INF_3 = frozenset(
    _cyclic_set(list(range(1, 17)) + [18, 20])
    | _product_set(2, range(1, 8))
)

PHI_INF_4 = frozenset(
    _cyclic_set(list(range(1, 19)) + [20, 21, 22, 24])
    | _product_set(2, range(1, 10))
    | _product_set(3, (1, 2, 3))
    | _product_set(4, (1, 2))
    | {_C(5, 5), _C(6, 6)}
)

PHI_STAR_4 = frozenset(
    _cyclic_set(list(range(1, 11)) + [12, 13, 15, 16, 20, 24])
    | _product_set(2, (1, 2, 3, 4, 5, 6, 8))
    | _product_set(3, (1, 2))
    | _product_set(4, (1, 2))
    | {_C(5, 5), _C(6, 6)}
)

# Groups occurring for infinitely many j-invariants over Q
PHI_INF_Q_4 = PHI_STAR_4 - {_C(15)}

# Structures removed from PHI_INF_4 to obtain PHI_STAR_4 (C15 is added back)
PHI_STAR_4_REMOVED = frozenset({
    _C(11), _C(14), _C(17), _C(18), _C(21), _C(22), _C(2, 14), _C(2, 18), _C(3, 9),
})


def _groups(*specs):
    return frozenset(TorsionStructure.parse(s) for s in specs)


PHI_STAR_4_G = {
    _C(1): _groups("C1", "C3", "C5", "C7", "C9", "C13", "C15", "C3xC3", "C5xC5"),
    _C(2): _groups(
        "C2", "C4", "C6", "C8", "C10", "C12", "C16", "C20", "C24",
        "C2xC2", "C2xC4", "C2xC6", "C2xC8", "C2xC10", "C2xC12", "C2xC16",
        "C3xC6", "C4xC4", "C4xC8", "C6xC6",
    ),
    _C(3): _groups("C3", "C15", "C3xC3"),
    _C(4): _groups(
        "C4", "C8", "C12", "C16", "C24", "C2xC4", "C2xC8", "C2xC12", "C2xC16", "C4xC4", "C4xC8",
    ),
    _C(5): _groups("C5", "C15", "C5xC5"),
    _C(6): _groups("C6", "C12", "C24", "C2xC6", "C2xC12", "C3xC6", "C6xC6"),
    _C(7): _groups("C7"),
    _C(8): _groups("C8", "C16", "C2xC8", "C2xC16", "C4xC8"),
    _C(9): _groups("C9"),
    _C(10): _groups("C10", "C20", "C2xC10"),
    _C(12): _groups("C12", "C24", "C2xC12"),
    _C(2, 2): _groups("C2xC2", "C2xC4", "C2xC6", "C2xC8", "C2xC12", "C2xC16", "C4xC4", "C4xC8"),
    _C(2, 4): _groups("C2xC4", "C2xC8", "C2xC16", "C4xC4", "C4xC8"),
    _C(2, 6): _groups("C2xC6", "C2xC12"),
    _C(2, 8): _groups("C2xC8", "C2xC16", "C4xC8"),
}

_CM_1 = _groups("C1", "C2", "C3", "C4", "C6", "C2xC2")
_CM_2 = _CM_1 | _groups("C7", "C10", "C2xC4", "C2xC6", "C3xC3")
_CM_3 = _CM_1 | _groups("C9", "C14")
PHI_CM = {
    1: _CM_1,
    2: _CM_2,
    3: _CM_3,
    4: _CM_2 | _groups("C5", "C8", "C12", "C13", "C21", "C2xC8", "C2xC10", "C3xC6", "C4xC4"),
    5: _CM_1 | _groups("C11"),
    6: _CM_2 | _CM_3 | _groups("C18", "C19", "C26", "C2xC14", "C3xC6", "C3xC9", "C6xC6"),
    7: _CM_1,
}


@dataclass(frozen=True)
class ImageGroup:
    """
    Mod-p image of Galois for non-CM curves over Q.

    Attributes:
        prime (int): 3 or 5
        label (str): group label such as "5Cs.1.1"
        d0 (int): degree of the minimal field with a p-isogeny
        d1 (int): degree of the minimal field with a point of order p
        d (int): degree of the p-division field
    """

    prime: int
    label: str
    d0: int
    d1: int
    d: int


SUTHERLAND = (
    ImageGroup(3, "3Cs.1.1", 1, 1, 2),
    ImageGroup(3, "3Cs", 1, 2, 4),
    ImageGroup(3, "3B.1.1", 1, 1, 6),
    ImageGroup(3, "3B.1.2", 1, 2, 6),
    ImageGroup(3, "3Ns", 2, 4, 8),
    ImageGroup(3, "3B", 1, 2, 12),
    ImageGroup(3, "3Nn", 4, 8, 16),
    ImageGroup(5, "5Cs.1.1", 1, 1, 4),
    ImageGroup(5, "5Cs.1.3", 1, 2, 4),
    ImageGroup(5, "5Cs.4.1", 1, 2, 8),
    ImageGroup(5, "5Ns.2.1", 2, 8, 16),
    ImageGroup(5, "5Cs", 1, 4, 16),
    ImageGroup(5, "5B.1.1", 1, 1, 20),
    ImageGroup(5, "5B.1.2", 1, 4, 20),
    ImageGroup(5, "5B.1.4", 1, 2, 20),
    ImageGroup(5, "5B.1.3", 1, 4, 20),
    ImageGroup(5, "5Ns", 2, 8, 32),
    ImageGroup(5, "5B.4.1", 1, 2, 40),
    ImageGroup(5, "5B.4.2", 1, 4, 40),
    ImageGroup(5, "5Nn", 6, 24, 48),
    ImageGroup(5, "5B", 1, 4, 80),
    ImageGroup(5, "5S4", 6, 24, 96),
)


# j-invariants of curves over Q acquiring C15 over a quartic field, with the
# curve of minimal conductor realising each one
C15_J = {
    "50a1": Fraction(-5**2, 2),
    "450b2": Fraction(-5**2 * 241**3, 2**3),
    "50a3": Fraction(-5 * 29**3, 2**5),
    "50a4": Fraction(5 * 211**3, 2**15),
}


# ---------------------------------------------------------------------------
# Subgroup combinatorics
# ---------------------------------------------------------------------------

def _divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def subgroup_of(small, big):
    """True iff C_a1 x C_b1 embeds in C_a2 x C_b2, i.e. a1 | a2 and b1 | b2."""
    return big.a % small.a == 0 and big.b % small.b == 0


def element_orders(structure):
    """All orders of elements of C_a x C_b."""
    return {math.lcm(d1, d2) for d1 in _divisors(structure.a) for d2 in _divisors(structure.b)}


def _prime_power_base(n):
    if n < 2:
        return None
    for p in range(2, n + 1):
        if n % p == 0:
            while n % p == 0:
                n //= p
            return p if n == 1 else None
    return None


def maximal_prime_powers(orders):
    """Largest prime power in orders for each prime, sorted ascending by prime."""
    best = {}
    for n in orders:
        p = _prime_power_base(n)
        if p is not None and n > best.get(p, 1):
            best[p] = n
    return [best[p] for p in sorted(best)]


def candidate_orders(G, exhaustive=False):
    """
    Orders n whose division polynomials are enough to find all torsion over quartic fields.

    Args:
        G (TorsionStructure): torsion over Q
        exhaustive (bool): use every prime power up to config.EXHAUSTIVE_MAX_ORDER

    Returns:
        list: maximal prime powers, one per prime
    """
    if exhaustive:
        orders = range(2, config.EXHAUSTIVE_MAX_ORDER + 1)
    else:
        if G not in PHI_STAR_4_G:
            raise ValueError(f"{G} is not a torsion structure over Q")
        orders = set()
        for H in PHI_STAR_4_G[G]:
            orders |= element_orders(H)
    return maximal_prime_powers(orders)


# ---------------------------------------------------------------------------
# Exclusion rules
# ---------------------------------------------------------------------------

def _contains(H, n, m=None):
    return subgroup_of(_C(n, m), H)


@dataclass(frozen=True)
class ExclusionRule:
    """
    One statement restricting the pairs (G, H) = (torsion over Q, torsion over K).

    Attributes:
        id (str): "teo-1" ... "teo-12"
        text (str): the statement
        predicate (callable): (G, H) -> True when the pair is excluded
        executable (bool): False for statements that are not a condition on (G, H)
    """

    id: str
    text: str
    predicate: object = field(compare=False, repr=False)
    executable: bool = True

    def excludes(self, G, H):
        return self.executable and bool(self.predicate(G, H))


EXCLUSION_RULES = (
    ExclusionRule("teo-1", "If C2 is not contained in G, then C2 is not contained in H",
                  lambda G, H: G.order % 2 == 1 and H.order % 2 == 0),
    ExclusionRule("teo-2", "11 and 17 do not divide the order of H",
                  lambda G, H: H.order % 11 == 0 or H.order % 17 == 0),
    ExclusionRule("teo-3", "C14 and C2xC14 do not occur for curves over Q",
                  lambda G, H: H in (_C(14), _C(2, 14))),
    ExclusionRule("teo-4", "C21 is not contained in H",
                  lambda G, H: _contains(H, 21)),
    ExclusionRule("teo-5", "If C4 is contained in G, then C20 is not contained in H",
                  lambda G, H: _contains(G, 4) and _contains(H, 20)),
    ExclusionRule("teo-6", "If C8 is contained in G, then C24 is not contained in H",
                  lambda G, H: _contains(G, 8) and _contains(H, 24)),
    ExclusionRule("teo-7", "If C2xC2 is contained in G, then C2xC10 is not contained in H",
                  lambda G, H: _contains(G, 2, 2) and _contains(H, 2, 10)),
    ExclusionRule("teo-8", "If C2xC4 is contained in G, then C2xC12 is not contained in H",
                  lambda G, H: _contains(G, 2, 4) and _contains(H, 2, 12)),
    ExclusionRule("teo-9", "If H = C6xC6, then G = C2 or G = C6",
                  lambda G, H: H == _C(6, 6) and G not in (_C(2), _C(6))),
    ExclusionRule("teo-10", "A point of order 9 over K is already defined over a proper subfield of K",
                  lambda G, H: False, executable=False),
    ExclusionRule("teo-11", "C18 and C3xC9 are not contained in H",
                  lambda G, H: _contains(H, 18) or _contains(H, 3, 9)),
    ExclusionRule("teo-12", "If G = C3, then C9 is not contained in H",
                  lambda G, H: G == _C(3) and _contains(H, 9)),
)
RULES_BY_ID = {rule.id: rule for rule in EXCLUSION_RULES}


@dataclass(frozen=True)
class RuleVerdict:
    """
    Outcome of filtering one pair (G, H).

    Attributes:
        status (str): "allowed", "ruled_out" or "not_supergroup"
        rule_id (str): first rule excluding the pair, when ruled out
    """

    status: str
    rule_id: str = None

    @property
    def allowed(self):
        return self.status == "allowed"

    def cell(self):
        if self.status == "not_supergroup":
            return "-"
        if self.status == "ruled_out":
            return self.rule_id
        return "v"

    def __str__(self):
        return self.cell() if self.status == "ruled_out" else self.status


def firing_rules(G, H):
    """Ids of every rule excluding the pair, in rule order."""
    return [rule.id for rule in EXCLUSION_RULES if rule.excludes(G, H)]


def rule_filter(G, H):
    """
    Decide a pair (G, H) by the containment check and then the first excluding rule.

    Args:
        G (TorsionStructure): torsion over Q
        H (TorsionStructure): candidate torsion over a quartic field

    Returns:
        RuleVerdict
    """
    if not subgroup_of(G, H):
        return RuleVerdict("not_supergroup")
    for rule in EXCLUSION_RULES:
        if rule.excludes(G, H):
            return RuleVerdict("ruled_out", rule.id)
    return RuleVerdict("allowed")


# ---------------------------------------------------------------------------
# The G x H table
# ---------------------------------------------------------------------------

TABLE1_COLUMNS = PHI_1_ORDERED

# Printed cells: v (G = H), v2 (already over a quadratic field), v4 (first over
# a quartic field), - (G not contained in H), n (excluded by rule teo-n)
_TABLE1_TEXT = """
C1       v  -  -  -  -  -  -  -  -  -  -  -  -  -  -
C2       1  v  -  -  -  -  -  -  -  -  -  -  -  -  -
C3       v2 -  v  -  -  -  -  -  -  -  -  -  -  -  -
C4       1  v2 -  v  -  -  -  -  -  -  -  -  -  -  -
C5       v2 -  -  -  v  -  -  -  -  -  -  -  -  -  -
C6       1  v2 1  -  -  v  -  -  -  -  -  -  -  -  -
C7       v2 -  -  -  -  -  v  -  -  -  -  -  -  -  -
C8       1  v2 -  v2 -  -  -  v  -  -  -  -  -  -  -
C9       v2 -  12 -  -  -  -  -  v  -  -  -  -  -  -
C10      1  v2 -  -  1  -  -  -  -  v  -  -  -  -  -
C11      2  -  -  -  -  -  -  -  -  -  -  -  -  -  -
C12      1  v2 1  v2 -  v2 -  -  -  -  v  -  -  -  -
C13      v4 -  -  -  -  -  -  -  -  -  -  -  -  -  -
C14      1  3  -  -  -  -  1  -  -  -  -  -  -  -  -
C15      v4 -  v2 -  v2 -  -  -  -  -  -  -  -  -  -
C16      1  v2 -  v4 -  -  -  v2 -  -  -  -  -  -  -
C17      2  -  -  -  -  -  -  -  -  -  -  -  -  -  -
C18      1  11 1  -  -  11 -  -  1  -  -  -  -  -  -
C20      1  v4 -  5  1  -  -  -  -  v4 -  -  -  -  -
C21      4  -  4  -  -  -  4  -  -  -  -  -  -  -  -
C22      1  2  -  -  -  -  -  -  -  -  -  -  -  -  -
C24      1  v4 1  v4 -  v4 -  6  -  -  v  -  -  -  -
C2xC2    1  v2 -  -  -  -  -  -  -  -  -  v  -  -  -
C2xC4    1  v4 -  v2 -  -  -  -  -  -  -  v2 v  -  -
C2xC6    1  v2 1  -  -  v2 -  -  -  -  -  v2 -  v  -
C2xC8    1  v4 -  v2 -  -  -  v2 -  -  -  v2 v2 -  v
C2xC10   1  v2 -  -  1  -  -  -  -  v2 -  7  -  -  -
C2xC12   1  v4 1  v2 -  v4 -  -  -  -  v2 v2 8  v  -
C2xC14   1  3  -  -  -  -  3  -  -  -  -  3  -  -  -
C2xC16   1  v4 -  v4 -  -  -  v2 -  -  -  v2 v2 -  v2
C2xC18   1  11 1  -  -  11 -  -  1  -  -  11 -  11 -
C3xC3    v4 -  v2 -  -  -  -  -  -  -  -  -  -  -  -
C3xC6    1  v4 1  -  -  v2 -  -  -  -  -  -  -  -  -
C3xC9    11 -  11 -  -  -  -  -  11 -  -  -  -  -  -
C4xC4    1  v4 -  v2 -  -  -  -  -  -  -  v4 v2 -  -
C4xC8    1  v4 -  v4 -  -  -  v4 -  -  -  v4 v4 -  v4
C5xC5    v4 -  -  -  v4 -  -  -  -  -  -  -  -  -  -
C6xC6    1  v4 1  -  -  v4 -  -  -  -  -  9  -  9  -
"""


def _parse_printed_table(text):
    rows = []
    printed = {}
    for line in text.strip().splitlines():
        name, *tokens = line.split()
        if len(tokens) != len(TABLE1_COLUMNS):
            raise ValueError(f"printed table row {name} has {len(tokens)} cells")
        H = TorsionStructure.parse(name)
        rows.append(H)
        printed[H] = tuple(f"teo-{t}" if t.isdigit() else t for t in tokens)
    return tuple(rows), printed


TABLE1_ROWS, TABLE1_PRINTED = _parse_printed_table(_TABLE1_TEXT)


@dataclass
class Table1:
    """
    Verdict for every (H, G) in rows x columns.

    Attributes:
        rows (tuple): TorsionStructure rows H
        columns (tuple): TorsionStructure columns G
        cells (dict): (H, G) -> RuleVerdict
    """

    rows: tuple
    columns: tuple
    cells: dict

    def cell(self, H, G):
        return self.cells[(H, G)]

    def allowed(self, G):
        return frozenset(H for H in self.rows if self.cells[(H, G)].allowed)


def generate_table1(rows=TABLE1_ROWS, columns=TABLE1_COLUMNS, expected=None):
    """
    Regenerate the G x H table from the containment check and the rules.

    Args:
        rows (tuple): H structures
        columns (tuple): G structures
        expected (dict, optional): G -> allowed set to compare against (PHI_STAR_4_G)

    Returns:
        Table1: the regenerated table

    Raises:
        TableMismatchError: if an allowed column differs from the expected set
    """
    expected = PHI_STAR_4_G if expected is None else expected
    cells = {(H, G): rule_filter(G, H) for H in rows for G in columns}
    table = Table1(tuple(rows), tuple(columns), cells)

    problems = []
    for G in columns:
        allowed = table.allowed(G)
        want = expected.get(G, frozenset())
        if allowed != want:
            missing = sorted(str(H) for H in want - allowed)
            extra = sorted(str(H) for H in allowed - want)
            problems.append(f"column {G}: missing {missing}, unexpected {extra}")
    if problems:
        for problem in problems:
            logger.error(f"Table regeneration mismatch in {problem}")
        raise TableMismatchError("; ".join(problems))

    logger.debug(f"Regenerated table with {len(rows)} rows and {len(columns)} columns")
    return table


@dataclass(frozen=True)
class CellNote:
    """A printed cell compared with the regenerated one."""

    H: TorsionStructure
    G: TorsionStructure
    printed: str
    computed: str
    firing: tuple = ()
    reason: str = "rule"

    def __str__(self):
        fired = ", ".join(self.firing) if self.firing else "none"
        return (
            f"H={self.H} G={self.G} printed={self.printed} computed={self.computed} "
            f"firing=[{fired}] ({self.reason})"
        )


@dataclass
class TableComparison:
    """
    Result of comparing the regenerated table with the printed one.

    Attributes:
        flagged (list): cells that agree on the verdict but not on its annotation
        mismatches (list): cells where printed and regenerated verdicts disagree
    """

    flagged: list = field(default_factory=list)
    mismatches: list = field(default_factory=list)

    @property
    def consistent(self):
        return not self.mismatches

    def flagged_rules(self):
        return [note for note in self.flagged if note.reason == "rule"]


def compare_with_printed_table(table=None):
    """
    Compare every cell of the regenerated table with the printed annotation.

    A printed rule that fires without being the first firing rule is
    flagged, as is a plain check mark off the diagonal G = H. Anything
    else that differs is a mismatch.

    Args:
        table (Table1, optional): previously generated table

    Returns:
        TableComparison
    """
    table = table or generate_table1()
    comparison = TableComparison()
    for H in table.rows:
        printed_row = TABLE1_PRINTED.get(H)
        if printed_row is None:
            comparison.mismatches.append(CellNote(H, None, "missing row", "", reason="row"))
            continue
        for G, printed in zip(table.columns, printed_row):
            verdict = table.cell(H, G)
            computed = verdict.cell()
            firing = tuple(firing_rules(G, H))
            if printed == "-":
                ok = verdict.status == "not_supergroup"
            elif printed.startswith("v"):
                ok = verdict.allowed
                if ok and (printed == "v") != (G == H):
                    comparison.flagged.append(CellNote(H, G, printed, computed, firing, reason="category"))
            else:
                ok = verdict.status == "ruled_out"
                if ok and printed != computed:
                    if printed in firing:
                        comparison.flagged.append(CellNote(H, G, printed, computed, firing))
                    else:
                        ok = False
            if not ok:
                comparison.mismatches.append(CellNote(H, G, printed, computed, firing, reason="verdict"))
    for note in comparison.flagged:
        logger.info(f"Printed cell annotation differs: {note}")
    for note in comparison.mismatches:
        logger.warning(f"Printed cell disagrees with regenerated table: {note}")
    return comparison


# ---------------------------------------------------------------------------
# Torsion configurations
# ---------------------------------------------------------------------------

_ENTRY_PATTERN = re.compile(r"\((\d+)(?:,(\d+))?\)(?:\^(\d+))?")


def parse_configuration(text):
    """
    Parse a configuration such as "(4)^2,(6),(12)^2,(2,2)" into sorted structures.

    Returns:
        tuple: TorsionStructures with repetition, sorted

    Raises:
        ValueError: on malformed text
    """
    compact = re.sub(r"\s+", "", text)
    if compact in ("", "-", "[]"):
        return ()
    entries = []
    position = 0
    while position < len(compact):
        match = _ENTRY_PATTERN.match(compact, position)
        if not match:
            raise ValueError(f"Cannot parse configuration {text!r} at position {position}")
        first, second, power = match.groups()
        structure = _C(int(first)) if second is None else TorsionStructure(int(first), int(second))
        entries.extend([structure] * int(power or 1))
        position = match.end()
        if position < len(compact):
            if compact[position] != ",":
                raise ValueError(f"Cannot parse configuration {text!r} at position {position}")
            position += 1
    return tuple(sorted(entries))


def render_configuration(entries):
    """Exponent notation of a multiset of structures; "-" for the empty configuration."""
    counts = Counter(entries)
    if not counts:
        return "-"
    parts = []
    for structure in sorted(counts):
        s = counts[structure]
        parts.append(structure.short() + (f"^{s}" if s > 1 else ""))
    return ",".join(parts)


@dataclass(frozen=True)
class KnownConfiguration:
    """A configuration found by the exhaustive search, with the curve of minimal conductor."""

    G: TorsionStructure
    entries: tuple
    label: str

    @property
    def size(self):
        return len(self.entries)

    def render(self):
        return render_configuration(self.entries)


_KNOWN_CONFIGURATION_ROWS = (
    ("C1", "(3)", "19a2"),
    ("C1", "(5)", "11a2"),
    ("C1", "(7)", "208d1"),
    ("C1", "(9)", "54a2"),
    ("C1", "(13)", "2890d1"),
    ("C1", "(3)^2", "121b1"),
    ("C1", "(3),(5)", "50a2"),
    ("C1", "(3),(15)", "50b3"),
    ("C1", "(5)^2", "18176b2"),
    ("C1", "(5),(5,5)", "275b2"),
    ("C1", "(3)^2,(5)", "338d1"),
    ("C1", "(3),(5),(15)", "50a4"),
    ("C1", "(3)^2,(3,3)", "175b2"),
    ("C2", "(4),(2,2)", "46a1"),
    ("C2", "(4),(2,6)", "36a3"),
    ("C2", "(4),(2,10)", "450a3"),
    ("C2", "(2,2),(2,4)", "200b1"),
    ("C2", "(4),(10),(2,2)", "66c3"),
    ("C2", "(4),(2,2),(2,4)", "49a1"),
    ("C2", "(4),(2,2),(2,10)", "1014c2"),
    ("C2", "(4),(2,6),(2,12)", "1040g2"),
    ("C2", "(8),(2,2),(2,4)", "294f1"),
    ("C2", "(4)^2,(2,2),(2,4)", "120b1"),
    ("C2", "(4)^2,(2,2),(4,4)", "320a4"),
    ("C2", "(4)^2,(2,6),(2,12)", "450g1"),
    ("C2", "(4),(6)^2,(2,2)", "726a2"),
    ("C2", "(4),(6),(2,2),(2,6)", "14a3"),
    ("C2", "(4),(6),(2,6),(6,6)", "98a3"),
    ("C2", "(4),(8),(2,2),(2,8)", "45a1"),
    ("C2", "(4),(10),(2,2),(2,10)", "150b3"),
    ("C2", "(4),(12),(2,2),(2,12)", "30a3"),
    ("C2", "(4),(16),(2,2),(2,16)", "3150bk1"),
    ("C2", "(6)^2,(2,2),(2,4)", "256a1"),
    ("C2", "(6),(12),(2,2),(2,6)", "36a4"),
    ("C2", "(8)^2,(2,2),(4,8)", "2880r6"),
    ("C2", "(10),(20),(2,2),(2,10)", "450a4"),
    ("C2", "(4)^2,(8),(2,2),(2,4)", "33a2"),
    ("C2", "(4)^2,(8),(2,2),(4,4)", "64a4"),
    ("C2", "(4)^2,(2,2),(2,4)^2", "33a4"),
    ("C2", "(4)^2,(2,6),(2,12)^2", "960o7"),
    ("C2", "(4),(6),(2,2),(2,4),(2,6)", "130a4"),
    ("C2", "(4),(8),(12),(2,2),(2,12)", "960e3"),
    ("C2", "(4),(8),(16),(2,2),(2,8)", "63a1"),
    ("C2", "(4),(8),(2,2),(2,4),(2,8)", "24a6"),
    ("C2", "(4),(12),(24),(2,2),(2,12)", "960o3"),
    ("C2", "(4),(12),(2,2),(2,4),(2,12)", "720j3"),
    ("C2", "(4)^2,(8)^2,(2,2),(2,4)", "45a3"),
    ("C2", "(4)^2,(8),(2,2),(2,4)^2", "17a3"),
    ("C2", "(4),(8),(16)^2,(2,2),(2,8)", "75b1"),
    ("C2", "(4),(8),(16),(2,2),(2,4),(2,8)", "510e7"),
    ("C2", "(4)^2,(8)^2,(2,2),(2,4)^2", "63a6"),
    ("C2", "(4),(6)^2,(2,2),(2,6)^2,(3,6)", "112c3"),
    ("C2", "(4),(8),(16)^2,(2,2),(2,4),(2,8)", "1470k3"),
    ("C2", "(6)^2,(12),(2,2),(2,6)^2,(3,6)", "98a4"),
    ("C2", "(4)^2,(6),(12)^2,(2,2),(2,4),(2,6)", "30a7"),
    ("C2", "(4)^2,(8)^4,(2,2),(2,4)", "630c6"),
    ("C2", "(4)^2,(8)^4,(2,2),(4,4)", "4410r6"),
    ("C2", "(4)^2,(8)^3,(2,2),(2,4)^2", "15a5"),
    ("C2", "(4)^2,(6),(8),(12)^2,(2,2),(2,4),(2,6)", "90c5"),
    ("C2", "(4)^2,(6),(12)^2,(2,2),(2,4)^2,(2,6)", "90c4"),
    ("C3", "(15)", "50a1"),
    ("C3", "(3,3)", "19a1"),
    ("C4", "(8),(2,4)", "33a3"),
    ("C4", "(8),(2,8)", "192c6"),
    ("C4", "(8),(2,12)", "150c3"),
    ("C4", "(8),(4,4)", "40a4"),
    ("C4", "(2,4),(2,8)", "64a3"),
    ("C4", "(8),(2,4),(2,8)", "17a4"),
    ("C4", "(8),(2,4),(4,4)", "17a1"),
    ("C4", "(8),(2,8),(2,16)", "1470k1"),
    ("C4", "(8)^2,(2,4),(2,8)", "24a3"),
    ("C4", "(8)^2,(2,8),(4,8)", "240d6"),
    ("C4", "(8),(12),(2,4),(2,12)", "90c1"),
    ("C4", "(12),(24),(2,4),(2,12)", "960o8"),
    ("C4", "(8)^2,(16),(2,4),(2,8)", "21a4"),
    ("C4", "(8)^2,(16)^2,(2,4),(2,8)", "15a7"),
    ("C4", "(8)^2,(2,4),(2,8)^2,(4,4)", "195a6"),
    ("C4", "(8)^2,(16)^3,(2,4),(2,8)", "1230f4"),
    ("C4", "(8)^2,(16)^2,(2,4),(2,8)^2,(4,4)", "210e6"),
    ("C5", "(15)", "50b1"),
    ("C5", "(5,5)", "11a1"),
    ("C6", "(12),(2,6)", "14a4"),
    ("C6", "(12),(2,6),(2,12)", "130a2"),
    ("C6", "(12)^2,(2,6),(2,12)", "30a1"),
    ("C6", "(12),(2,6),(3,6),(6,6)", "14a1"),
    ("C6", "(12)^2,(24),(2,6),(2,12)", "90c8"),
    ("C6", "(12)^2,(2,6),(2,12)^2", "90c7"),
    ("C8", "(16),(2,8)", "21a3"),
    ("C8", "(16),(2,8),(2,16)", "1230f1"),
    ("C8", "(16),(2,8),(4,8)", "15a4"),
    ("C8", "(16)^2,(2,8),(2,16)", "210e1"),
    ("C10", "(20),(2,10)", "66c1"),
    ("C12", "(24),(2,12)", "90c3"),
    ("C2xC2", "(2,4)", "33a1"),
    ("C2xC2", "(2,4),(2,8)", "45a5"),
    ("C2xC2", "(2,4),(4,4)", "64a1"),
    ("C2xC2", "(2,4)^3", "120b2"),
    ("C2xC2", "(2,4)^2,(2,8)", "63a2"),
    ("C2xC2", "(2,4)^2,(2,12)", "960o6"),
    ("C2xC2", "(2,4)^2,(4,4)", "17a2"),
    ("C2xC2", "(2,4)^2,(4,8)", "1200j4"),
    ("C2xC2", "(2,4),(2,6),(2,12)", "90c2"),
    ("C2xC2", "(2,4),(2,8)^2", "45a2"),
    ("C2xC2", "(2,4),(2,8),(4,8)", "75b3"),
    ("C2xC2", "(2,4)^3,(2,6)", "210a6"),
    ("C2xC2", "(2,4)^3,(4,4)", "231a3"),
    ("C2xC2", "(2,4)^2,(2,6),(2,12)", "30a6"),
    ("C2xC2", "(2,4)^2,(2,8),(2,16)", "75b2"),
    ("C2xC2", "(2,4)^2,(2,8),(4,4)", "40a1"),
    ("C2xC2", "(2,4)^2,(2,8),(4,8)", "510e5"),
    ("C2xC2", "(2,4),(2,6),(2,12)^2", "720j6"),
    ("C2xC2", "(2,4)^3,(2,8),(4,4)", "21a2"),
    ("C2xC2", "(2,4)^2,(2,8)^2,(4,4)", "75b5"),
    ("C2xC2", "(2,4),(2,6),(2,12)^3", "150c6"),
    ("C2xC2", "(2,4)^3,(2,8)^2,(4,4)", "42a3"),
    ("C2xC2", "(2,4)^2,(2,8)^3,(4,4)", "294c2"),
    ("C2xC2", "(2,4)^3,(2,8)^3,(4,4)", "15a2"),
    ("C2xC2", "(2,4)^2,(2,8)^4,(4,4)", "6720cd4"),
    ("C2xC2", "(2,4)^3,(2,8)^4,(4,4)", "210e5"),
    ("C2xC4", "(2,8),(4,4)", "21a1"),
    ("C2xC4", "(2,8)^2,(4,4)", "24a1"),
    ("C2xC4", "(2,8)^2,(4,8)", "1230f2"),
    ("C2xC4", "(2,8),(2,16),(4,4)", "15a3"),
    ("C2xC4", "(2,8),(4,4),(4,8)", "15a1"),
    ("C2xC4", "(2,8)^2,(4,4),(4,8)", "210e3"),
    ("C2xC6", "(2,12)", "90c6"),
    ("C2xC6", "(2,12)^3", "30a2"),
    ("C2xC8", "(2,16)^2,(4,8)", "210e2"),
)

KNOWN_CONFIGURATIONS = tuple(
    KnownConfiguration(TorsionStructure.parse(g), parse_configuration(text), label)
    for g, text, label in _KNOWN_CONFIGURATION_ROWS
)
_KNOWN_BY_KEY = {(c.G, c.entries): c for c in KNOWN_CONFIGURATIONS}


def known_configuration(G, entries):
    """
    Look up a configuration among the stored ones.

    Args:
        G (TorsionStructure): torsion over Q
        entries (iterable): TorsionStructures, in any order

    Returns:
        KnownConfiguration or None
    """
    return _KNOWN_BY_KEY.get((G, tuple(sorted(entries))))


def max_configuration_size():
    """Largest number of growth fields among the stored configurations."""
    return max(c.size for c in KNOWN_CONFIGURATIONS)


@dataclass(frozen=True)
class GrowthExample:
    """A curve over Q whose torsion grows from G to H over the quartic field of poly."""

    G: TorsionStructure
    H: TorsionStructure
    poly: str
    label: str


_GROWTH_EXAMPLE_ROWS = (
    ("C1", "C13", "x^4 - x^3 - 6*x^2 + x + 1", "2890d1"),
    ("C1", "C15", "x^4 - 2*x^3 + 5*x^2 - 4*x + 19", "50a4"),
    ("C1", "C3xC3", "x^4 - 2*x^3 + 5*x^2 - 4*x + 19", "175b2"),
    ("C1", "C5xC5", "x^4 + x^3 + x^2 + x + 1", "275b2"),
    ("C2", "C20", "x^4 - 5*x^2 + 10", "450a4"),
    ("C2", "C24", "x^4 - 18*x^2 - 15", "960o3"),
    ("C2", "C2xC4", "x^4 - 5", "15a5"),
    ("C2", "C2xC8", "x^4 + 1", "24a6"),
    ("C2", "C2xC12", "x^4 - 2*x^3 + 5*x^2 - 4*x + 19", "30a3"),
    ("C2", "C2xC16", "x^4 - 4*x^3 + 17*x^2 - 26*x + 16", "3150bk1"),
    ("C2", "C3xC6", "x^4 - 2*x^3 + 11*x^2 - 10*x + 4", "98a4"),
    ("C2", "C4xC4", "x^4 + 1", "64a4"),
    ("C2", "C4xC8", "x^4 + 9", "2880r6"),
    ("C2", "C6xC6", "x^4 - 2*x^3 + 11*x^2 - 10*x + 4", "98a3"),
    ("C4", "C16", "x^4 - x^3 - 4*x^2 + 4*x + 1", "15a7"),
    ("C4", "C24", "x^4 - 8*x^2 + 10", "960o8"),
    ("C4", "C2xC16", "x^4 - 4*x^3 + 17*x^2 - 26*x + 16", "1470k1"),
    ("C4", "C4xC8", "x^4 + 9", "240d6"),
    ("C5", "C5xC5", "x^4 - x^3 + x^2 - x + 1", "11a1"),
    ("C6", "C24", "x^4 - 8*x^2 + 10", "90c8"),
    ("C6", "C2xC12", "x^4 - 2*x^3 + 5*x^2 - 4*x + 19", "30a1"),
    ("C6", "C6xC6", "x^4 - 2*x^3 + 11*x^2 - 10*x + 4", "14a1"),
    ("C8", "C2xC16", "x^4 - 4*x^3 + 17*x^2 - 26*x + 16", "210e1"),
    ("C8", "C4xC8", "x^4 + 9", "15a4"),
    ("C10", "C20", "x^4 - 2*x^3 + x^2 + 2", "66c1"),
    ("C12", "C24", "x^4 - 18*x^2 - 15", "90c3"),
    ("C2xC2", "C2xC16", "x^4 - x^3 - 4*x^2 + 4*x + 1", "75b2"),
    ("C2xC2", "C4xC4", "x^4 - 2*x^3 + x^2 + 5", "15a2"),
    ("C2xC2", "C4xC8", "x^4 - 2*x^3 + x^2 + 5", "75b3"),
    ("C2xC4", "C2xC16", "x^4 - x^3 - 4*x^2 + 4*x + 1", "15a3"),
    ("C2xC4", "C4xC8", "x^4 - 2*x^3 + x^2 + 5", "15a1"),
    ("C2xC8", "C2xC16", "x^4 - 2*x^3 - 11*x^2 + 12*x + 186", "210e2"),
    ("C2xC8", "C4xC8", "x^4 - 2*x^3 + 7*x^2 - 6*x + 2", "210e2"),
)

GROWTH_EXAMPLES = tuple(
    GrowthExample(TorsionStructure.parse(g), TorsionStructure.parse(h), poly, label)
    for g, h, poly, label in _GROWTH_EXAMPLE_ROWS
)


# ---------------------------------------------------------------------------
# Consistency of the stored tables
# ---------------------------------------------------------------------------

def _prime_divisors(n):
    return {p for p in range(2, n + 1) if n % p == 0 and all(p % q for q in range(2, p))}


def check_tables():
    """
    Check every invariant relating the stored sets and tables.

    Returns:
        list: descriptions of the failed checks (empty when all hold)
    """
    failures = []

    def expect(condition, description):
        if not condition:
            failures.append(description)

    expect(len(PHI_1) == 15, "Mazur's list has 15 groups")
    expect(PHI_STAR_4 == (PHI_INF_4 | {_C(15)}) - PHI_STAR_4_REMOVED,
           "quartic set over Q equals the infinite quartic set with C15, minus the excluded groups")
    expect(set(PHI_STAR_4_G) == set(PHI_1), "one quartic set per torsion group over Q")
    union = frozenset().union(*PHI_STAR_4_G.values())
    expect(union == PHI_STAR_4, "union over G of the per-G sets equals the quartic set")
    for G, groups in PHI_STAR_4_G.items():
        expect(G in groups, f"{G} belongs to its own quartic set")
        bad = sorted(str(H) for H in groups if not subgroup_of(G, H))
        expect(not bad, f"every group in the quartic set of {G} contains it (offending: {bad})")
    expect(_C(15) in PHI_STAR_4 and _C(15) not in PHI_INF_Q_4,
           "C15 occurs only for finitely many j-invariants")
    expect(PHI_INF_Q_4 == PHI_STAR_4 - {_C(15)}, "infinitely occurring set is the quartic set minus C15")
    expect(PHI_1 <= PHI_Q_2 <= PHI_2, "Mazur's list inside the quadratic sets")
    expect(PHI_Q_V4 | PHI_Q_C4 <= PHI_STAR_4, "Galois quartic sets inside the quartic set")
    expect(PHI_INF_3 <= PHI_INF_4, "infinitely occurring cubic groups occur over quartic fields")
    for d, groups in ((2, PHI_Q_2), (4, PHI_STAR_4)):
        primes = set().union(*(_prime_divisors(H.order) for H in groups))
        expect(primes == set(S_Q[d]), f"primes dividing the orders of the degree-{d} set match S_Q({d})")
    for d in (2, 3, 4, 5, 6, 7):
        expect(PHI_CM[1] <= PHI_CM[d], f"CM set of degree {d} contains the rational CM set")
    expect(PHI_CM[2] <= PHI_CM[4], "CM set of degree 4 contains the quadratic one")
    for row in SUTHERLAND:
        expect(row.d0 <= row.d1, f"{row.label}: d0 <= d1")
        expect(row.d % row.d1 == 0, f"{row.label}: d1 divides d")
    expect(len(TABLE1_ROWS) == len(set(TABLE1_ROWS)), "table rows are distinct")
    expect(set(TABLE1_ROWS) == set(PHI_INF_4), "table rows are the infinite quartic set")
    for known in KNOWN_CONFIGURATIONS:
        allowed = PHI_STAR_4_G.get(known.G, frozenset()) - {known.G}
        bad = sorted(str(H) for H in known.entries if H not in allowed)
        expect(not bad, f"configuration {known.label} only uses groups allowed for {known.G} (offending: {bad})")
    expect(len(_KNOWN_BY_KEY) == len(KNOWN_CONFIGURATIONS), "stored configurations are distinct")
    for example in GROWTH_EXAMPLES:
        expect(example.H in PHI_STAR_4_G.get(example.G, ()),
               f"example {example.label}: {example.H} allowed for {example.G}")
    return failures
