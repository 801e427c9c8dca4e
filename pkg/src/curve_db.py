"""
Curve database module for reading Cremona allcurves files.
"""
import logging
import re
from dataclasses import dataclass
from pathlib import Path

import config
from curve import EllipticCurve

logger = logging.getLogger(__name__)

# "11 a 1 [0,-1,1,-10,-20] 0 5": conductor, isogeny class, number, a-invariants, rank, torsion order
_LINE_PATTERN = re.compile(
    r"^(\d+)\s+([a-z]+)\s+(\d+)\s+\[([^\]]*)\](?:\s+(-?\d+))?(?:\s+(\d+))?$"
)
_LABEL_PATTERN = re.compile(r"^(\d+)([a-z]+)(\d+)$")


class CurveDatabaseError(Exception):
    """Raised when a curve file cannot be read, holds no valid curve, or lacks a label."""


@dataclass(frozen=True)
class CurveRecord:
    """
    One line of an allcurves file.

    Attributes:
        label (str): Cremona label, e.g. "50a2"
        conductor (int): conductor
        ainvs (tuple): integer a-invariants [a1, a2, a3, a4, a6]
        rank (int): rank, or None when absent
        torsion_order (int): stated torsion order over Q, or None when absent
    """

    label: str
    conductor: int
    ainvs: tuple
    rank: int = None
    torsion_order: int = None

    def sort_key(self):
        return label_key(self.label)

    def curve(self):
        return EllipticCurve(self.ainvs)

    def to_line(self):
        conductor, iso, number = _LABEL_PATTERN.match(self.label).groups()
        ainvs = ",".join(str(a) for a in self.ainvs)
        line = f"{conductor} {iso} {number} [{ainvs}]"
        if self.rank is not None:
            line += f" {self.rank}"
            if self.torsion_order is not None:
                line += f" {self.torsion_order}"
        return line


def _iso_index(letters):
    index = 0
    for ch in letters:
        index = index * 26 + (ord(ch) - ord("a") + 1)
    return index


def label_key(label):
    """Sort key (conductor, isogeny class, number) for a Cremona label; unparsable labels sort last."""
    match = _LABEL_PATTERN.match(label)
    if not match:
        return (float("inf"), 0, 0, label)
    conductor, iso, number = match.groups()
    return (int(conductor), _iso_index(iso), int(number), label)


def parse_line(line):
    """
    Parse one allcurves line.

    Returns:
        CurveRecord

    Raises:
        ValueError: if the line is malformed or the curve is singular
    """
    match = _LINE_PATTERN.match(line.strip())
    if not match:
        raise ValueError("not of the form 'N class number [a1,a2,a3,a4,a6] rank torsion'")
    conductor, iso, number, ainvs_text, rank, torsion = match.groups()
    try:
        ainvs = tuple(int(a) for a in ainvs_text.split(","))
    except ValueError as e:
        raise ValueError(f"non-integral a-invariants [{ainvs_text}]") from e
    if len(ainvs) != 5:
        raise ValueError(f"expected five a-invariants, got {len(ainvs)}")
    EllipticCurve(ainvs)
    return CurveRecord(
        label=f"{conductor}{iso}{number}",
        conductor=int(conductor),
        ainvs=ainvs,
        rank=None if rank is None else int(rank),
        torsion_order=None if torsion is None else int(torsion),
    )


class CurveDatabase:
    """
    Records of an allcurves file, keyed by label, in (conductor, class, number) order.

    Attributes:
        path (Path): source file
        records (dict): label -> CurveRecord
        errors (list): (line number, line, reason) for each rejected line
    """

    def __init__(self, records, path=None, errors=None):
        self.path = path
        self.records = {r.label: r for r in sorted(records, key=CurveRecord.sort_key)}
        self.errors = errors or []

    def __len__(self):
        return len(self.records)

    def __iter__(self):
        return iter(self.records.values())

    def __contains__(self, label):
        return label in self.records

    def get(self, label, default=None):
        return self.records.get(label, default)

    def labels(self):
        return list(self.records)

    def up_to_conductor(self, max_conductor=None):
        """Records with conductor <= max_conductor (all records when None)."""
        if max_conductor is None:
            return list(self.records.values())
        return [r for r in self.records.values() if r.conductor <= max_conductor]


def ingest_db(path):
    """
    Read an allcurves file.

    Blank lines and lines starting with '#' are ignored. Malformed lines
    and duplicate labels are logged with their line number and collected
    in the database's errors list.

    Args:
        path (str or Path): file to read

    Returns:
        CurveDatabase

    Raises:
        CurveDatabaseError: if the file cannot be read or holds no valid record
    """
    path = Path(path)
    try:
        with open(path, "r", encoding="utf-8") as f:
            lines = f.readlines()
    except OSError as e:
        raise CurveDatabaseError(f"Cannot read curve file {path}: {e}") from e

    records = {}
    errors = []
    for number, line in enumerate(lines, start=1):
        text = line.strip()
        if not text or text.startswith("#"):
            continue
        try:
            record = parse_line(text)
            if record.label in records:
                raise ValueError(f"duplicate label {record.label}")
        except ValueError as e:
            logger.warning(f"{path.name}:{number}: skipping malformed line {text!r}: {e}")
            errors.append((number, text, str(e)))
            continue
        records[record.label] = record

    if not records:
        raise CurveDatabaseError(f"No valid curve records in {path}")
    logger.info(f"Loaded {len(records)} curve(s) from {path} ({len(errors)} malformed line(s))")
    return CurveDatabase(records.values(), path=path, errors=errors)


def load_fixture(path=None):
    """The bundled curve fixture, or the file named by QUARTIC_TORSION_FIXTURE."""
    return ingest_db(path or config.FIXTURE_FILE)


def select_curve(selector, records=None):
    """
    Resolve a curve given by label or by a literal a-invariant list.

    Args:
        selector (str): "50a2" or "[1,0,1,-126,-552]"
        records (CurveDatabase or dict, optional): label lookup

    Returns:
        tuple: (label, EllipticCurve)

    Raises:
        CurveDatabaseError: unknown label
        ValueError: malformed or singular a-invariant list
    """
    selector = selector.strip()
    if selector.startswith("["):
        curve = EllipticCurve.from_string(selector)
        return curve.ainvs_string(), curve
    record = None if records is None else records.get(selector)
    if record is None:
        raise CurveDatabaseError(f"Unknown curve label {selector!r}")
    return record.label, record.curve()
