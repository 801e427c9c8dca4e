"""
Batch scan of a curve database: torsion growth per curve, folded into the
configurations realized for each torsion group over Q.
"""
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import config
from classification import (
    PHI_STAR_4_G,
    TorsionStructure,
    known_configuration,
    parse_configuration,
    render_configuration,
)
from curve import EllipticCurve, growth_fields

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class Configuration:
    """
    Multiset of torsion structures over the minimal growth fields of one curve.

    Attributes:
        G (TorsionStructure): torsion over Q
        entries (tuple): sorted TorsionStructures, repeated per field
    """

    G: TorsionStructure
    entries: tuple = ()

    @classmethod
    def of(cls, G, entries):
        return cls(G, tuple(sorted(entries)))

    @classmethod
    def parse(cls, G, text):
        return cls(TorsionStructure.parse(G) if isinstance(G, str) else G, parse_configuration(text))

    @property
    def size(self):
        return len(self.entries)

    def render(self):
        """Exponent notation, e.g. (4)^2,(6),(12)^2,(2,2),(2,4)^2,(2,6)."""
        return render_configuration(self.entries)

    def known(self):
        return known_configuration(self.G, self.entries)

    def outside_star(self):
        """Entries that are not in PHI*_Q(4, G) or equal G."""
        allowed = PHI_STAR_4_G.get(self.G, frozenset())
        return [H for H in self.entries if H not in allowed or H == self.G]


@dataclass
class ConfigurationStats:
    """How often a configuration occurred and its example of smallest conductor."""

    configuration: Configuration
    count: int = 0
    label: str = None
    conductor: int = None

    def record(self, label, conductor):
        self.count += 1
        if self.label is None or conductor < self.conductor:
            self.label = label
            self.conductor = conductor

    @property
    def known(self):
        return self.configuration.known() is not None


@dataclass
class ScanSummary:
    """
    Result of a scan.

    Attributes:
        stats (dict): Configuration -> ConfigurationStats
        errors (list): (label, message) for quarantined curves
        processed (int): curves computed in this run
        skipped (int): curves taken from the scan store
        total (int): curves considered
    """

    stats: dict = field(default_factory=dict)
    errors: list = field(default_factory=list)
    processed: int = 0
    skipped: int = 0
    total: int = 0

    def add(self, label, conductor, configuration):
        if configuration not in self.stats:
            self.stats[configuration] = ConfigurationStats(configuration)
        self.stats[configuration].record(label, conductor)

    def by_group(self):
        """G -> list of ConfigurationStats, in the order of ordered()."""
        groups = {}
        for stats in self.ordered():
            groups.setdefault(stats.configuration.G, []).append(stats)
        return groups

    def ordered(self):
        return sorted(self.stats.values(), key=lambda s: (s.configuration.G, s.configuration.size, s.configuration.entries))

    @property
    def h(self):
        """Largest number of minimal growth fields seen on one curve."""
        return max((c.size for c in self.stats), default=0)

    def new_configurations(self):
        return [s for s in self.ordered() if not s.known]


def scan_curve(label, ainvs, exhaustive=False):
    """
    Growth configuration of one curve; top level so worker processes can run it.

    Returns:
        dict: label, G, configuration (exponent notation) and the growth fields
    """
    report = growth_fields(EllipticCurve(ainvs), exhaustive=exhaustive, label=label)
    configuration = Configuration.of(report.G, report.configuration())
    return {
        "label": label,
        "G": str(report.G),
        "configuration": configuration.render(),
        "fields": [r.to_dict() for r in report.results],
    }


def _entry_configuration(entry):
    return Configuration.parse(entry["G"], entry["configuration"])


def _scan_serial(pending, exhaustive, on_result, on_error):
    for record in pending:
        try:
            on_result(record, scan_curve(record.label, record.ainvs, exhaustive))
        except Exception as e:
            on_error(record, e)


def _scan_parallel(pending, exhaustive, jobs, on_result, on_error):
    with ProcessPoolExecutor(max_workers=jobs) as executor:
        futures = [(record, executor.submit(scan_curve, record.label, record.ainvs, exhaustive)) for record in pending]
        for record, future in futures:
            try:
                on_result(record, future.result())
            except Exception as e:
                on_error(record, e)


def run_scan(records, max_conductor=None, jobs=config.DEFAULT_JOBS, store=None, exhaustive=False):
    """
    Scan curves and fold their growth configurations.

    Curves already in the store are reused when config.SKIP_SCANNED_CURVES
    is set. A stored entry that no longer parses is dropped from the
    store and the curve is scanned again. A curve that fails is logged,
    listed in the summary and skipped. Results are folded in record order,
    so the summary does not depend on the number of workers.

    Args:
        records (iterable): CurveRecords, e.g. a CurveDatabase
        max_conductor (int, optional): ignore curves of larger conductor
        jobs (int): worker processes; 1 runs serially
        store (ScanStore, optional): results store
        exhaustive (bool): exhaustive order mode

    Returns:
        ScanSummary
    """
    selected = [r for r in records if max_conductor is None or r.conductor <= max_conductor]
    selected.sort(key=lambda r: r.sort_key())
    summary = ScanSummary(total=len(selected))

    logger.info("=" * 60)
    logger.info(f"Scanning {len(selected)} curve(s) with {jobs} job(s)")
    logger.info("=" * 60)

    outcomes = {}
    pending = []
    for record in selected:
        entry = store.get_entry(record.label) if store is not None and config.SKIP_SCANNED_CURVES else None
        if entry is not None:
            try:
                outcomes[record.label] = _entry_configuration(entry)
            except (AttributeError, KeyError, TypeError, ValueError) as e:
                logger.warning(f"Discarding stored result for {record.label}: {e}")
                store.remove_entry(record.label)
                pending.append(record)
                continue
            logger.debug(f"Skipping {record.label} (already scanned)")
            summary.skipped += 1
        else:
            pending.append(record)

    fresh = {}

    def on_result(record, result):
        configuration = _entry_configuration(result)
        outside = configuration.outside_star()
        if outside:
            raise ValueError(f"growth to {[str(H) for H in outside]} outside PHI*_Q(4, {configuration.G})")
        outcomes[record.label] = configuration
        fresh[record.label] = {"G": result["G"], "configuration": result["configuration"], "conductor": record.conductor}
        summary.processed += 1
        logger.info(f"{record.label}: G = {result['G']}, configuration {result['configuration']}")

    def on_error(record, error):
        logger.error(f"Error scanning {record.label}: {error}", exc_info=True)
        summary.errors.append((record.label, str(error)))

    if jobs <= 1:
        _scan_serial(pending, exhaustive, on_result, on_error)
    else:
        _scan_parallel(pending, exhaustive, jobs, on_result, on_error)

    for record in selected:
        if record.label in outcomes:
            summary.add(record.label, record.conductor, outcomes[record.label])

    if store is not None and fresh:
        store.add_entries(fresh)

    logger.info("\n" + "=" * 60)
    logger.info("Scan Summary:")
    logger.info(f"  Total curves: {summary.total}")
    logger.info(f"  Scanned: {summary.processed}")
    logger.info(f"  Skipped (already scanned): {summary.skipped}")
    if store is not None:
        logger.info(f"  Stored results: {store.get_count()}")
    logger.info(f"  Errors: {len(summary.errors)}")
    for label, message in summary.errors:
        logger.info(f"    {label}: {message}")
    logger.info(f"  Configurations: {len(summary.stats)} ({len(summary.new_configurations())} new)")
    logger.info(f"  Largest configuration size: {summary.h}")
    logger.info("=" * 60)
    return summary
