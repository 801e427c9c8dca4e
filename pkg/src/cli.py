"""
Quartic torsion engine: command line interface.

Commands:
    torsion <curve>              torsion over Q
    torsion-k <curve> <minpoly>  torsion over the field of a quadratic or quartic polynomial
    growth <curve>               quadratic and quartic fields where the torsion grows
    scan <db>                    growth configurations of every curve in an allcurves file
    tables                       stored torsion sets and the regenerated table
    verify                       acceptance suite

A curve is a label of the fixture file or a literal [a1,a2,a3,a4,a6].
"""
import argparse
import logging
import sys

import config
from classification import TableMismatchError, TorsionComputationError, generate_table1
from curve import TorsionSearch, field_from_text, growth_fields
from curve_db import CurveDatabaseError, ingest_db, load_fixture, select_curve
from families import HalvingError
from reports import FORMATS, render_checks, render_growth, render_scan, render_tables, render_torsion
from scan import run_scan
from scan_store import ScanStore
from verify import run_verification

logger = logging.getLogger(__name__)


def setup_logging(verbose=False):
    """Configure logging for the application."""
    config.ensure_directories()
    level = logging.DEBUG if verbose else getattr(logging, config.LOG_LEVEL.upper(), logging.INFO)

    logging.basicConfig(
        level=level,
        format=config.LOG_FORMAT,
        handlers=[
            logging.FileHandler(config.LOG_FILE),
            logging.StreamHandler()
        ]
    )
    logging.getLogger().setLevel(level)


def _emit(lines):
    for line in lines:
        print(line)


def _records(args):
    """Fixture records, loaded on first use."""
    if getattr(args, "_records", None) is None:
        args._records = load_fixture(args.fixture)
    return args._records


def _resolve(args):
    if args.curve.strip().startswith("["):
        return select_curve(args.curve)
    return select_curve(args.curve, _records(args))


def cmd_torsion(args):
    label, curve = _resolve(args)
    structure, generators, _ = TorsionSearch(curve).rational()
    _emit(render_torsion(label, curve, structure, generators, args.format))
    return 0


def cmd_torsion_k(args):
    label, curve = _resolve(args)
    field = field_from_text(args.minpoly)
    structure, points = TorsionSearch(curve, args.exhaustive).over(field)
    _emit(render_torsion(label, curve, structure, points, args.format, field=field))
    return 0


def cmd_growth(args):
    label, curve = _resolve(args)
    report = growth_fields(curve, exhaustive=args.exhaustive, label=label, keep_factors=args.verbose)
    _emit(render_growth(report, args.format, verbose=args.verbose))
    return 0


def cmd_scan(args):
    records = ingest_db(args.db)
    store = None if args.no_store else ScanStore(config.SCAN_RESULTS_FILE)
    summary = run_scan(
        records,
        max_conductor=args.max_conductor,
        jobs=args.jobs,
        store=store,
        exhaustive=args.exhaustive,
    )
    _emit(render_scan(summary, args.format))
    return 1 if summary.errors else 0


def cmd_tables(args):
    table = generate_table1()
    _emit(render_tables(table, args.format))
    return 0


def cmd_verify(args):
    load_error = None
    try:
        records = _records(args)
    except CurveDatabaseError as e:
        logger.error(f"No curve data for verification: {e}")
        records = {}
        load_error = str(e)
    checks = run_verification(records, quick=args.quick, load_error=load_error)
    _emit(render_checks(checks, args.format))
    return 1 if any(c.status == "fail" for _, c in checks) else 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="quartic-torsion",
        description="Torsion growth of rational elliptic curves over quartic fields.",
    )
    parser.add_argument("--format", choices=FORMATS, default="text", help="output format")
    parser.add_argument("--verbose", action="store_true", help="debug logging; growth adds factor lists")
    parser.add_argument("--fixture", default=None, help="allcurves file used for curve labels")
    commands = parser.add_subparsers(dest="command", required=True)

    p = commands.add_parser("torsion", help="torsion over Q")
    p.add_argument("curve")
    p.set_defaults(handler=cmd_torsion)

    p = commands.add_parser("torsion-k", help="torsion over a quadratic or quartic field")
    p.add_argument("curve")
    p.add_argument("minpoly", help='irreducible polynomial, e.g. "x^4 - 6"')
    p.add_argument("--exhaustive", action="store_true", help="try every prime power up to 24")
    p.set_defaults(handler=cmd_torsion_k)

    p = commands.add_parser("growth", help="fields of degree 2 and 4 with torsion growth")
    p.add_argument("curve")
    p.add_argument("--exhaustive", action="store_true", help="try every prime power up to 24")
    p.set_defaults(handler=cmd_growth)

    p = commands.add_parser("scan", help="growth configurations of a curve file")
    p.add_argument("db")
    p.add_argument("--max-conductor", type=int, default=None)
    p.add_argument("--jobs", type=int, default=config.DEFAULT_JOBS)
    p.add_argument("--exhaustive", action="store_true", help="try every prime power up to 24")
    p.add_argument("--no-store", action="store_true", help="neither read nor write the scan store")
    p.set_defaults(handler=cmd_scan)

    p = commands.add_parser("tables", help="stored sets and the regenerated table")
    p.set_defaults(handler=cmd_tables)

    p = commands.add_parser("verify", help="acceptance suite")
    p.add_argument("--quick", action="store_true", help="skip the slow checks")
    p.set_defaults(handler=cmd_verify)
    return parser


def main(argv=None):
    """
    Parse arguments and run one command.

    Returns:
        int: exit status
    """
    args = build_parser().parse_args(argv)
    setup_logging(args.verbose)
    try:
        return args.handler(args)
    except (CurveDatabaseError, TorsionComputationError, TableMismatchError, HalvingError) as e:
        logger.error(f"{args.command} failed: {e}")
        print(f"Error: {e}", file=sys.stderr)
        return 1
    except (ValueError, ZeroDivisionError) as e:
        logger.error(f"{args.command} failed: {e}", exc_info=True)
        print(f"Error: {e}", file=sys.stderr)
        return 1
