"""
Text and JSON-lines rendering of torsion, growth, scan, table and verification reports.

Every function returns a list of output lines; the CLI prints them.
"""
import json

from classification import (
    PHI_1,
    PHI_2,
    PHI_CM,
    PHI_INF_3,
    PHI_INF_4,
    PHI_INF_Q_4,
    PHI_Q_2,
    PHI_Q_3,
    PHI_Q_C4,
    PHI_Q_V4,
    PHI_STAR_4,
    PHI_STAR_4_G,
    S_Q,
    SUTHERLAND,
    TABLE1_PRINTED,
    render_configuration,
)

FORMATS = ("text", "jsonl")

SEPARATOR = "=" * 70


def _json(obj):
    return json.dumps(obj, ensure_ascii=False, sort_keys=False)


def _structures(structures):
    return ", ".join(str(H) for H in sorted(structures))


def render_torsion(label, curve, structure, points, fmt="text", field=None):
    """
    Torsion over Q or over a field.

    Args:
        label (str): curve label
        curve (EllipticCurve): the curve
        structure (TorsionStructure): computed group
        points (list): generators (over Q) or all points (over a field)
        field (NumberField, optional): the field, None for Q
    """
    where = "Q" if field is None else str(field.min_poly)
    if fmt == "jsonl":
        return [_json({
            "label": label,
            "ainvs": [str(a) for a in curve.ainvs],
            "field": where,
            "torsion": str(structure),
            "points": [str(P) for P in points],
        })]
    kind = "Generators" if field is None else "Points"
    lines = [
        f"Curve {label}: {curve.ainvs_string()}",
        f"Torsion over {where}: {structure} (order {structure.order})",
        f"{kind}:",
    ]
    lines.extend(f"  {P}" for P in points)
    if not points:
        lines.append("  none")
    return lines


def render_growth(report, fmt="text", verbose=False):
    """Growth fields of one curve; verbose adds the factors of the division polynomials."""
    if fmt == "jsonl":
        data = report.to_dict()
        if not verbose:
            data.pop("factors", None)
        return [_json(data)]
    lines = [
        f"Curve {report.label}: {report.curve.ainvs_string()}",
        f"Torsion over Q: {report.G}",
    ]
    if verbose and report.factors:
        lines.append("Factors of degree 1, 2 and 4:")
        for n, factors in sorted(report.factors.items()):
            lines.append(f"  psi_{n}:")
            lines.extend(f"    {g}" for g in factors)
            if not factors:
                lines.append("    none")
    if not report.results:
        lines.append("No torsion growth over quadratic or quartic fields")
        return lines
    lines.append("Growth fields:")
    width = max(len(str(r.field.min_poly)) for r in report.results)
    for r in report.results:
        flag = "" if r.minimal else "  (not minimal)"
        lines.append(f"  {str(r.field.min_poly):<{width}}  {r.describe():<28}  {r.structure}{flag}")
    configuration = report.configuration()
    lines.append(f"Configuration: {render_configuration(configuration)} (size {len(configuration)})")
    return lines


def render_scan(summary, fmt="text"):
    """Configurations per G with example labels, the largest size, and quarantined curves."""
    if fmt == "jsonl":
        lines = [
            _json({
                "G": str(s.configuration.G),
                "configuration": s.configuration.render(),
                "size": s.configuration.size,
                "count": s.count,
                "label": s.label,
                "known": s.known,
            })
            for s in summary.ordered()
        ]
        lines.append(_json({
            "h": summary.h,
            "total": summary.total,
            "scanned": summary.processed,
            "skipped": summary.skipped,
            "errors": [{"label": label, "error": message} for label, message in summary.errors],
        }))
        return lines
    lines = [SEPARATOR, "Torsion growth configurations", SEPARATOR]
    for G, group in summary.by_group().items():
        lines.append(f"G = {G}")
        width = max(len(s.configuration.render()) for s in group)
        for s in group:
            status = "known" if s.known else "NEW"
            lines.append(
                f"  {s.configuration.render():<{width}}  size {s.configuration.size}  "
                f"{s.label:<10} count {s.count:<5} {status}"
            )
    lines.append(SEPARATOR)
    lines.append(f"Curves: {summary.total} (scanned {summary.processed}, reused {summary.skipped})")
    lines.append(f"Largest configuration size h = {summary.h}")
    new = summary.new_configurations()
    lines.append(f"New configurations: {len(new)}")
    if summary.errors:
        lines.append(f"Errors ({len(summary.errors)}):")
        lines.extend(f"  {label}: {message}" for label, message in summary.errors)
    return lines


def _named_sets():
    sets = [
        ("PHI(1)", PHI_1),
        ("PHI(2)", PHI_2),
        ("PHI_Q(2)", PHI_Q_2),
        ("PHI_Q(3)", PHI_Q_3),
        ("PHI_Q(4, V4)", PHI_Q_V4),
        ("PHI_Q(4, C4)", PHI_Q_C4),
        ("PHI_inf(3)", PHI_INF_3),
        ("PHI_inf(4)", PHI_INF_4),
        ("PHI*_Q(4)", PHI_STAR_4),
        ("PHI_inf_Q(4)", PHI_INF_Q_4),
    ]
    sets.extend((f"PHI*_Q(4, {G})", PHI_STAR_4_G[G]) for G in sorted(PHI_STAR_4_G))
    return sets


def render_tables(table, fmt="text"):
    """
    Stored sets and the regenerated G x H table.

    Args:
        table (Table1): output of generate_table1()
    """
    if fmt == "jsonl":
        lines = [_json({"set": name, "groups": [str(H) for H in sorted(groups)]}) for name, groups in _named_sets()]
        lines.append(_json({"set": "S_Q", "degrees": sorted(S_Q)}))
        for H in table.rows:
            for G in table.columns:
                lines.append(_json({"G": str(G), "H": str(H), "verdict": table.cell(H, G).cell()}))
        return lines

    lines = [SEPARATOR, "Torsion sets", SEPARATOR]
    for name, groups in _named_sets():
        lines.append(f"{name}: {_structures(groups)}")
    lines.append(f"S_Q: {sorted(S_Q)}")
    lines.append("PHI_CM(d):")
    for d in sorted(PHI_CM):
        lines.append(f"  d = {d}: {_structures(PHI_CM[d])}")
    lines.append("Images of mod p representations (p, label, d0, d1, d):")
    for image in SUTHERLAND:
        lines.append(f"  {image.prime:<3} {image.label:<8} {image.d0:<3} {image.d1:<3} {image.d}")

    lines.extend([SEPARATOR, "Regenerated table (rows H, columns G)", SEPARATOR])
    width = max(len(str(H)) for H in table.rows) + 2
    cell_width = 7
    header = " " * width + "".join(f"{str(G):>{cell_width}}" for G in table.columns)
    lines.append(header)
    for H in table.rows:
        cells = "".join(f"{table.cell(H, G).cell():>{cell_width}}" for G in table.columns)
        printed = TABLE1_PRINTED.get(H)
        lines.append(f"{str(H):<{width}}{cells}" + ("" if printed else "  (not printed)"))
    return lines


def render_checks(checks, fmt="text"):
    """
    Pass/fail/skip table of verification checks.

    Args:
        checks (list): (section, CheckResult) pairs
    """
    if fmt == "jsonl":
        return [
            _json({"section": section, "check": c.name, "status": c.status, "detail": c.detail})
            for section, c in checks
        ]
    lines = [SEPARATOR, "Verification", SEPARATOR]
    current = None
    for section, c in checks:
        if section != current:
            lines.append(f"[{section}]")
            current = section
        mark = {"pass": "PASS", "fail": "FAIL", "skip": "SKIP"}[c.status]
        detail = f"  ({c.detail})" if c.detail and c.status != "pass" else ""
        lines.append(f"  {mark}  {c.name}{detail}")
    counts = {status: sum(1 for _, c in checks if c.status == status) for status in ("pass", "fail", "skip")}
    lines.append(SEPARATOR)
    lines.append(f"Passed: {counts['pass']}  Failed: {counts['fail']}  Skipped: {counts['skip']}")
    return lines
