"""
Output formats: aligned text tables, JSON, CSV and LaTeX rows

JSON is always written with sorted keys and a fixed indent, so two runs on
the same input give byte-identical output.
"""

import csv
import io
import json
from typing import Iterable, List, Mapping, Optional, Sequence

from eisenzeta.utils.config import FORMATS
from eisenzeta.utils.report import CheckReport


def render_json(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _cell(value) -> str:
    if isinstance(value, (dict, list, tuple)):
        return json.dumps(value, sort_keys=True, separators=(",", ":"))
    return "" if value is None else str(value)


def render_text_table(rows: Sequence[Mapping], columns: Sequence[str], title: str = "") -> str:
    """
    Left-aligned text table with a header rule.

    Args:
        rows: One mapping per row
        columns: Keys to print, in order
        title: Optional first line

    Returns:
        str: The table, newline terminated
    """

    cells = [[_cell(row.get(c)) for c in columns] for row in rows]
    widths = [max([len(c)] + [len(r[k]) for r in cells]) for k, c in enumerate(columns)]

    lines = [title] if title else []
    lines.append("  ".join(c.ljust(w) for c, w in zip(columns, widths)).rstrip())
    lines.append("  ".join("-" * w for w in widths))
    for r in cells:
        lines.append("  ".join(v.ljust(w) for v, w in zip(r, widths)).rstrip())
    return "\n".join(lines) + "\n"


def render_csv(rows: Sequence[Mapping], columns: Sequence[str]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_cell(row.get(c)) for c in columns])
    return buffer.getvalue()


def _latex_escape(text: str) -> str:
    return text.replace("_", "\\_").replace("%", "\\%").replace("&", "\\&")


def render_latex_rows(rows: Sequence[Mapping], columns: Sequence[str], math: Iterable[str] = ()) -> str:
    """
    Body rows of a LaTeX tabular, one `a & b \\\\` line per row.

    Columns named in `math` are wrapped in `$...$` and left unescaped.
    """

    math = set(math)
    lines = []
    for row in rows:
        cells = []
        for c in columns:
            value = _cell(row.get(c))
            cells.append(f"${value}$" if c in math else _latex_escape(value))
        lines.append(" & ".join(cells) + " \\\\")
    return "\n".join(lines) + "\n"


def render_rows(
    rows: Sequence[Mapping],
    columns: Sequence[str],
    fmt: str = "table",
    payload=None,
    title: str = "",
    latex_columns: Optional[Sequence[str]] = None,
    math: Iterable[str] = (),
) -> str:
    """
    Render records in one of the output formats.

    Args:
        rows: Records for table, csv and latex output
        columns: Keys to print
        fmt: table, json, csv or latex
        payload: JSON document, defaults to the rows themselves
        title: Heading of the text table
        latex_columns: Columns for LaTeX output, defaults to `columns`
        math: LaTeX columns set in math mode

    Returns:
        str: Rendered output
    """

    if fmt == "json":
        return render_json(list(rows) if payload is None else payload)
    if fmt == "csv":
        return render_csv(rows, columns)
    if fmt == "latex":
        return render_latex_rows(rows, latex_columns or columns, math)
    if fmt == "table":
        return render_text_table(rows, columns, title)
    raise ValueError(f"Invalid output format: {fmt}. Choose one of {', '.join(FORMATS)}")


def _report_rows(report: CheckReport) -> List[dict]:
    return [
        {
            "suite": report.suite,
            "subject": item.subject,
            "status": item.status.value,
            "claim": item.claim,
            "witness": item.witness,
        }
        for item in report.items
    ]


def render_report(report: CheckReport, fmt: str = "table") -> str:
    """
    Render a check report.

    The text table ends with the notes and a one-line summary; JSON is the
    report's own document.
    """

    if fmt == "json":
        return render_json(report.to_json())
    rows = _report_rows(report)
    if fmt == "csv":
        return render_csv(rows, ("suite", "subject", "status", "claim", "witness"))
    if fmt == "latex":
        return render_latex_rows(rows, ("subject", "status"))
    if fmt != "table":
        raise ValueError(f"Invalid output format: {fmt}. Choose one of {', '.join(FORMATS)}")

    text = render_text_table(rows, ("subject", "status", "witness"), title=report.suite)
    for note in report.notes:
        text += f"note: {note}\n"
    return text + report.summary() + "\n"


def table2_json(rows: Sequence[Mapping]) -> list:
    return [{"ell": r["ell"], "eisenstein": r["eisenstein_json"], "text": r["eisenstein"]} for r in rows]


def table3_json(rows: Sequence[Mapping]) -> list:
    return [{"ell": r["ell"], "zeta": r["zeta_json"], "text": r["zeta"]} for r in rows]


def render_table2(rows: Sequence[Mapping], fmt: str = "table") -> str:
    """Rows of the Type II Eisenstein polynomial table: weight and phi_l"""

    if fmt == "json":
        return render_json(table2_json(rows))
    if fmt == "latex":
        return render_latex_rows(rows, ("ell", "eisenstein_latex"), math=("ell", "eisenstein_latex"))
    return render_rows(rows, ("ell", "eisenstein"), fmt, title="Eisenstein polynomials, Type II")


def render_table3(rows: Sequence[Mapping], fmt: str = "table") -> str:
    """Rows of the Type II zeta polynomial table: weight and P(T)"""

    if fmt == "json":
        return render_json(table3_json(rows))
    if fmt == "latex":
        return render_latex_rows(rows, ("ell", "zeta_latex"), math=("ell", "zeta_latex"))
    return render_rows(rows, ("ell", "zeta"), fmt, title="Zeta polynomials, Type II, q = 2")
