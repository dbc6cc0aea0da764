"""Verification report: CSV for tools, a rich table for people."""

import csv
import logging
from pathlib import Path
from typing import Sequence, TextIO, Union

from rich.console import Console
from rich.table import Table

from bicomplex_paley_wiener.verification.suites import CheckResult

logger = logging.getLogger(__name__)

REPORT_HEADER = [
    "test",
    "parameter",
    "component1_value",
    "component2_value",
    "bound",
    "passed",
]


def _format(value: float) -> str:
    return repr(float(value))


def write_report(
    rows: Sequence[CheckResult], output: Union[str, Path, TextIO]
) -> None:
    """Write the report CSV; identical rows give byte-identical files."""
    if isinstance(output, (str, Path)):
        with open(output, "w", newline="") as report_file:
            write_report(rows, report_file)
        logger.info(f"Wrote {len(rows)} report rows to {output}")
        return
    writer = csv.writer(output, lineterminator="\n")
    writer.writerow(REPORT_HEADER)
    for row in rows:
        writer.writerow(
            [
                row.test,
                row.parameter,
                _format(row.component1_value),
                _format(row.component2_value),
                "" if row.bound is None else _format(row.bound),
                "pass" if row.passed else "fail",
            ]
        )


def render_summary(rows: Sequence[CheckResult], console: Console) -> None:
    """Print the report rows as a table, failures highlighted."""
    table = Table(title="Verification report")
    for column in REPORT_HEADER:
        justify = "left" if column in ("test", "parameter") else "right"
        table.add_column(column, justify=justify)
    for row in rows:
        status = (
            "[green]pass[/green]"
            if row.passed
            else "[bold red]fail[/bold red]"
        )
        table.add_row(
            row.test,
            row.parameter,
            f"{row.component1_value:.6g}",
            f"{row.component2_value:.6g}",
            "" if row.bound is None else f"{row.bound:.3g}",
            status,
        )
    console.print(table)
    failed = sum(not row.passed for row in rows)
    if failed:
        console.print(
            f"[bold red]{failed} of {len(rows)} checks failed[/bold red]"
        )
    else:
        console.print(f"[green]All {len(rows)} checks passed[/green]")
