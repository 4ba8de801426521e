"""Text and CSV renderers.

Text goes through a fixed-width, colourless rich console so the same
document always renders to the same bytes.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from typing import Any, List, Sequence

from rich import box
from rich.console import Console
from rich.table import Table

TEXT_WIDTH = 100


@dataclass
class TableView:
    title: str
    columns: List[str]
    rows: List[List[Any]] = field(default_factory=list)
    right_align: Sequence[str] = ()

    def add_row(self, *cells: Any) -> None:
        self.rows.append(list(cells))


def _table_width(view: TableView) -> int:
    widths = [len(c) for c in view.columns]
    for row in view.rows:
        widths = [max(w, len(str(c))) for w, c in zip(widths, row)]
    return sum(w + 3 for w in widths) + 1


def _plain_console(buf: io.StringIO, width: int) -> Console:
    return Console(
        file=buf,
        width=width,
        color_system=None,
        force_terminal=False,
        highlight=False,
        emoji=False,
        markup=False,
        soft_wrap=True,
    )


def render_text(heading: str, summary: Sequence[str], views: Sequence[TableView]) -> str:
    """Heading line, key/value summary lines, then one table per view."""
    buf = io.StringIO()
    width = max([TEXT_WIDTH] + [_table_width(v) for v in views])
    console = _plain_console(buf, width)
    console.print(heading)
    for line in summary:
        console.print(line)
    for view in views:
        table = Table(title=view.title, box=box.ASCII, show_lines=False, title_justify="left")
        for col in view.columns:
            table.add_column(col, justify="right" if col in view.right_align else "left", no_wrap=True)
        for row in view.rows:
            table.add_row(*[str(c) for c in row])
        console.print()
        console.print(table)
    return buf.getvalue()


def render_csv(view: TableView) -> str:
    """Header row plus data rows, LF line endings."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(view.columns)
    for row in view.rows:
        writer.writerow([str(c) for c in row])
    return buf.getvalue()
