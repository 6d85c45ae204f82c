"""Rich tables summarizing a run on the diagnostic stream."""
from typing import Dict, List, Optional

from rich.console import Console
from rich.panel import Panel
from rich.table import Table
from rich.text import Text

from ..checks.threshold_checks import CheckLevel, ResidualCheck


class RunSummary:
    """Print run results to stderr."""

    def __init__(self, console: Optional[Console] = None):
        """
        Initialize the summary printer.

        Args:
            console: Rich console; defaults to one writing to stderr
        """
        self.console = console or Console(stderr=True)

    @staticmethod
    def format_value(value) -> str:
        """Compact text for a scalar value."""
        if value is None:
            return "N/A"
        if isinstance(value, bool):
            return "yes" if value else "no"
        if isinstance(value, float):
            return f"{value:.6g}"
        return str(value)

    def create_values_table(self, title: str, values: Dict) -> Table:
        """Create a two-column table of named values."""
        table = Table(title=title, show_header=True, header_style="bold magenta")
        table.add_column("Quantity", style="cyan")
        table.add_column("Value", style="green")
        for key, value in values.items():
            if isinstance(value, (dict, list)):
                continue
            table.add_row(key, self.format_value(value))
        return table

    def create_checks_table(self, checks: List[ResidualCheck]) -> Table:
        """Create a table of residual checks with pass/fail coloring."""
        table = Table(title="Residual checks", show_header=True, header_style="bold magenta")
        table.add_column("Residual", style="cyan")
        table.add_column("Value")
        table.add_column("Bound")
        table.add_column("Status")
        for check in checks:
            color = "green" if check.level is CheckLevel.PASS else "red"
            table.add_row(
                check.metric,
                f"{check.value:.3e}",
                f"{check.threshold:.1e}",
                f"[{color}]{check.level.value.upper()}[/{color}]",
            )
        return table

    def create_files_panel(self, written: Dict[str, str]) -> Panel:
        """Create a panel listing written files."""
        if not written:
            return Panel("[yellow]No files written[/yellow]", title="Outputs", border_style="yellow")
        text = Text()
        for key in sorted(written):
            text.append(f"{key:<8} {written[key]}\n")
        return Panel(text, title=f"Outputs ({len(written)})", border_style="green")

    def display(
        self,
        title: str,
        values: Dict,
        checks: Optional[List[ResidualCheck]] = None,
        written: Optional[Dict[str, str]] = None,
    ):
        """Print the values, checks and written files of one run."""
        self.console.print(self.create_values_table(title, values))
        if checks:
            self.console.print(self.create_checks_table(checks))
        if written is not None:
            self.console.print(self.create_files_panel(written))
