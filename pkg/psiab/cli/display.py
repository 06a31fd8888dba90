"""Console rendering for command results."""

from pathlib import Path
from typing import List, Optional

from rich.console import Console
from rich.table import Table

from ..models.results import RadiusResult, SuiteReport


class Display:
    """Prints tables and messages with rich."""

    def __init__(self, console: Optional[Console] = None, err_console: Optional[Console] = None):
        """Initialize the Display.

        Args:
            console (Console, optional): Console for regular output
            err_console (Console, optional): Console for errors and notices
        """
        self.console = console or Console()
        self.err_console = err_console or Console(stderr=True)

    def display_error(self, message: str) -> None:
        """Display an error message.

        Args:
            message (str): Error message to display
        """
        self.err_console.print(f"[red]Error:[/red] {message}")

    def display_message(self, message: str) -> None:
        self.err_console.print(message)

    def show_radius(self, kind: str, result: RadiusResult) -> None:
        table = Table(title=f"{kind} radius")
        table.add_column("field")
        table.add_column("value", justify="right")
        table.add_row("value", f"{result.value:.12g}")
        table.add_row("branch", result.branch.value)
        table.add_row("residual", f"{result.equation_residual:.3g}")
        table.add_row("sharp", "[green]yes[/green]" if result.sharp else "no")
        table.add_row("sharpness margin", f"{result.sharpness_margin:.3g}")
        self.err_console.print(table)

    def show_suites(self, reports: List[SuiteReport]) -> None:
        """Render a pass/fail table for the acceptance suites.

        Args:
            reports (List[SuiteReport]): Suites in run order
        """
        table = Table(title="verification")
        table.add_column("suite")
        table.add_column("check")
        table.add_column("result")
        table.add_column("detail", overflow="fold")
        for report in reports:
            for check in report.checks:
                if check.info:
                    status = "[blue]info[/blue]"
                elif check.passed:
                    status = "[green]pass[/green]"
                else:
                    status = "[red]FAIL[/red]"
                table.add_row(report.suite, check.name, status, check.detail)
        self.console.print(table)

        failed = sum(1 for r in reports for c in r.checks if not c.passed)
        if failed:
            self.console.print(f"[red]{failed} check(s) failed[/red]")
        else:
            self.console.print("[green]all checks passed[/green]")

    def show_files(self, title: str, paths: List[Path], passed: bool, detail: str) -> None:
        table = Table(title=title)
        table.add_column("file")
        for path in paths:
            table.add_row(str(path))
        self.console.print(table)
        status = "[green]containment ok[/green]" if passed else "[red]containment failed[/red]"
        self.console.print(f"{status} {detail}".rstrip())
