from typing import Any, List, Optional, Tuple

import click

from wcqsym import WeakComposition, parse_composition
from wcqsym.verify import SuiteResult


def print_error(title_str: str, detail_str: str = "") -> None:
    click.echo(click.style(title_str, fg="red", bold=True) + str(detail_str), err=True)


def print_info(title_str: str, detail_str: str = "") -> None:
    click.echo(click.style(title_str, fg="green", bold=True) + str(detail_str), err=True)


class CompositionType(click.ParamType):
    """Comma-separated weak composition, the empty string being ∅."""

    name = "composition"

    def convert(
        self, value: Any, param: Optional[click.Parameter], ctx: Optional[click.Context]
    ) -> WeakComposition:
        if isinstance(value, tuple):
            return value
        try:
            return parse_composition(value)
        except ValueError as err:
            self.fail(str(err), param, ctx)


class WindowType(click.ParamType):
    """Exponent range ``LO:HI``."""

    name = "window"

    def convert(
        self, value: Any, param: Optional[click.Parameter], ctx: Optional[click.Context]
    ) -> Tuple[int, int]:
        if isinstance(value, tuple):
            return value
        fields = value.split(":")
        if len(fields) != 2:
            self.fail(f"window '{value}' invalid, expected LO:HI", param, ctx)
        try:
            lo, hi = int(fields[0]), int(fields[1])
        except ValueError:
            self.fail(f"window '{value}' invalid, bounds must be integers", param, ctx)
        if hi < lo:
            self.fail(f"window '{value}' invalid, HI cannot be lower than LO", param, ctx)
        return lo, hi


COMPOSITION = CompositionType()
WINDOW = WindowType()


def format_results(results: List[SuiteResult]) -> str:
    """Pass/fail table, one suite per line."""
    width = max((len(r.name) for r in results), default=0)
    lines = []
    for r in results:
        passed = sum(1 for c in r.results if c.passed)
        status = "PASS" if r.passed else "FAIL"
        lines.append(f"{r.name:<{width}}  {passed:>5}/{len(r.results):<5}  {status}")
    return "\n".join(lines)
