"""
Command line front end, fixture registry and the example checks.
"""

from arquiver.cli.main import EXIT_FAILED, EXIT_OK, EXIT_TRUNCATED, build_parser, exit_code, main
from arquiver.cli.registry import FIXTURES, Fixture, FixtureRegistry
from arquiver.cli.verify import CHECKS, MODULES, run_checks

__all__ = [
    "CHECKS",
    "EXIT_FAILED",
    "EXIT_OK",
    "EXIT_TRUNCATED",
    "FIXTURES",
    "MODULES",
    "Fixture",
    "FixtureRegistry",
    "build_parser",
    "exit_code",
    "main",
    "run_checks",
]
