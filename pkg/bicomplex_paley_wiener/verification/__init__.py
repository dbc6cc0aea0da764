"""Command-line interface and numerical verification suites."""
