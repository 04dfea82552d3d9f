"""Command-line driver: literal parsing, verification suites and reports."""
