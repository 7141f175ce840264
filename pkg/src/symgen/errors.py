"""Shared exception types and enumeration guards."""

import os


class SymgenError(Exception):
    """Base class for all errors raised by this package."""


class GuardError(SymgenError):
    """An enumeration or truncation guard was exceeded (CLI exit code 3)."""


class VerificationError(SymgenError):
    """An asserted identity failed; carries the first counterexample (CLI exit code 1)."""


class HodgeParseError(SymgenError):
    """A Hodge-diamond input file is malformed (CLI exit code 2)."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" at line {line}" + (f", column {column}" if column is not None else "")
        super().__init__(message + where)


class ConventionError(SymgenError):
    """A requested bookkeeping convention has no exact representation here (CLI exit code 3)."""


def cell_limit(default=1_000_000):
    """Enumeration guard, optionally lowered by the SYMGEN_MAX_CELLS environment variable."""
    env = os.environ.get("SYMGEN_MAX_CELLS")
    if env is None:
        return default
    try:
        value = int(env)
    except ValueError:
        raise GuardError(f"SYMGEN_MAX_CELLS must be an integer, got {env!r}")
    if value <= 0:
        raise GuardError(f"SYMGEN_MAX_CELLS must be positive, got {value}")
    return min(default, value)


def check_cells(count, default=1_000_000, what="enumeration"):
    """Raise GuardError when an enumeration of `count` cells exceeds the active limit."""
    limit = cell_limit(default)
    if count > limit:
        raise GuardError(f"{what} needs {count} cells, above the limit {limit}")
    return count
