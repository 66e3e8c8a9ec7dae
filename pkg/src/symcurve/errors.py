"""Exception types; the CLI maps each family to an exit code."""

from __future__ import annotations


class SymcurveError(Exception):
    pass


class CurveParseError(SymcurveError):
    """Input text does not describe a parametrization."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(message + where)


class UnsupportedConstantError(CurveParseError):
    pass


class DegreeOverflowError(CurveParseError):
    pass


class DegenerateCurveError(SymcurveError):
    """Point, line or improper input where a proper curve is required."""

    def __init__(self, curve_class):
        self.curve_class = curve_class
        super().__init__(curve_class.describe())


class InternalConsistencyError(SymcurveError):
    """An exact identity that must hold did not; indicates a bug, never rounding."""

    def __init__(self, message: str, dump: dict | None = None):
        self.dump = dump or {}
        if dump:
            details = "; ".join(f"{k}={v}" for k, v in dump.items())
            message = f"{message} [{details}]"
        super().__init__(message)
