"""Exception hierarchy shared by all cript modules."""


class CriptError(Exception):
    """Base class for every error raised by this package."""


class FormatError(CriptError):
    """Malformed input text or image data (bad header, ragged row, ...).

    Carries the 1-based position of the offending character when known.
    """

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", column {column})" if column is not None else ")")
        super().__init__(message + where)


class InvalidCodeError(CriptError):
    """A CRIPT word failed the correctness conditions.

    The attached ValidationReport lists every violation found.
    """

    def __init__(self, message, report=None):
        self.report = report
        if report is not None and report.violations:
            message = f"{message}: {'; '.join(v.message for v in report.violations[:4])}"
            if len(report.violations) > 4:
                message += f"; ... ({len(report.violations)} violations total)"
        super().__init__(message)


class DomainError(CriptError):
    """A structurally valid input violating an operation's precondition."""


class GeometryError(CriptError):
    """Realized curves are not simple and pairwise disjoint."""
