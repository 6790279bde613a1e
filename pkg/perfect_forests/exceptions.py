"""Exceptions raised by the perfect_forests package."""


class PerfectForestError(Exception):
    """Base class for every error raised by this package."""


class InfeasibleInputError(PerfectForestError, ValueError):
    """
    Well-formed input that violates a mathematical precondition.

    Odd-sum parity targets, disconnected hosts and graphs of the wrong order
    end up here.  The command line reports these with exit code 2.
    """


class GraphFormatError(PerfectForestError, ValueError):
    """Malformed graph, CNF or parity-target text."""

    def __init__(self, message: str, line: int | None = None) -> None:
        """
        Create a GraphFormatError.

        Args:
        ----
            message (str): What was wrong
            line (int | None): 1-based line number of the offending input line, if known

        """
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class OracleLimitError(PerfectForestError, ValueError):
    """A brute-force oracle was asked to work on an instance above its cap."""


class InvalidWitnessError(PerfectForestError, ValueError):
    """A witness handed to a reduction conversion does not certify what it claims."""


class SettingsError(PerfectForestError):
    """The YAML settings file could not be loaded."""


class AlgorithmInvariantError(PerfectForestError, AssertionError):
    """An internal guarantee of one of the constructive algorithms did not hold."""


class UsageError(PerfectForestError):
    """Bad command-line arguments."""
