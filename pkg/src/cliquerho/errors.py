"""Exception types shared across the package."""


class CliqueRhoError(Exception):
    """Base class for all package errors."""


class DomainError(CliqueRhoError, ValueError):
    """A parameter lies outside an operation's domain."""


class GraphSizeError(CliqueRhoError, ValueError):
    """The graph is too large for the requested representation or algorithm."""


class Graph6Error(CliqueRhoError, ValueError):
    """Malformed graph6 input.

    ``offset`` is the 0-based byte position of the problem, ``line`` the
    1-based catalog line when parsing a file.
    """

    def __init__(self, message, offset=None, line=None):
        parts = [message]
        if offset is not None:
            parts.append(f"at byte {offset}")
        if line is not None:
            parts.append(f"on line {line}")
        super().__init__(" ".join(parts))
        self.offset = offset
        self.line = line


class ConvergenceError(CliqueRhoError, RuntimeError):
    """An iteration hit its budget before meeting the tolerance.

    Carries the last Collatz-Wielandt bracket so callers can decide whether
    to accept a looser answer.
    """

    def __init__(self, message, bracket=None, iterations=None, trace=None):
        super().__init__(message)
        self.bracket = bracket
        self.iterations = iterations
        self.trace = trace


class StabilizationError(CliqueRhoError, RuntimeError):
    """Shift stabilization exceeded its step budget."""

    def __init__(self, message, trace=None):
        super().__init__(message)
        self.trace = trace


class SearchError(CliqueRhoError, RuntimeError):
    """An error raised while processing one candidate in a search."""

    def __init__(self, message, graph6=None):
        super().__init__(f"{message} [graph6={graph6}]" if graph6 else message)
        self.graph6 = graph6
