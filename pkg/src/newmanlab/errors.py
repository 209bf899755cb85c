"""Exception types shared across the package.

Three failure modes are distinguished: malformed input (bad cycle string,
non-bijective image list, subgroup not contained in its claimed ambient),
violated mathematical preconditions (asking for a Hall subgroup of a
non-solvable group), and blown resource budgets (group order past the
enumeration bound).  Callers that want a single catch-all can use
NewmanlabError.
"""


class NewmanlabError(Exception):
    """Base class for all errors raised by this package."""


class InputError(NewmanlabError, ValueError):
    """Malformed or inconsistent input data."""


class PreconditionError(NewmanlabError, ValueError):
    """A mathematical precondition of the operation does not hold."""


class ResourceLimitError(NewmanlabError, RuntimeError):
    """The computation would exceed a configured size bound."""


class CorpusError(InputError):
    """A corpus file failed to parse or validate.

    Carries the 1-based line number when the problem is tied to a line.
    """

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
