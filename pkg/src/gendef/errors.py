"""Exception hierarchy shared by the library and the CLI exit-code mapping."""


class GendefError(Exception):
    pass


class InputError(GendefError, ValueError):
    """Malformed automaton, word or file.  ``line`` is set for file parse errors."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class DimensionError(GendefError, ValueError):
    pass


class ResourceLimitError(GendefError):
    pass


class PreconditionError(GendefError, ValueError):
    pass


class NotDefiniteError(PreconditionError):
    pass


class ReverseDefiniteCaseError(PreconditionError):
    pass


class ConsistencyError(GendefError, RuntimeError):
    """A result contradicts a proven property; indicates a bug."""
