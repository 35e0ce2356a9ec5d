"""Exception hierarchy shared by every module of the package."""


class HajosError(Exception):
    """Base class for all errors raised by hajosga."""


class InvalidArgument(HajosError, ValueError):
    pass


class NotIndependentError(HajosError, ValueError):
    """Raised when an identification is asked to merge adjacent (or equal) vertices."""


class InstanceTooLarge(HajosError, ValueError):
    """Raised by brute-force routines whose size contract is exceeded."""


class ParseError(HajosError, ValueError):
    """A text input did not follow its grammar.

    ``line`` is the 1-based line number of the offending line, or None when the
    problem is not tied to a single line (e.g. an empty file).
    """

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ReplayError(HajosError):
    """A construction script failed while executing statement ``step`` (1-based)."""

    def __init__(self, message, step=None):
        self.step = step
        if step is not None:
            message = f"step {step}: {message}"
        super().__init__(message)


class CorruptStoreError(HajosError):
    pass


class CannotRecombineError(HajosError):
    pass


class AnomalyError(HajosError):
    """A zero-fitness genome turned out not to be the symmetric 5-cycle."""
