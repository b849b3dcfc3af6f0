"""Exception types shared across the package."""


class DeltaSetsError(Exception):
    """Base class for package-specific errors."""


class ParseError(DeltaSetsError):
    """Malformed graph input. Carries the 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class GenerationError(DeltaSetsError):
    """Random generation exhausted its retry budget."""


class SizeLimitError(DeltaSetsError):
    """Input exceeds the size guard of an exhaustive computation."""


class StabilizationError(DeltaSetsError):
    """A stabilization search ran past its certified cap (indicates a bug)."""
