"""Exception types raised across the package."""


class SpikeCodingError(ValueError):
    """Base class for all domain errors."""


class DegenerateSignal(SpikeCodingError):
    """Signal has no dynamic range (constant) or too few samples."""


class NonFiniteSignal(SpikeCodingError):
    pass


class LengthMismatch(SpikeCodingError):
    pass


class InvalidParams(SpikeCodingError):
    pass


class InvalidSpec(SpikeCodingError):
    """Generator spec outside its valid domain."""


class EmptySpace(SpikeCodingError):
    pass


class ParseError(SpikeCodingError):
    """Malformed CSV or key=value input. ``line`` is 1-based."""

    def __init__(self, message: str, line: int | None = None, path: str | None = None):
        self.line = line
        self.path = path
        where = ""
        if path is not None:
            where += f"{path}:"
        if line is not None:
            where += f"line {line}: "
        elif where:
            where += " "
        super().__init__(where + message)
