"""Exception hierarchy shared by every module.

The CLI maps ``ParseError`` to exit status 2 and ``ValidationError`` to 3.
"""


class SimplicialError(ValueError):
    pass


class ParseError(SimplicialError):
    """Malformed input text; ``position`` is a 0-based offset when known."""

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class ValidationError(SimplicialError):
    pass


class SizeMismatch(ValidationError):
    pass


class IndexOutOfRange(ValidationError):
    pass


class IllTyped(ValidationError):
    pass
