"""Exception hierarchy shared by all dskit modules."""


class DskitError(Exception):
    """Base class for all errors raised by dskit."""


class ValidationError(DskitError):
    """Invalid construction input (bad vertex ids, unbalanced facet, bad params)."""


class ParseError(DskitError):
    """Malformed .cplx or .colors input; carries the 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DomainError(DskitError):
    """Argument outside the operation's domain (e.g. a face not in the complex)."""


class ResourceLimitError(DskitError):
    """The face-count cap (max_faces / DSKIT_MAX_FACES) was exceeded."""


class PreconditionError(DskitError):
    """A relation's precondition failed; carries a witness face when one exists."""

    def __init__(self, message: str, witness: tuple[int, ...] | None = None):
        self.witness = witness
        if witness is not None:
            message = f"{message} (witness face: {witness})"
        super().__init__(message)
