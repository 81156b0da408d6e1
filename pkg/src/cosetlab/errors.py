"""Exception types shared across the package."""


class CosetlabError(Exception):
    """Base class for all errors raised by cosetlab."""


class CapExceeded(CosetlabError):
    """A configured enumeration or search cap would be exceeded."""


class NotASubgroup(CosetlabError):
    """An argument expected to be a subgroup (or normal subgroup) is not."""


class HomomorphismError(CosetlabError):
    """Generator images do not define a homomorphism."""

    def __init__(self, message, relator=None):
        super().__init__(message)
        self.relator = relator


class CosetLimitExceeded(CosetlabError):
    """Coset enumeration hit ``max_cosets``; the result is inconclusive."""


class IncompleteTable(CosetlabError):
    """An operation needs a complete (and valid) coset table."""


class ParseError(CosetlabError):
    """Malformed input text; carries 1-based line and column."""

    def __init__(self, message, line=None, column=None):
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)
        self.line = line
        self.column = column
