"""Exception hierarchy shared by the library and the CLI."""


class MinkcxError(Exception):
    """Base class for all errors raised by minkcx."""


class StructuralError(MinkcxError, ValueError):
    """Malformed input: dimension mismatch, bad index, bad relation symbol."""


class ParseError(MinkcxError, ValueError):
    """A document could not be read; the message names the offending field."""


class OriginContainmentError(MinkcxError, ValueError):
    pass


class DomainError(MinkcxError, ValueError):
    """Operation called outside its domain (e.g. on the void complex)."""


class BudgetExceeded(MinkcxError):
    """An enumeration would exceed the configured cell budget."""


class VerificationError(MinkcxError, AssertionError):
    """A constructed object failed its own postcondition check.

    This always signals a bug; it is never expected on valid input.
    """
