class PEConicError(Exception):
    """Base class for every error raised by this package."""


class KindMismatch(PEConicError, ValueError):
    pass


class OutOfSector(PEConicError, ValueError):
    pass


class InvalidConic(PEConicError, ValueError):
    pass


class NoRealPEValues(PEConicError, ValueError):
    pass


class NotDiagonalizable(PEConicError, ValueError):
    pass


class NotApplicable(PEConicError, ValueError):
    pass


class BadParams(PEConicError, ValueError):
    pass


class UnknownId(PEConicError, LookupError):
    pass


class SampleOffConic(PEConicError, ValueError):
    pass


class ParseError(PEConicError, ValueError):
    pass


class ClassificationError(PEConicError, RuntimeError):
    """The decision cascade fell through; indicates a bug, never bad input."""
