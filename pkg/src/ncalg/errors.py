"""Exception hierarchy shared by all modules."""


class NcalgError(Exception):
    """Base class for all errors raised by this package."""


class ConfigurationError(NcalgError):
    """Mismatched field contexts, bad field order, invalid presets."""


class InputError(NcalgError):
    """Structurally invalid input (mixed degrees, points off the triangle, ...)."""


class ParseError(NcalgError):
    """Malformed coefficient, polynomial, or file syntax."""


class ResourceLimitError(NcalgError):
    """A configured cap (degree cap, group order cap) was exceeded."""


class SymmetryError(NcalgError):
    """A group element does not stabilize the ideal or span it is applied to."""


class ConsistencyError(NcalgError):
    """An internal cross-check failed (non-integer multiplicity, bad rank)."""
