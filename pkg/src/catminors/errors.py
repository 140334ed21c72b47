"""Exception types shared across the package."""


class CatminorsError(Exception):
    """Base class for all library errors."""


class DimensionError(CatminorsError, ValueError):
    """Operands live in incompatible ambient spaces (wrong n, d, or vector length)."""


class EmptyDomainError(CatminorsError, ValueError):
    """An enumeration was requested over an empty ground set (n = 0 with d > 0)."""


class DegenerateInputError(CatminorsError, ValueError):
    """An input that must be nonzero (a linear form, a dual socle generator) was zero."""


class ConfigurationError(CatminorsError, ValueError):
    """A bad runtime configuration, e.g. a composite modulus for modular mode."""


class ResourceLimitError(CatminorsError, RuntimeError):
    """A computation exceeds the feasibility envelope; the message suggests a cheaper strategy."""
