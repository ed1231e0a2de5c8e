"""Exception types raised by the toolkit."""


class CasimirPolderError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(CasimirPolderError, ValueError):
    """An argument lies outside the domain of the requested quantity."""


class NumericError(CasimirPolderError, ArithmeticError):
    """A numerical procedure failed to reach its accuracy target."""


class ConfigurationError(CasimirPolderError, ValueError):
    """A search or sweep was configured inconsistently."""
