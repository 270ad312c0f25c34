"""Exception hierarchy shared across the package."""


class DDWError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInputError(DDWError):
    """An operation received arguments that violate its documented preconditions."""


class ConfigError(DDWError):
    """A configuration value is outside its allowed range."""


class InvalidStateError(DDWError):
    """An operation needs cached state (fitness, quality) that is missing."""


class DataFormatError(DDWError):
    """A file could not be parsed (bad header, non-numeric field)."""


class DataValidationError(DDWError):
    """A file parsed fine but violates a dataset invariant."""
