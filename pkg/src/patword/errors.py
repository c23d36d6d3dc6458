"""Exception types shared by the engines and the CLI."""


class PatwordError(Exception):
    """Base class for all errors raised by patword."""


class InputError(PatwordError, ValueError):
    """Arguments outside the domain of an operation."""


class ResourceLimitError(PatwordError):
    """A configured size guard was exceeded (oracle scale, state cap, window)."""


class InvariantViolation(PatwordError, AssertionError):
    """A state bound that should hold by construction did not."""


class DataError(PatwordError):
    """Input data is malformed (bad generating function, bad cache file)."""
