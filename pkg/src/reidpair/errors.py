class ReidpairError(Exception):
    """Base class for all errors raised by this package."""


class StructuralError(ReidpairError):
    """Operands live in incompatible ambient spaces (e.g. different genera)."""


class PreconditionError(ReidpairError):
    """An operation was called outside its domain."""


class ConfigurationError(ReidpairError):
    """Invalid suite configuration (for instance genus below 4)."""


class UsageError(ReidpairError):
    """Malformed CLI input or payload."""

    def __init__(self, message, path=None):
        if path:
            message = f"{path}: {message}"
        super().__init__(message)
        self.path = path
