"""Exception hierarchy shared by every module."""


class EternalDominationError(Exception):
    """Base class for all errors raised by this package."""


class ParameterError(EternalDominationError, ValueError):
    """An argument is out of range or has the wrong arity."""


class StructureError(EternalDominationError, ValueError):
    """The input graph lacks a structural property the operation needs."""


class CapabilityError(EternalDominationError, RuntimeError):
    """The instance exceeds a configured size cap."""


class IntegrityError(EternalDominationError, RuntimeError):
    """An internal object that should be closed or consistent is not."""


class CertificateError(EternalDominationError, ValueError):
    """A strategy certificate failed verification."""

    def __init__(self, message, config=None, attack=None):
        super().__init__(message)
        self.config = config
        self.attack = attack


class FormatError(EternalDominationError, ValueError):
    """Malformed edge-list or certificate file."""
