"""Exception types shared across the package."""


class KLRError(Exception):
    """Base class for every error raised by this package."""


class InvalidInput(KLRError, ValueError):
    """An argument is malformed or violates a precondition.

    ``position`` is the 1-based position of the offending entry when the
    failure can be localised (residue sequences, words), otherwise None.
    """

    def __init__(self, message, position=None):
        super().__init__(message)
        self.position = position


class InvalidParameter(KLRError, ValueError):
    """A numeric parameter (usually ``n`` or a class label) is out of range."""


class VerificationFailure(KLRError):
    """A computed identity or relation did not hold.

    ``check`` names the failing identity; ``witness`` carries the offending
    data (a basis pair, a relation name, ...).
    """

    def __init__(self, check, message="", witness=None):
        super().__init__(f"{check}: {message}" if message else check)
        self.check = check
        self.witness = witness
