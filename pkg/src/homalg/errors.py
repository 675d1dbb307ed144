"""Exception hierarchy shared by every module."""

__all__ = [
    "HomAlgError",
    "DimensionError",
    "SingularMatrixError",
    "ScalarRingError",
    "ScalarSyntaxError",
    "ProductError",
    "PreconditionError",
    "InputError",
]


class HomAlgError(Exception):
    """Base class for all library errors."""


class DimensionError(HomAlgError, ValueError):
    pass


class SingularMatrixError(HomAlgError, ValueError):
    pass


class ScalarRingError(HomAlgError, TypeError):
    """An operation needs field division but got polynomial scalars."""


class ScalarSyntaxError(HomAlgError, ValueError):
    pass


class ProductError(HomAlgError, ValueError):
    """Unknown product name, or the wrong number of products for an operation."""


class PreconditionError(HomAlgError, ValueError):
    """A checked precondition failed; ``report`` holds the failing check."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class InputError(HomAlgError, ValueError):
    """Malformed input file; ``where`` names the offending field."""

    def __init__(self, message, where=None):
        if where:
            message = f"{where}: {message}"
        super().__init__(message)
        self.where = where
