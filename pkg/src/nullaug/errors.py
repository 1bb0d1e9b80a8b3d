"""Exception hierarchy shared by all modules."""


class NullAugError(Exception):
    """Base class for errors raised by this package."""


class InvalidInputError(NullAugError, ValueError):
    pass


class InvalidNodeError(InvalidInputError, IndexError):
    pass


class RewireConflictError(NullAugError, ValueError):
    pass


class DegenerateSpectrumError(NullAugError, ValueError):
    pass


class ConvergenceError(NullAugError, RuntimeError):
    pass


class NoCandidateError(NullAugError):
    """No rewiring candidate exists at all (e.g. a complete graph for 0k)."""


class AttemptsExhaustedError(NullAugError):
    """Rejection sampling ran out of its per-swap attempt budget."""


class AugmentationFailedError(NullAugError):
    """An augmentation produced no usable output.

    ``log`` carries per-attempt or per-candidate diagnostics.
    """

    def __init__(self, message: str, log=None):
        super().__init__(message)
        self.log = list(log or [])


class DatasetFormatError(NullAugError, ValueError):
    pass


class DatasetConsistencyError(NullAugError, ValueError):
    pass


class StratificationError(NullAugError, ValueError):
    pass


class LabelError(NullAugError, ValueError):
    pass


class UndefinedGainError(NullAugError, ZeroDivisionError):
    pass
