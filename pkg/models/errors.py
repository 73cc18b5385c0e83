"""
Error hierarchy
"""


class ZcError(Exception):
    """Base class for every error raised by the toolkit"""


class InadmissibleError(ZcError, ValueError):
    """A word or index does not satisfy the admissibility conditions"""


class EvaluationError(ZcError):
    """A numerical evaluation could not be carried out"""


class ConvergenceError(EvaluationError):
    """A truncated series failed to reach the requested precision"""


class SequenceError(ZcError, ValueError):
    """A seed sequence is too short or violates the guessed identity"""

    def __init__(self, message: str, index: int = -1):
        super().__init__(message)
        self.index = index


class CacheFormatError(ZcError):
    """The persistent evaluation cache cannot be read"""
