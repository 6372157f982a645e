from typing import (
    Optional,
)

from eth_utils import (
    ValidationError,
)


class ParseError(ValidationError):
    """
    Raised when an input file cannot be parsed. Carries the offending path and
    1-based line number when known.
    """
    def __init__(self, message: str, path: Optional[str]=None, line: Optional[int]=None) -> None:
        self.path = path
        self.line = line
        if path is not None and line is not None:
            message = "%s:%d: %s" % (path, line, message)
        elif path is not None:
            message = "%s: %s" % (path, message)
        super().__init__(message)


class DuplicateKeyError(ValidationError):
    pass


class TrainingError(ValidationError):
    pass


class FitError(ValidationError):
    pass


class DegeneratePriorError(ValidationError):
    pass


class EvaluationError(ValidationError):
    pass


class StageFailure(Exception):
    """
    A pipeline stage failed. ``stage`` names it, ``__cause__`` holds the error.
    """
    def __init__(self, stage: str, cause: BaseException) -> None:
        self.stage = stage
        self.cause = cause
        super().__init__("stage %r failed: %s" % (stage, cause))
