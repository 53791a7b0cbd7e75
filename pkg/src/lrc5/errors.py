"""Exception hierarchy for the toolkit.

Every exception carries a short machine-readable ``code`` string which the
CLI prints on its single ``ERR <code>: <detail>`` stderr line.
"""


class LrcError(Exception):
    """Base class for all toolkit errors."""

    code = "Error"


class NotPrimeError(LrcError):
    code = "NotPrime"


class TooLargeError(LrcError):
    code = "TooLarge"


class NotADivisorError(LrcError):
    code = "NotADivisor"


class DivisibilityViolationError(LrcError):
    code = "DivisibilityViolation"


class DegenerateCodeError(LrcError):
    code = "DegenerateCode"


class LengthMismatchError(LrcError):
    code = "LengthMismatch"


class NotErasedError(LrcError):
    code = "NotErased"


class LocalRepairImpossibleError(LrcError):
    code = "LocalRepairImpossible"


class TooManyErasuresError(LrcError):
    code = "TooManyErasures"


class AmbiguousErasuresError(LrcError):
    code = "AmbiguousErasures"


class UndecodableError(LrcError):
    code = "Undecodable"


class NotDistinctError(LrcError):
    code = "NotDistinct"


class BudgetExceededError(LrcError):
    code = "BudgetExceeded"


class ConditionViolatedError(LrcError):
    code = "ConditionViolated"


class FormatError(LrcError):
    """Malformed artifact file (manifest, matrix CSV, codeword, message)."""

    code = "Format"


class ValidationError(LrcError):
    """Invalid combination of command-line parameters."""

    code = "Validation"
