"""Exception hierarchy for burau-forge."""

from typing import Optional


class BurauForgeError(Exception):
    """Base class for every error raised by the package"""


class AlgebraError(BurauForgeError):
    """Arithmetic that cannot be carried out exactly"""


class FieldMismatchError(AlgebraError):
    """Operands live over different coefficient fields"""


class NotInvertibleError(AlgebraError):
    """Inverse requested for a non-unit"""


class PoleError(AlgebraError):
    """Evaluation at a pole or at t = 0"""


class RadicalTowerOverflow(AlgebraError):
    """Adjoining another square root would exceed the tower cap"""


class ParseError(BurauForgeError):
    """Malformed textual input"""


class BraidError(BurauForgeError):
    """Strand index out of range or strand count mismatch"""


class PreconditionError(BurauForgeError):
    """Input violates the documented precondition of an operation"""


class CheckFailure(BurauForgeError):
    """A named verification did not hold"""

    def __init__(self, check_id: str, message: Optional[str] = None):
        self.check_id = check_id
        super().__init__(f"{check_id}: {message}" if message else check_id)


class BudgetExceeded(BurauForgeError):
    """A bounded search ran out of steps"""


class ConfigurationError(BurauForgeError):
    """Settings file or environment override is invalid"""
