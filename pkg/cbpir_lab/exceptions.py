"""Domain faults raised across the laboratory apps.

Parameter problems are reported with django's ValidationError instead;
these classes cover arithmetic, protocol and transport failures.
"""


class CBPIRError(Exception):
    """Base class for every laboratory fault."""


class FieldConstructionError(CBPIRError):
    """No irreducible modulus was found within the search cap."""


class FieldArithmeticError(CBPIRError, ZeroDivisionError):
    """Inversion of zero in F_q or F_{q^s}."""


class DimensionMismatchError(CBPIRError, ValueError):
    """Operands are not conformal."""


class SingularMatrixError(CBPIRError, ArithmeticError):
    """A matrix that must be invertible is not."""


class SamplingCapExceeded(CBPIRError):
    """Rejection sampling gave up; usually an infeasible q/f combination."""


class DecodeSupportError(CBPIRError):
    """Decoded error part has support outside the information set complement."""


class RecoveryMismatchError(CBPIRError):
    """Recovered files differ from the reference database."""


class EnumerationCapExceeded(CBPIRError):
    """Subset enumeration would exceed the configured cap."""


class FrameError(CBPIRError):
    """Malformed or refused frame; `code` travels back in an ERROR frame."""

    def __init__(self, code, message=''):
        super().__init__(f"{code}: {message}" if message else code)
        self.code = code
        self.message = message


class ScalarCacheMismatchError(CBPIRError):
    """The Kronecker product used a different number of scalar multiples than the row has distinct values."""
