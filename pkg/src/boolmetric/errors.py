"""Exception hierarchy shared by every module."""


class BoolMetricError(Exception):
    """Base class for all library errors."""


class DimensionError(BoolMetricError, ValueError):
    """Operands live over different rings, atom sets or ambient dimensions."""


class PartitionError(BoolMetricError, ValueError):
    """Coefficients are not a (complete) family of disjoint idempotents."""


class NotAUnitError(BoolMetricError, ArithmeticError):
    pass


class EmptySpaceError(BoolMetricError, ValueError):
    pass


class MembershipError(BoolMetricError, ValueError):
    """A point is not a member of the space a map is defined on."""


class ContainmentError(BoolMetricError, ValueError):
    pass


class PointingError(BoolMetricError, ValueError):
    """Two pointed spaces were expected to share their base point."""


class NormError(BoolMetricError, ValueError):
    """Images on a referential violate |f(x_i)| <= |x_i|."""


class ContractivityError(BoolMetricError, ValueError):
    pass


class TotalityError(BoolMetricError, ValueError):
    """A map table does not cover its whole domain."""


class NoKernelError(BoolMetricError, ValueError):
    pass


class LimitExceededError(BoolMetricError, RuntimeError):
    pass


class OracleFailure(BoolMetricError, AssertionError):
    def __init__(self, message, counterexample=None):
        super().__init__(message)
        self.counterexample = counterexample


class Cancelled(BoolMetricError):
    pass


def check_cancel(cancel):
    """Poll a cooperative cancellation token (anything with ``is_set``)."""
    if cancel is not None and cancel.is_set():
        raise Cancelled("operation cancelled")
