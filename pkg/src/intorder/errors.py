"""Exception hierarchy.

Every domain error carries a short machine-readable ``code`` (the class name)
and an optional ``detail`` payload that the CLI serializes verbatim.
"""


class IntOrderError(Exception):
    """Base class for all domain errors raised by this package."""

    def __init__(self, message="", detail=None):
        super().__init__(message)
        self.detail = detail

    @property
    def code(self):
        return type(self).__name__


# order core
class CycleError(IntOrderError, ValueError):
    pass


class UnknownElement(IntOrderError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class NotAPermutation(IntOrderError, ValueError):
    pass


class InvalidExtension(IntOrderError, ValueError):
    pass


class NeedTwoExtensions(IntOrderError, ValueError):
    pass


# intervals
class EmptyInterval(IntOrderError, ValueError):
    pass


class DegenerateInterval(IntOrderError, ValueError):
    pass


class GroundSetMismatch(IntOrderError, ValueError):
    pass


class NotIntervalOrder(IntOrderError, ValueError):
    """Raised with ``witness`` set to an induced 2+2 embedding."""

    def __init__(self, message="", witness=None):
        super().__init__(message, detail=witness)
        self.witness = witness


class ParseError(IntOrderError, ValueError):
    pass


# reversal engine
class PairNotIncomparable(IntOrderError, ValueError):
    pass


class NotDisjoint(IntOrderError, ValueError):
    pass


class InternalCycle(IntOrderError, RuntimeError):
    """A pair set that must be reversible was not. Always a bug."""


# builders
class NotUnitMixed(IntOrderError, ValueError):
    pass


class NotZeroOne(IntOrderError, ValueError):
    pass


class NotClosed(IntOrderError, ValueError):
    pass


class Inconsistent(IntOrderError, ValueError):
    pass


class SelfCheckFailed(IntOrderError, RuntimeError):
    """A constructed realizer failed verification. Always a bug."""


# dimension
class LimitExceeded(IntOrderError):
    pass


class SizeBound(IntOrderError, ValueError):
    pass


class NotUnitInterval(IntOrderError, ValueError):
    pass


class IsChain(IntOrderError, ValueError):
    pass


# instances
class UnknownName(IntOrderError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class InvalidPolicy(IntOrderError, ValueError):
    pass
